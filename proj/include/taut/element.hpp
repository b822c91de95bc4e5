#pragma once

#include <map>
#include <optional>
#include <string>

#include "taut/monomial.hpp"
#include "taut/rational.hpp"

namespace taut {

/// Sparse Q-linear combination of monomials over an ambient marking count n.
/// Zero coefficients are never stored; all arithmetic is exact.
class Element {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Element() = default;
  explicit Element(int ambient) : ambient_(ambient) {}
  Element(int ambient, const Rational& constant);
  Element(int ambient, const Monomial& m, const Rational& coeff = 1);
  Element(int ambient, const Generator& g, const Rational& coeff = 1);

  int ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  /// Degree of the single graded piece, or nullopt when mixed (zero is
  /// homogeneous of every degree and reports nullopt too).
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  /// Graded piece of degree d.
  Element component(int d) const;
  int max_degree() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);
  Element& operator*=(const Element& other);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(Element x, const Rational& c) { return x *= c; }
  friend Element operator*(const Rational& c, Element x) { return x *= c; }
  friend Element operator*(const Element& x, const Element& y);

  Element pow(int k) const;

  bool operator==(const Element& other) const { return terms_ == other.terms_; }

 private:
  int ambient_ = 0;
  TermMap terms_;
};

/// Free commutative product; throws AmbientMismatch on different ambients.
Element multiply(const Element& x, const Element& y);

/// Canonical text in the expression grammar, terms in increasing monomial
/// order. parse_expression(to_string(e), n) == e.
std::string to_string(const Element& e);

}  // namespace taut
