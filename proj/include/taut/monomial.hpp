#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "taut/generator.hpp"

namespace taut {

/// Commutative monomial in degree-one generators. Factors are kept sorted by
/// the generator order with strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Generator, int>;

  Monomial() = default;
  explicit Monomial(const Generator& g, int exponent = 1);
  Monomial(std::initializer_list<Factor> factors);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }
  int exponent(const Generator& g) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  Monomial pow(int k) const;
  /// Removes one power of g; g must divide the monomial.
  Monomial without(const Generator& g, int times = 1) const;

  bool operator==(const Monomial&) const = default;

  std::size_t hash() const noexcept;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Graded order: lower degree first, then lexicographic on the expanded
/// generator sequence.
std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

std::string to_string(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace taut
