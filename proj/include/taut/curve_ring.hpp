#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "taut/element.hpp"
#include "taut/matrix.hpp"

namespace taut {

using Pair = std::pair<int, int>;
/// Perfect matching of its support; pairs (j,k) with j<k, sorted.
using Matching = std::vector<Pair>;

IndexSet support(const Matching& b);

/// All perfect matchings of s, in the order obtained by pairing the smallest
/// remaining element with each partner in increasing order.
std::vector<Matching> perfect_matchings(IndexSet s);

/// a(v)b(v): a product of distinct a_i over A and b_{j,k} over a matching B
/// with support disjoint from A.
struct StandardCurveMonomial {
  IndexSet a = 0;
  Matching b;

  int degree() const { return sets::size(a) + static_cast<int>(b.size()); }
  IndexSet variables() const { return a | support(b); }
  Monomial to_monomial() const;

  bool operator==(const StandardCurveMonomial&) const = default;
};

std::strong_ordering operator<=>(const StandardCurveMonomial& x, const StandardCurveMonomial& y);

/// Reads a monomial in a/b generators as (A, B) if it is standard.
std::optional<StandardCurveMonomial> as_standard_curve(const Monomial& m);

/// The curve ring's rewriting rules on a single a/b/d monomial. Every rule
/// sends a monomial to a multiple of one monomial, so after expanding d the
/// result is a combination of standard monomials.
Element curve_normal_form(const Element& e, int n);

/// Standard monomials of R^d(C^n), sorted by the monomial order; empty when d
/// is out of range. With `within` set, only variables in that set are used.
std::vector<StandardCurveMonomial> enumerate_standard_curve(int n, int d);
std::vector<StandardCurveMonomial> enumerate_standard_curve_on(IndexSet within, int d);

/// Complement of A ∪ supp(B) as the new A, same matching.
StandardCurveMonomial curve_dual(const StandardCurveMonomial& v, int n);
StandardCurveMonomial curve_dual_on(const StandardCurveMonomial& v, IndexSet within);

/// Coefficient of a_1...a_n in the normal form of a degree-n element.
Rational curve_socle_eval(const Element& e, int n);

/// Socle value of the product of two standard monomials over the variable set
/// `within` (the product must use all of it with degree |within|).
Rational curve_pair(const StandardCurveMonomial& v, const StandardCurveMonomial& w);

RationalMatrix curve_pairing_matrix(int n, int d);
std::size_t curve_betti(int n, int d);

/// Gram matrix of the degree-m pure matching monomials in R^m(C^{2m}).
RationalMatrix t_matrix(int m);

/// R_{ijkl} times every matching of the other 2m-4 indices, in matching
/// coordinates (the order of perfect_matchings).
std::vector<RationalVector> three_term_kernel(int m);

/// Number of standard Young tableaux of the given shape.
Integer hook_length_dimension(const std::vector<int>& partition);

struct TabloidSpace {
  int m = 0;
  std::vector<Matching> matchings;
  Integer irreducible_dimension;  // dimension of the 2^m irreducible

  explicit TabloidSpace(int half_size);
};

/// (2m-1)!!
Integer double_factorial_odd(int m);

/// Curve-ring elements of C^n are carried with ambient n+1 so that indices
/// up to n validate.
inline int curve_ambient(int n) { return n + 1; }

}  // namespace taut
