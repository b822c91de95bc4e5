#pragma once

#include <string>
#include <vector>

#include "taut/blowup_ring.hpp"

namespace taut {

/// Boundary divisor D_I of M_{1,n}^{ct} as an element.
Element boundary_divisor(IndexSet I, int n);

/// Ring map R*(M_{1,n}^{ct}) -> R*(Ū_{n-1}) on D_I generators:
///   D_{i,n} -> a_i - sum E_I over admissible I ⊆ [n-1] - i
///   D_{j,k} -> d_{j,k} - sum E_I over admissible I ⊆ [n] - {j,k}
///   D_J     -> E_{J^c} for |J| >= 3
/// Generators other than D_I pass through unchanged.
Element pullback_F(const Element& x, int n);

/// Ring map back: a_i -> sum_{i,n in I} D_I, d_{j,k} -> sum_{j,k in I} D_I,
/// b_{j,k} -> d_{j,k} - a_j - a_k, E_I -> D_{I^c}.
Element pushdown_G(const Element& e, int n);

/// psi_i = sum of D_I over i in I.
Element psi_class(int i, int n);
/// psi_i = sum of D_I over i in I, j, k not in I.
Element psi_genus0(int i, int j, int k, int n);

/// D_I -> D_I + D_{I + (n+1)}; the result lives on n+1 markings.
Element forgetful_pullback(const Element& x, int n_from);

/// Boundary strata classes on four markings.
Element delta_22();
Element delta_23();
Element delta_24();
Element delta_34();
/// 12 delta_22 - 4 delta_23 - 2 delta_24 + 6 delta_34.
Element getzler_ct_relation();

/// Exact Bernoulli number B_k with B_1 = -1/2.
Rational bernoulli(int k);

/// multinomial(2g-3+n; alphas) (2^{2g-1}-1)/2^{2g-1} |B_{2g}|/(2g)!.
/// Throws DomainError unless sum(alphas) = 2g-3+n and g >= 1.
Rational lambda_integral(int g, const std::vector<int>& alphas);

/// Socle value of F^*(x) divided by 24. Throws DomainError unless x is
/// homogeneous of degree n-1.
Rational epsilon_eval(const Element& x, int n);

/// Degree-2 part of the ideal used for the boundary pullback computations on Ū_{n-1}:
/// all relation families except the curve relations that are being derived
/// (three-term always, and b_{i,j}b_{i,k} - a_i b_{j,k} when n = 4).
class LocalIdeal {
 public:
  explicit LocalIdeal(int n);
  int n() const { return n_; }
  /// Canonical representative of x modulo the ideal (d expanded).
  Element normal_form(const Element& x) const;
  bool contains(const Element& x) const { return normal_form(x).is_zero(); }

 private:
  int n_;
  std::vector<Monomial> columns_;
  RowEchelon echelon_;
};

struct GetzlerCheck {
  std::string name;
  Element computed;  // local normal form of the pullback
  Element expected;  // local normal form of the displayed value
  bool passed = false;
};

struct GetzlerReport {
  std::vector<GetzlerCheck> checks;
  Element relation4;  // F^* of the relation, as 12(a_1 b_{2,3} - b_{1,2} b_{1,3})
  Element relation5;  // (pi F)^* of the relation, as 12 R_{1234}
  bool passed() const;
};

/// Recomputes the Getzler pullbacks: pullbacks of the four classes at n = 4 and
/// through the forgetful map at n = 5, compared with the displayed formulas
/// modulo LocalIdeal; the resulting relations must survive in the local
/// quotient and vanish in R*(Ū_{n-1}).
GetzlerReport verify_getzler_pullbacks();

/// The expected pullback displays, verbatim.
Element getzler_display_4(const std::string& which);
Element getzler_display_5(const std::string& which);

}  // namespace taut
