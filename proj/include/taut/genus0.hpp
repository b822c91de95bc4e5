#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "taut/rational.hpp"

namespace taut::genus0 {

/// Divisor class on M̄_{0,N} with markings 0..N-1: a combination of boundary
/// divisors D_S and psi classes. Boundary divisors are keyed by the side S
/// not containing marking N-1 (bit i is marking i), 2 <= |S| <= N-2.
struct DivisorClass {
  std::map<std::uint32_t, Rational> boundary;
  std::map<int, Rational> psi;

  bool is_zero() const { return boundary.empty() && psi.empty(); }
  void add_boundary(std::uint32_t side, const Rational& c);
  void add_psi(int i, const Rational& c);

  auto operator<=>(const DivisorClass&) const = default;
  bool operator==(const DivisorClass&) const = default;
};

/// Canonical side of the boundary divisor separating `side` from its
/// complement among N markings.
std::uint32_t canonical_side(std::uint32_t side, int N);

/// ∫_{M̄_{0,N}} of a product of N-3 divisor classes, computed by restricting
/// to boundary divisors (whose normal bundle is -psi_x - psi_y) and finishing
/// with <tau_{a_1}...tau_{a_N}> = (N-3)!/prod a_i!. Sub-integrals are
/// memoised.
Rational integrate(int N, std::vector<DivisorClass> factors);

/// Pullback of a class to the boundary divisor D_side ≅ M̄_{0,|side|+1} ×
/// M̄_{0,N-|side|+1}. Markings on each factor are relabelled in increasing
/// order with the node last. D_side itself restricts to -psi of the node.
struct Restriction {
  DivisorClass on_side;
  DivisorClass on_complement;
  int side_markings = 0;
  int complement_markings = 0;
};
Restriction restrict_to_boundary(const DivisorClass& f, std::uint32_t side, int N);

/// psi_i = sum of D_S over i in S, j,k not in S.
DivisorClass psi_as_boundary(int N, int i, int j, int k);

}  // namespace taut::genus0
