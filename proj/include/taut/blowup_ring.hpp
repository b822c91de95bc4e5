#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "taut/curve_ring.hpp"
#include "taut/element.hpp"

namespace taut {

/// Exceptional part of a monomial: (I, exponent) pairs with exponent >= 1,
/// sorted increasingly by the index-set order.
using EPart = std::vector<std::pair<IndexSet, int>>;

int degree(const EPart& e);
Monomial to_monomial(const EPart& e);

/// Inclusion forest of a family of pairwise star-compatible index sets.
/// Vertices are sorted by the index-set order; edges go from a set to its
/// minimal strict supersets.
struct Forest {
  int n = 0;
  std::vector<IndexSet> vertices;
  std::vector<std::vector<int>> children;
  std::vector<int> roots;

  int size() const { return static_cast<int>(vertices.size()); }
  int deg(int r) const { return static_cast<int>(children[static_cast<std::size_t>(r)].size()); }
  bool is_external(int r) const { return children[static_cast<std::size_t>(r)].empty(); }
  std::vector<int> closure(int r) const;
  /// Intersection of the strict supersets of vertex r ({1..n} if none).
  IndexSet superset_intersection(int r) const;
  /// Intersection of all vertices ({1..n} for the empty forest).
  IndexSet intersection() const;
  /// j_r = min of the complement, for each root containing n.
  std::vector<std::pair<int, int>> root_minima() const;
};

/// Throws DomainError on a star-incompatible pair, a repeated set or an
/// inadmissible set (|I| > n-3).
Forest build_forest(std::vector<IndexSet> sets, int n);

/// The variable set S of a monomial with this exceptional part ({1..n-1}
/// when there is none).
IndexSet s_set(const EPart& e, int n);
IndexSet s_set(const Forest& f);

/// Largest exponent allowed on vertex r of a standard monomial.
int exponent_bound(const Forest& f, int r);

struct StandardBlowupMonomial {
  IndexSet a = 0;
  Matching b;
  EPart e;

  StandardCurveMonomial curve() const { return {a, b}; }
  int degree() const { return sets::size(a) + static_cast<int>(b.size()) + taut::degree(e); }
  Monomial to_monomial() const;

  bool operator==(const StandardBlowupMonomial&) const = default;
};

/// Splits a monomial in a/b/E generators into (A, B, E-part) if its a/b part
/// is square-free with disjoint supports.
std::optional<StandardBlowupMonomial> split_monomial(const Monomial& m);

bool is_standard(const StandardBlowupMonomial& v, int n);
bool is_standard(const Monomial& m, int n);

/// The order "<" on exceptional parts: compare exponents from the largest
/// index set down; at the first difference the smaller exponent is smaller.
bool e_less(const EPart& x, const EPart& y);
/// Every exceptional factor of w is below every exceptional factor of v.
bool much_less(const EPart& w, const EPart& v);

/// Standard monomials sorted by exceptional part, then curve part.
bool standard_less(const StandardBlowupMonomial& x, const StandardBlowupMonomial& y);

StandardBlowupMonomial blowup_dual(const StandardBlowupMonomial& v, int n);

/// deg a(v)b(v) + n - |intersection of roots| - #roots; deg v without E.
int filtration_level(const StandardBlowupMonomial& v, int n);

/// Exceptional parts of standard monomials with total degree <= max_degree.
std::vector<EPart> standard_epatterns(int n, int max_degree);

std::vector<StandardBlowupMonomial> enumerate_standard_blowup(int n, int d);

std::string to_string(const StandardBlowupMonomial& v);

}  // namespace taut

#include "taut/genus0.hpp"

namespace taut {

/// Image of a degree-1 generator (a, b, d, E or a boundary divisor D_I of the
/// moduli space) on M̄_{0,n+2}, where the two extra markings are the glued
/// points. Marking i is bit i-1.
genus0::DivisorClass glued_class(const Generator& g, int n);

/// Degree map R^{n-1}(Ū_{n-1}) -> Q normalised by a_1...a_{n-1} -> 1.
/// Throws DomainError unless e is homogeneous of degree n-1 (or zero).
Rational blowup_socle_eval(const Element& e, int n);
Rational blowup_socle_eval(const Monomial& m, int n);
/// Socle value of a product of n-1 homogeneous degree-1 elements, without
/// expanding the product.
Rational blowup_socle_eval_product(const std::vector<Element>& linear_factors, int n);

}  // namespace taut

namespace taut {

/// A relation of R*(Ū_{n-1}) tagged with the family it comes from.
struct LabeledRelation {
  std::string family;
  Element value;
};

/// Relation families, in the order they are generated:
///   curve-square     a_i^2
///   curve-ab         a_i b_{i,j}
///   curve-bsquare    b_{i,j}^2 + 2 a_i a_j
///   curve-bb         b_{i,j} b_{i,k} - a_i b_{j,k}
///   curve-three-term b_{i,j} b_{k,l} + b_{i,k} b_{j,l} + b_{i,l} b_{j,k}
///   star             E_I E_J for star-incompatible I, J
///   kernel           x E_I for degree-1 x vanishing on the center X_I
///   exceptional-restriction
///                    (b_{i,k} - sum_{J ⊆ I-i} E_J + a_i + a_k) E_I, n, i in I
///   transversal      P_W(-sum E_J) E_I for X_I ∩ W = X_K, K ⊊ I
///   center           P_{X_I}(-sum_{J ⊆ I} E_J)
/// d_{j,k} is always written as b_{j,k} + a_j + a_k.
std::vector<LabeledRelation> labeled_relation_generators(int n);
std::vector<Element> relation_generators(int n);

/// Degree-1 generators cutting out X_I in C^{n-1} (d expanded).
std::vector<Element> center_presentation(IndexSet I, int n);

/// Replaces every d_{j,k} by b_{j,k} + a_j + a_k.
Element expand_diagonals(const Element& e);

}  // namespace taut

#include "taut/matrix.hpp"

namespace taut {

/// Block entry of the pairing: v and w share their exceptional sets and the
/// exponents add up to the top pattern. Returns (-1)^eps times the curve
/// socle of a(v)b(v)a(w)b(w) completed by the a_i outside S, where
/// eps = n + |intersection| + sum of vertex degrees. Throws DomainError on a
/// pattern mismatch.
Rational identity5_eval(const StandardBlowupMonomial& v, const StandardBlowupMonomial& w, int n);

enum class PairingMode {
  Blocks,  // diagonal blocks only, from identity5_eval
  Full,    // every entry from the socle evaluation
};

/// Pairing between standard monomials of degree d (rows) and the duals of
/// the same list (columns): entry (i, j) = <v_i, v_j^*>.
struct BlowupPairing {
  int n = 0;
  int d = 0;
  std::vector<StandardBlowupMonomial> monomials;
  RationalMatrix matrix;
  std::size_t betti = 0;
};

BlowupPairing pairing_matrix_blowup(int n, int d, PairingMode mode = PairingMode::Blocks, int jobs = 1);

/// Lifted three-term relations among the given standard monomials, one row
/// per relation (columns index `monomials`).
RationalMatrix lifted_three_term_rows(const std::vector<StandardBlowupMonomial>& monomials);

struct PairingReport {
  int n = 0;
  PairingMode mode = PairingMode::Blocks;
  std::vector<std::size_t> standard_counts;
  std::vector<std::size_t> dims;          // rank of the pairing
  std::vector<std::size_t> upper_bounds;  // standard count minus lifted relations
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Ranks every pairing R^d x R^{n-1-d}; checks symmetry, a one-dimensional
/// socle and that each rank meets the upper bound from the lifted three-term
/// relations (so the pairing is perfect). Full mode also checks block
/// triangularity and the block entries against the socle evaluation.
PairingReport verify_gorenstein(int n, PairingMode mode = PairingMode::Blocks, int jobs = 1);

/// A basis of R^d(Ū_{n-1}) chosen greedily among standard monomials.
const std::vector<StandardBlowupMonomial>& blowup_basis(int n, int d);

/// Coordinates in blowup_basis, read off from socle pairings against every
/// standard monomial of complementary degree. The result is a combination
/// of basis monomials equal to e in the ring.
Element blowup_reduce(const Element& e, int n);

/// Dimension of the degree-d part of the free algebra on a, b, E modulo the
/// ideal of relation_generators(n). Throws DomainError for n > 5 unless
/// `allow_large` is set.
std::size_t brute_force_betti(int n, int d, bool allow_large = false);

/// Degree-1 generators a_i, b_{j,k}, E_I of the blow-up ring.
std::vector<Generator> blowup_generators(int n);
std::vector<Monomial> monomials_of_degree(const std::vector<Generator>& gens, int d);

}  // namespace taut
