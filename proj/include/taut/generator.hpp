#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "taut/index_set.hpp"

namespace taut {

/// Degree-one generators shared by every ring in the project.
///   A(i)     a_i        point class pulled back from the i-th factor
///   B(j,k)   b_{j,k}    d_{j,k} - a_j - a_k
///   D(j,k)   d_{j,k}    diagonal x_j = x_k
///   E(I)     E_I        exceptional divisor over X_I
///   Bd(I)    D_I        boundary divisor of M_{1,n}^{ct}
enum class GenKind : std::uint8_t { A = 0, B = 1, D = 2, E = 3, Bd = 4 };

struct Generator {
  GenKind kind = GenKind::A;
  std::uint32_t first = 0;   // i for A; j for B/D; index-set bits for E/Bd
  std::uint32_t second = 0;  // k for B/D; unused otherwise

  static constexpr Generator a(int i) { return {GenKind::A, static_cast<std::uint32_t>(i), 0}; }
  static constexpr Generator b(int j, int k) {
    return j < k ? Generator{GenKind::B, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)}
                 : Generator{GenKind::B, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j)};
  }
  static constexpr Generator d(int j, int k) {
    return j < k ? Generator{GenKind::D, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)}
                 : Generator{GenKind::D, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j)};
  }
  static constexpr Generator exc(IndexSet s) { return {GenKind::E, s, 0}; }
  static constexpr Generator boundary(IndexSet s) { return {GenKind::Bd, s, 0}; }

  int index() const { return static_cast<int>(first); }
  int lo() const { return static_cast<int>(first); }
  int hi() const { return static_cast<int>(second); }
  IndexSet set() const { return first; }

  bool operator==(const Generator&) const = default;
};

/// Canonical total order: A(1) < ... < B pairs lex < D pairs lex < E by the
/// index-set order < D_I by the index-set order.
std::strong_ordering operator<=>(const Generator& x, const Generator& y);

/// Throws IndexError unless the generator is admissible for n markings:
/// a/b/d indices in 1..n-1, E_I with I ⊆ {1..n} and |I| <= n-3,
/// D_I with I ⊆ {1..n} and |I| >= 2.
void validate(const Generator& g, int n);

bool is_admissible(const Generator& g, int n);

std::string to_string(const Generator& g);

struct GeneratorHash {
  std::size_t operator()(const Generator& g) const noexcept {
    return (static_cast<std::size_t>(g.kind) << 60) ^ (static_cast<std::size_t>(g.first) << 20) ^ g.second;
  }
};

}  // namespace taut
