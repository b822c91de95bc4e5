#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace taut {

/// Subset of {1..31}; element i is stored in bit i-1.
using IndexSet = std::uint32_t;

namespace sets {

constexpr IndexSet singleton(int i) { return IndexSet{1} << (i - 1); }
constexpr IndexSet range(int n) { return n <= 0 ? 0 : (n >= 32 ? ~IndexSet{0} : (IndexSet{1} << n) - 1); }
constexpr bool contains(IndexSet s, int i) { return (s >> (i - 1)) & 1U; }
constexpr int size(IndexSet s) { return std::popcount(s); }
constexpr bool is_subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }
constexpr bool is_strict_subset(IndexSet a, IndexSet b) { return a != b && is_subset(a, b); }
/// Smallest element, or 0 for the empty set.
constexpr int min_element(IndexSet s) { return s == 0 ? 0 : std::countr_zero(s) + 1; }
constexpr int max_element(IndexSet s) { return s == 0 ? 0 : 32 - std::countl_zero(s); }

inline std::vector<int> elements(IndexSet s) {
  std::vector<int> out;
  out.reserve(std::popcount(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline IndexSet from_elements(const std::vector<int>& xs) {
  IndexSet s = 0;
  for (int x : xs) s |= singleton(x);
  return s;
}

/// The order on index sets: smaller cardinality first; among sets of equal
/// size, I < J when the least element of I\J is below the least of J\I.
constexpr bool subset_less(IndexSet a, IndexSet b) {
  const int sa = std::popcount(a), sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  const IndexSet diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

/// I ⊆ J, J ⊆ I, or I ∪ J = {1..n}.
constexpr bool star_compatible(IndexSet a, IndexSet b, int n) {
  return is_subset(a, b) || is_subset(b, a) || (a | b) == range(n);
}

/// "{1,2,5}" style rendering; "{}" for the empty set.
inline std::string to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

/// All subsets of {1..n} with size in [lo, hi], sorted by subset_less.
std::vector<IndexSet> subsets_by_size(int n, int lo, int hi);

}  // namespace sets
}  // namespace taut
