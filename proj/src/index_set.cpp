#include "taut/index_set.hpp"

#include <algorithm>

namespace taut::sets {

std::vector<IndexSet> subsets_by_size(int n, int lo, int hi) {
  std::vector<IndexSet> out;
  if (n < 0) return out;
  const IndexSet full = range(n);
  for (IndexSet s = 0;; ++s) {
    const int k = size(s);
    if (k >= lo && k <= hi) out.push_back(s);
    if (s == full) break;
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

}  // namespace taut::sets
