#include "taut/generator.hpp"

#include "taut/errors.hpp"

namespace taut {

std::strong_ordering operator<=>(const Generator& x, const Generator& y) {
  if (x.kind != y.kind) return x.kind <=> y.kind;
  switch (x.kind) {
    case GenKind::A:
      return x.first <=> y.first;
    case GenKind::B:
    case GenKind::D:
      if (x.first != y.first) return x.first <=> y.first;
      return x.second <=> y.second;
    case GenKind::E:
    case GenKind::Bd:
      if (x.first == y.first) return std::strong_ordering::equal;
      return sets::subset_less(x.first, y.first) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool is_admissible(const Generator& g, int n) {
  switch (g.kind) {
    case GenKind::A:
      return g.index() >= 1 && g.index() <= n - 1;
    case GenKind::B:
    case GenKind::D:
      return g.lo() >= 1 && g.lo() < g.hi() && g.hi() <= n - 1;
    case GenKind::E:
      return sets::is_subset(g.set(), sets::range(n)) && sets::size(g.set()) <= n - 3;
    case GenKind::Bd:
      return sets::is_subset(g.set(), sets::range(n)) && sets::size(g.set()) >= 2;
  }
  return false;
}

void validate(const Generator& g, int n) {
  if (!is_admissible(g, n)) {
    throw IndexError("generator " + to_string(g) + " is out of range for n=" + std::to_string(n));
  }
}

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case GenKind::A:
      return "a_" + std::to_string(g.index());
    case GenKind::B:
      return "b_{" + std::to_string(g.lo()) + "," + std::to_string(g.hi()) + "}";
    case GenKind::D:
      return "d_{" + std::to_string(g.lo()) + "," + std::to_string(g.hi()) + "}";
    case GenKind::E: {
      if (g.set() == 0) return "E0";
      std::string s = sets::to_string(g.set());
      return "E_" + s;
    }
    case GenKind::Bd:
      return "D_" + sets::to_string(g.set());
  }
  return "?";
}

}  // namespace taut
