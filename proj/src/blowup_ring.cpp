#include "taut/blowup_ring.hpp"

#include <algorithm>
#include <functional>

#include "taut/errors.hpp"

namespace taut {

int degree(const EPart& e) {
  int d = 0;
  for (const auto& [s, k] : e) d += k;
  return d;
}

Monomial to_monomial(const EPart& e) {
  std::vector<Monomial::Factor> fs;
  for (const auto& [s, k] : e) fs.emplace_back(Generator::exc(s), k);
  return Monomial::from_factors(std::move(fs));
}

std::vector<int> Forest::closure(int r) const {
  std::vector<int> out;
  for (int s = 0; s < size(); ++s)
    if (sets::is_subset(vertices[static_cast<std::size_t>(r)], vertices[static_cast<std::size_t>(s)])) out.push_back(s);
  return out;
}

IndexSet Forest::superset_intersection(int r) const {
  IndexSet cap = sets::range(n);
  const IndexSet me = vertices[static_cast<std::size_t>(r)];
  for (IndexSet s : vertices)
    if (sets::is_strict_subset(me, s)) cap &= s;
  return cap;
}

IndexSet Forest::intersection() const {
  IndexSet cap = sets::range(n);
  for (IndexSet s : vertices) cap &= s;
  return cap;
}

std::vector<std::pair<int, int>> Forest::root_minima() const {
  std::vector<std::pair<int, int>> out;
  for (int r : roots) {
    const IndexSet s = vertices[static_cast<std::size_t>(r)];
    if (sets::contains(s, n)) out.emplace_back(r, sets::min_element(sets::range(n) & ~s));
  }
  return out;
}

Forest build_forest(std::vector<IndexSet> sets_in, int n) {
  Forest f;
  f.n = n;
  std::sort(sets_in.begin(), sets_in.end(), sets::subset_less);
  for (std::size_t i = 0; i < sets_in.size(); ++i) {
    const IndexSet s = sets_in[i];
    if (!sets::is_subset(s, sets::range(n)) || sets::size(s) > n - 3)
      throw DomainError("index set " + sets::to_string(s) + " is not admissible for n=" + std::to_string(n));
    if (i > 0 && sets_in[i - 1] == s) throw DomainError("repeated index set " + sets::to_string(s));
    for (std::size_t j = 0; j < i; ++j)
      if (!sets::star_compatible(sets_in[j], s, n))
        throw DomainError("index sets " + sets::to_string(sets_in[j]) + " and " + sets::to_string(s) +
                          " violate the star condition");
  }
  f.vertices = std::move(sets_in);
  const int m = f.size();
  f.children.assign(static_cast<std::size_t>(m), {});
  for (int r = 0; r < m; ++r) {
    const IndexSet me = f.vertices[static_cast<std::size_t>(r)];
    bool has_subset = false;
    for (int s = 0; s < m; ++s) {
      const IndexSet other = f.vertices[static_cast<std::size_t>(s)];
      if (sets::is_strict_subset(other, me)) has_subset = true;
      if (!sets::is_strict_subset(me, other)) continue;
      bool minimal = true;
      for (int t = 0; t < m && minimal; ++t) {
        const IndexSet mid = f.vertices[static_cast<std::size_t>(t)];
        if (sets::is_strict_subset(me, mid) && sets::is_strict_subset(mid, other)) minimal = false;
      }
      if (minimal) f.children[static_cast<std::size_t>(r)].push_back(s);
    }
    if (!has_subset) f.roots.push_back(r);
  }
  return f;
}

IndexSet s_set(const Forest& f) {
  const int n = f.n;
  if (f.size() == 0) return sets::range(n - 1);
  const IndexSet cap = f.intersection();
  IndexSet s = 0;
  for (const auto& [r, j] : f.root_minima()) s |= sets::singleton(j);
  // When n is outside the intersection, the root without n contributes no
  // element and the root minima above are exactly those of the other roots.
  return s | (cap & ~sets::singleton(n));
}

IndexSet s_set(const EPart& e, int n) {
  std::vector<IndexSet> vs;
  for (const auto& [s, k] : e) vs.push_back(s);
  return s_set(build_forest(vs, n));
}

int exponent_bound(const Forest& f, int r) {
  const int n = f.n;
  const int size = sets::size(f.vertices[static_cast<std::size_t>(r)]);
  const int outer = n - 2 - size;
  if (f.is_external(r)) return outer;
  const int inner = sets::size(f.superset_intersection(r)) - size + f.deg(r) - 2;
  return std::min(outer, inner);
}

Monomial StandardBlowupMonomial::to_monomial() const { return curve().to_monomial() * taut::to_monomial(e); }

std::optional<StandardBlowupMonomial> split_monomial(const Monomial& m) {
  std::vector<Monomial::Factor> ab;
  StandardBlowupMonomial v;
  for (const auto& [g, k] : m.factors()) {
    if (g.kind == GenKind::E) {
      v.e.emplace_back(g.set(), k);
    } else if (g.kind == GenKind::A || g.kind == GenKind::B) {
      ab.emplace_back(g, k);
    } else {
      return std::nullopt;
    }
  }
  auto c = as_standard_curve(Monomial::from_factors(std::move(ab)));
  if (!c) return std::nullopt;
  v.a = c->a;
  v.b = c->b;
  return v;
}

namespace {

std::optional<Forest> try_forest(const EPart& e, int n) {
  std::vector<IndexSet> vs;
  for (const auto& [s, k] : e) vs.push_back(s);
  try {
    return build_forest(vs, n);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

bool is_standard(const StandardBlowupMonomial& v, int n) {
  auto f = try_forest(v.e, n);
  if (!f) return false;
  const IndexSet s = s_set(*f);
  if (!sets::is_subset(v.a | support(v.b), s)) return false;
  if (v.a & support(v.b)) return false;
  for (int r = 0; r < f->size(); ++r)
    if (v.e[static_cast<std::size_t>(r)].second > exponent_bound(*f, r)) return false;
  return true;
}

bool is_standard(const Monomial& m, int n) {
  auto v = split_monomial(m);
  return v && is_standard(*v, n);
}

bool e_less(const EPart& x, const EPart& y) {
  auto i = x.rbegin();
  auto j = y.rbegin();
  while (i != x.rend() || j != y.rend()) {
    if (j == y.rend() || (i != x.rend() && sets::subset_less(j->first, i->first))) return false;  // x has a larger set
    if (i == x.rend() || sets::subset_less(i->first, j->first)) return true;                     // y has a larger set
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return false;
}

bool much_less(const EPart& w, const EPart& v) {
  for (const auto& [s, k] : w)
    for (const auto& [t, l] : v)
      if (!sets::subset_less(s, t)) return false;
  return true;
}

bool standard_less(const StandardBlowupMonomial& x, const StandardBlowupMonomial& y) {
  if (x.e != y.e) return e_less(x.e, y.e);
  return x.curve() < y.curve();
}

StandardBlowupMonomial blowup_dual(const StandardBlowupMonomial& v, int n) {
  std::vector<IndexSet> vs;
  for (const auto& [s, k] : v.e) vs.push_back(s);
  const Forest f = build_forest(vs, n);
  StandardBlowupMonomial out;
  const IndexSet s = s_set(f);
  out.a = s & ~(v.a | support(v.b));
  out.b = v.b;
  for (int r = 0; r < f.size(); ++r) {
    const int size = sets::size(f.vertices[static_cast<std::size_t>(r)]);
    const int i = v.e[static_cast<std::size_t>(r)].second;
    const int j = f.is_external(r) ? n - 1 - size - i
                                   : sets::size(f.superset_intersection(r)) - size + f.deg(r) - 1 - i;
    out.e.emplace_back(f.vertices[static_cast<std::size_t>(r)], j);
  }
  return out;
}

int filtration_level(const StandardBlowupMonomial& v, int n) {
  const int ab = sets::size(v.a) + static_cast<int>(v.b.size());
  if (v.e.empty()) return ab;
  std::vector<IndexSet> vs;
  for (const auto& [s, k] : v.e) vs.push_back(s);
  const Forest f = build_forest(vs, n);
  IndexSet cap = sets::range(n);
  for (int r : f.roots) cap &= f.vertices[static_cast<std::size_t>(r)];
  return ab + n - sets::size(cap) - static_cast<int>(f.roots.size());
}

std::vector<EPart> standard_epatterns(int n, int max_degree) {
  std::vector<EPart> out;
  if (n < 3 || max_degree < 0) {
    out.emplace_back();
    return out;
  }
  const auto candidates = sets::subsets_by_size(n, 0, n - 3);
  std::vector<IndexSet> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) > max_degree) return;
    const Forest f = build_forest(chosen, n);
    std::vector<int> bounds;
    bool ok = true;
    for (int r = 0; r < f.size(); ++r) {
      bounds.push_back(exponent_bound(f, r));
      if (bounds.back() < 1) ok = false;
    }
    if (ok) {
      // every exponent vector within the bounds and the degree cap
      EPart e;
      for (IndexSet s : f.vertices) e.emplace_back(s, 1);
      std::function<void(std::size_t, int)> fill = [&](std::size_t r, int deg) {
        if (r == e.size()) {
          out.push_back(e);
          return;
        }
        for (int k = 1; k <= bounds[r] && deg + k <= max_degree; ++k) {
          e[r].second = k;
          fill(r + 1, deg + k);
        }
      };
      fill(0, 0);
    }
    // Adding sets can raise the bound of a vertex that gains children, so
    // keep extending even when some current bound is zero.
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const IndexSet s = candidates[i];
      bool compatible = true;
      for (IndexSet t : chosen)
        if (!sets::star_compatible(s, t, n)) compatible = false;
      if (!compatible) continue;
      chosen.push_back(s);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), e_less);
  return out;
}

std::vector<StandardBlowupMonomial> enumerate_standard_blowup(int n, int d) {
  std::vector<StandardBlowupMonomial> out;
  if (n < 2 || d < 0 || d > n - 1) return out;
  for (const EPart& e : standard_epatterns(n, d)) {
    const int rest = d - degree(e);
    const IndexSet s = s_set(e, n);
    for (const auto& c : enumerate_standard_curve_on(s, rest)) out.push_back({c.a, c.b, e});
  }
  std::sort(out.begin(), out.end(), standard_less);
  return out;
}

std::string to_string(const StandardBlowupMonomial& v) { return to_string(v.to_monomial()); }

}  // namespace taut
