#include <map>
#include <mutex>

#include "taut/blowup_ring.hpp"
#include "taut/errors.hpp"

namespace taut {

namespace {

using genus0::DivisorClass;

// Sum of D_S over S ⊆ [n], |S| >= 2, containing `must`.
DivisorClass sum_containing(IndexSet must, int n) {
  DivisorClass c;
  const IndexSet all = sets::range(n);
  const IndexSet rest = all & ~must;
  for (IndexSet t = rest;; t = (t - 1) & rest) {
    const IndexSet s = must | t;
    if (sets::size(s) >= 2) c.add_boundary(s, 1);
    if (t == 0) break;
  }
  return c;
}

void add_scaled(DivisorClass& into, const DivisorClass& c, const Rational& k) {
  for (const auto& [s, w] : c.boundary) into.add_boundary(s, k * w);
  for (const auto& [i, w] : c.psi) into.add_psi(i, k * w);
}

}  // namespace

genus0::DivisorClass glued_class(const Generator& g, int n) {
  validate(g, n);
  DivisorClass out;
  switch (g.kind) {
    case GenKind::A:
      return sum_containing(sets::singleton(g.index()) | sets::singleton(n), n);
    case GenKind::D:
      return sum_containing(sets::singleton(g.lo()) | sets::singleton(g.hi()), n);
    case GenKind::B:
      add_scaled(out, sum_containing(sets::singleton(g.lo()) | sets::singleton(g.hi()), n), 1);
      add_scaled(out, sum_containing(sets::singleton(g.lo()) | sets::singleton(n), n), -1);
      add_scaled(out, sum_containing(sets::singleton(g.hi()) | sets::singleton(n), n), -1);
      return out;
    case GenKind::E:
      out.add_boundary(sets::range(n) & ~g.set(), 1);
      return out;
    case GenKind::Bd:
      out.add_boundary(g.set(), 1);
      return out;
  }
  return out;
}

Rational blowup_socle_eval(const Monomial& m, int n) {
  if (m.degree() != n - 1)
    throw DomainError("socle evaluation needs degree " + std::to_string(n - 1) + ", got " +
                      std::to_string(m.degree()));
  static std::mutex mu;
  static std::map<std::pair<int, Monomial>, Rational> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
  }
  std::vector<DivisorClass> factors;
  for (const auto& [g, k] : m.factors()) {
    const DivisorClass c = glued_class(g, n);
    for (int i = 0; i < k; ++i) factors.push_back(c);
  }
  // Pull back along the gluing map M̄_{0,n+2} -> M̄_{1,n}; the image of the
  // point class a_1...a_{n-1} is a single point.
  Rational v = genus0::integrate(n + 2, std::move(factors));
  std::lock_guard lock(mu);
  cache.emplace(std::pair{n, m}, v);
  return v;
}

Rational blowup_socle_eval_product(const std::vector<Element>& linear_factors, int n) {
  if (static_cast<int>(linear_factors.size()) != n - 1)
    throw DomainError("socle evaluation needs " + std::to_string(n - 1) + " linear factors");
  std::vector<DivisorClass> factors;
  for (const auto& f : linear_factors) {
    DivisorClass c;
    for (const auto& [m, w] : f.terms()) {
      if (m.degree() != 1) throw DomainError("factor " + to_string(f) + " is not linear");
      add_scaled(c, glued_class(m.factors().front().first, n), w);
    }
    if (c.is_zero()) return 0;
    factors.push_back(std::move(c));
  }
  return genus0::integrate(n + 2, std::move(factors));
}

Rational blowup_socle_eval(const Element& e, int n) {
  Rational total = 0;
  for (const auto& [m, c] : e.terms()) total += c * blowup_socle_eval(m, n);
  total.canonicalize();
  return total;
}

}  // namespace taut
