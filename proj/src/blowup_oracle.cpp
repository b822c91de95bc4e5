#include <functional>
#include <unordered_map>

#include "taut/blowup_ring.hpp"
#include "taut/errors.hpp"

namespace taut {

std::vector<Generator> blowup_generators(int n) {
  std::vector<Generator> g;
  for (int i = 1; i < n; ++i) g.push_back(Generator::a(i));
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.push_back(Generator::b(i, j));
  if (n >= 3)
    for (IndexSet s : sets::subsets_by_size(n, 0, n - 3)) g.push_back(Generator::exc(s));
  return g;
}

std::vector<Monomial> monomials_of_degree(const std::vector<Generator>& gens, int d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      out.push_back(Monomial::from_factors(cur));
      return;
    }
    if (i == gens.size()) return;
    for (int k = left; k >= 0; --k) {
      if (k > 0) cur.emplace_back(gens[i], k);
      rec(i + 1, left - k);
      if (k > 0) cur.pop_back();
    }
  };
  if (d >= 0) rec(0, d);
  return out;
}

namespace {

bool divides(const Monomial& z, const Monomial& m) {
  for (const auto& [g, k] : z.factors())
    if (m.exponent(g) < k) return false;
  return true;
}

}  // namespace

std::size_t brute_force_betti(int n, int d, bool allow_large) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (n > 5 && !allow_large) throw DomainError("brute-force oracle is limited to n <= 5");
  if (d < 0 || d > n - 1) return 0;
  const auto gens = blowup_generators(n);
  const auto rels = relation_generators(n);

  // Monomial relations kill every multiple outright.
  std::vector<Monomial> zeros;
  std::vector<const Element*> others;
  for (const auto& r : rels) {
    if (r.size() == 1)
      zeros.push_back(r.terms().begin()->first);
    else
      others.push_back(&r);
  }
  auto killed = [&](const Monomial& m) {
    for (const auto& z : zeros)
      if (z.degree() <= m.degree() && divides(z, m)) return true;
    return false;
  };

  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (const auto& m : monomials_of_degree(gens, d))
    if (!killed(m)) column.emplace(m, column.size());

  IncrementalRank acc(column.size());
  std::map<int, std::vector<Monomial>> multipliers;
  for (const Element* r : others) {
    const int e = r->degree().value();
    if (e > d) continue;
    auto it = multipliers.find(d - e);
    if (it == multipliers.end()) {
      std::vector<Monomial> ms;
      for (const auto& m : monomials_of_degree(gens, d - e))
        if (!killed(m)) ms.push_back(m);
      it = multipliers.emplace(d - e, std::move(ms)).first;
    }
    for (const auto& q : it->second) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (const auto& [m, c] : r->terms()) {
        auto col = column.find(m * q);
        if (col != column.end()) row.emplace_back(col->second, c);
      }
      if (!row.empty()) acc.add_rational(row);
      if (acc.rank() == column.size()) return 0;
    }
  }
  return column.size() - acc.rank();
}

}  // namespace taut
