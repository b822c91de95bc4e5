#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "taut/blowup_ring.hpp"
#include "taut/errors.hpp"

namespace taut {

namespace {

Forest forest_of(const EPart& e, int n) {
  std::vector<IndexSet> vs;
  for (const auto& [s, k] : e) vs.push_back(s);
  return build_forest(vs, n);
}

std::vector<IndexSet> sets_of(const EPart& e) {
  std::vector<IndexSet> vs;
  for (const auto& [s, k] : e) vs.push_back(s);
  return vs;
}

// Runs body(i) for i in [0, count) over `jobs` threads.
template <class F>
void parallel_for(std::size_t count, int jobs, F body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(jobs)) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

Rational identity5_eval(const StandardBlowupMonomial& v, const StandardBlowupMonomial& w, int n) {
  if (sets_of(v.e) != sets_of(w.e)) throw DomainError("exceptional sets differ");
  const Forest f = forest_of(v.e, n);
  for (int r = 0; r < f.size(); ++r) {
    const int size = sets::size(f.vertices[static_cast<std::size_t>(r)]);
    const int want = f.is_external(r) ? n - 1 - size : sets::size(f.superset_intersection(r)) - size + f.deg(r) - 1;
    if (v.e[static_cast<std::size_t>(r)].second + w.e[static_cast<std::size_t>(r)].second != want)
      throw DomainError("exponents do not form a dual pair");
  }
  const IndexSet s = s_set(f);
  const int ambient = curve_ambient(n - 1);
  Element prod(ambient, v.curve().to_monomial());
  prod *= Element(ambient, w.curve().to_monomial());
  for (int i : sets::elements(sets::range(n - 1) & ~s)) prod *= Element(ambient, Generator::a(i));
  if (prod.degree().value_or(n - 1) != n - 1) throw DomainError("curve part has the wrong degree");
  const Rational val = curve_socle_eval(prod, n - 1);
  if (f.size() == 0) return val;
  int eps = n + sets::size(f.intersection());
  for (int r = 0; r < f.size(); ++r) eps += f.deg(r);
  return eps % 2 == 0 ? val : Rational(-val);
}

BlowupPairing pairing_matrix_blowup(int n, int d, PairingMode mode, int jobs) {
  BlowupPairing out;
  out.n = n;
  out.d = d;
  out.monomials = enumerate_standard_blowup(n, d);
  const std::size_t k = out.monomials.size();
  out.matrix = RationalMatrix(k, k);
  std::vector<StandardBlowupMonomial> duals;
  for (const auto& v : out.monomials) duals.push_back(blowup_dual(v, n));
  std::mutex mu;
  parallel_for(k, jobs, [&](std::size_t i) {
    std::vector<std::pair<std::size_t, Rational>> row;
    const Monomial vi = out.monomials[i].to_monomial();
    for (std::size_t j = 0; j < k; ++j) {
      Rational x;
      if (mode == PairingMode::Full) {
        x = blowup_socle_eval(vi * duals[j].to_monomial(), n);
      } else if (out.monomials[i].e == out.monomials[j].e) {
        x = identity5_eval(out.monomials[i], duals[j], n);
      } else {
        continue;
      }
      if (x != 0) row.emplace_back(j, x);
    }
    std::lock_guard lock(mu);
    for (auto& [j, x] : row) out.matrix.set(i, j, x);
  });
  out.betti = rank(out.matrix);
  return out;
}

RationalMatrix lifted_three_term_rows(const std::vector<StandardBlowupMonomial>& monomials) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i].to_monomial(), i);
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& v : monomials) {
    const std::size_t pairs = v.b.size();
    for (std::size_t x = 0; x < pairs; ++x)
      for (std::size_t y = x + 1; y < pairs; ++y) {
        auto [p, q] = v.b[x];
        auto [r, s] = v.b[y];
        const int pts[4] = {p, q, r, s};
        std::vector<std::size_t> row;
        for (const auto& m : perfect_matchings(sets::from_elements({pts[0], pts[1], pts[2], pts[3]}))) {
          StandardBlowupMonomial u = v;
          u.b.erase(u.b.begin() + static_cast<std::ptrdiff_t>(y));
          u.b.erase(u.b.begin() + static_cast<std::ptrdiff_t>(x));
          u.b.insert(u.b.end(), m.begin(), m.end());
          std::sort(u.b.begin(), u.b.end());
          row.push_back(index.at(u.to_monomial()));
        }
        std::sort(row.begin(), row.end());
        rows.push_back(row);
      }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  RationalMatrix out(rows.size(), monomials.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j : rows[i]) out.set(i, j, 1);
  return out;
}

PairingReport verify_gorenstein(int n, PairingMode mode, int jobs) {
  if (n < 2) throw DomainError("n must be at least 2");
  PairingReport rep;
  rep.n = n;
  rep.mode = mode;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  for (int d = 0; d <= n - 1; ++d) {
    const BlowupPairing p = pairing_matrix_blowup(n, d, mode, jobs);
    const std::size_t count = p.monomials.size();
    rep.standard_counts.push_back(count);
    rep.dims.push_back(p.betti);
    rep.upper_bounds.push_back(count - rank(lifted_three_term_rows(p.monomials)));
    if (rep.dims.back() != rep.upper_bounds.back())
      fail("degree " + std::to_string(d) + ": pairing rank " + std::to_string(rep.dims.back()) +
           " below the upper bound " + std::to_string(rep.upper_bounds.back()));
    if (mode != PairingMode::Full) continue;
    std::size_t bad_tri = 0, bad_block = 0;
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        const auto& vi = p.monomials[i];
        const auto& vj = p.monomials[j];
        if (vi.e == vj.e) {
          if (p.matrix.get(i, j) != identity5_eval(vi, blowup_dual(vj, n), n)) ++bad_block;
        } else if (e_less(vi.e, vj.e) && p.matrix.get(i, j) != 0) {
          ++bad_tri;
        }
      }
    if (bad_tri) fail("degree " + std::to_string(d) + ": " + std::to_string(bad_tri) + " entries above the block diagonal");
    if (bad_block) fail("degree " + std::to_string(d) + ": " + std::to_string(bad_block) + " block entries disagree");
    const BlowupPairing blocks = pairing_matrix_blowup(n, d, PairingMode::Blocks, jobs);
    if (blocks.betti != p.betti)
      fail("degree " + std::to_string(d) + ": block rank " + std::to_string(blocks.betti) + " differs from full rank " +
           std::to_string(p.betti));
  }
  if (rep.dims.front() != 1) fail("dim R^0 is " + std::to_string(rep.dims.front()));
  if (rep.dims.back() != 1) fail("dim R^top is " + std::to_string(rep.dims.back()));
  for (int d = 0; d <= n - 1; ++d)
    if (rep.dims[static_cast<std::size_t>(d)] != rep.dims[static_cast<std::size_t>(n - 1 - d)])
      fail("dims of degree " + std::to_string(d) + " and " + std::to_string(n - 1 - d) + " differ");
  return rep;
}

namespace {

struct ReductionData {
  std::vector<StandardBlowupMonomial> basis;
  std::vector<Monomial> partners;            // complementary standard monomials
  std::vector<std::size_t> pivot_partners;   // square invertible selection
  RationalMatrix inverse_gram;               // maps pairing values to coordinates
};

const ReductionData& reduction_data(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, ReductionData> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
  }
  ReductionData data;
  for (const auto& w : enumerate_standard_blowup(n, n - 1 - d)) data.partners.push_back(w.to_monomial());
  // Greedy basis: keep a standard monomial when its pairing row is new.
  IncrementalRank acc(data.partners.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : enumerate_standard_blowup(n, d)) {
    std::vector<std::pair<std::size_t, Rational>> row;
    std::vector<Rational> dense(data.partners.size());
    const Monomial vm = v.to_monomial();
    for (std::size_t j = 0; j < data.partners.size(); ++j) {
      dense[j] = blowup_socle_eval(vm * data.partners[j], n);
      if (dense[j] != 0) row.emplace_back(j, dense[j]);
    }
    if (acc.add_rational(row)) {
      data.basis.push_back(v);
      rows.push_back(std::move(dense));
    }
  }
  const RationalMatrix g = RationalMatrix::from_dense(rows.empty() ? std::vector<std::vector<Rational>>{} : rows);
  const RowEchelon ech = row_echelon(g);
  data.pivot_partners = ech.pivot_cols;
  // coordinates c solve c^T G[:, pivots] = s[pivots]
  const std::size_t k = data.basis.size();
  RationalMatrix square(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) square.set(j, i, rows[i][data.pivot_partners[j]]);
  RationalMatrix inv(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    RationalVector e(k);
    e[c] = 1;
    const RationalVector x = solve(square, e);
    for (std::size_t r = 0; r < k; ++r) inv.set(r, c, x[r]);
  }
  data.inverse_gram = std::move(inv);
  std::lock_guard lock(mu);
  return cache.emplace(std::pair{n, d}, std::move(data)).first->second;
}

}  // namespace

const std::vector<StandardBlowupMonomial>& blowup_basis(int n, int d) { return reduction_data(n, d).basis; }

Element blowup_reduce(const Element& e, int n) {
  Element out(e.ambient() == 0 ? n : e.ambient());
  if (e.is_zero()) return out;
  const Element x = expand_diagonals(Element(n) + e);
  for (int d = 0; d <= x.max_degree(); ++d) {
    const Element part = x.component(d);
    if (part.is_zero() || d > n - 1) continue;
    const ReductionData& data = reduction_data(n, d);
    const std::size_t k = data.basis.size();
    RationalVector s(k);
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = 0;
      for (const auto& [m, c] : part.terms()) v += c * blowup_socle_eval(m * data.partners[data.pivot_partners[j]], n);
      s[j] = v;
    }
    const RationalVector coords = data.inverse_gram.apply(s);
    for (std::size_t i = 0; i < k; ++i) out.add_term(data.basis[i].to_monomial(), coords[i]);
  }
  return out;
}

}  // namespace taut
