#include "taut/curve_ring.hpp"

#include <algorithm>
#include <map>

#include "taut/errors.hpp"

namespace taut {

IndexSet support(const Matching& b) {
  IndexSet s = 0;
  for (const auto& [j, k] : b) s |= sets::singleton(j) | sets::singleton(k);
  return s;
}

std::vector<Matching> perfect_matchings(IndexSet s) {
  std::vector<Matching> out;
  if (s == 0) {
    out.emplace_back();
    return out;
  }
  if (sets::size(s) % 2 != 0) return out;
  const int i = sets::min_element(s);
  const IndexSet rest = s & ~sets::singleton(i);
  for (int j : sets::elements(rest)) {
    for (Matching m : perfect_matchings(rest & ~sets::singleton(j))) {
      m.insert(m.begin(), Pair{i, j});
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
    }
  }
  return out;
}

Monomial StandardCurveMonomial::to_monomial() const {
  std::vector<Monomial::Factor> fs;
  for (int i : sets::elements(a)) fs.emplace_back(Generator::a(i), 1);
  for (const auto& [j, k] : b) fs.emplace_back(Generator::b(j, k), 1);
  return Monomial::from_factors(std::move(fs));
}

std::strong_ordering operator<=>(const StandardCurveMonomial& x, const StandardCurveMonomial& y) {
  return x.to_monomial() <=> y.to_monomial();
}

std::optional<StandardCurveMonomial> as_standard_curve(const Monomial& m) {
  StandardCurveMonomial v;
  IndexSet used = 0;
  for (const auto& [g, e] : m.factors()) {
    if (e != 1) return std::nullopt;
    if (g.kind == GenKind::A) {
      if (sets::contains(used, g.index())) return std::nullopt;
      v.a |= sets::singleton(g.index());
      used |= sets::singleton(g.index());
    } else if (g.kind == GenKind::B) {
      const IndexSet p = sets::singleton(g.lo()) | sets::singleton(g.hi());
      if (used & p) return std::nullopt;
      used |= p;
      v.b.emplace_back(g.lo(), g.hi());
    } else {
      return std::nullopt;
    }
  }
  std::sort(v.b.begin(), v.b.end());
  return v;
}

namespace {

void check_curve_generators(const Monomial& m, int n) {
  for (const auto& [g, e] : m.factors()) {
    const bool ok = (g.kind == GenKind::A && g.index() >= 1 && g.index() <= n) ||
                    ((g.kind == GenKind::B || g.kind == GenKind::D) && g.lo() >= 1 && g.hi() <= n);
    if (!ok) throw DomainError("generator " + to_string(g) + " is not in the curve ring of C^" + std::to_string(n));
  }
}

// Applies the monomial rules to a product of a's and b's (no d).
// Returns false when the monomial reduces to zero.
bool reduce_ab(IndexSet& a, std::vector<Pair>& b, Rational& coeff) {
  auto add_a = [&](int i) {
    if (sets::contains(a, i)) return false;
    a |= sets::singleton(i);
    return true;
  };
  for (;;) {
    std::sort(b.begin(), b.end());
    bool changed = false;
    // b^2 -> -2 a a
    for (std::size_t t = 0; t + 1 < b.size(); ++t) {
      if (b[t] == b[t + 1]) {
        const Pair p = b[t];
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(t), b.begin() + static_cast<std::ptrdiff_t>(t) + 2);
        coeff *= -2;
        if (!add_a(p.first) || !add_a(p.second)) return false;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // a_i b_{i,j} -> 0
    for (const auto& [j, k] : b) {
      if (sets::contains(a, j) || sets::contains(a, k)) return false;
    }
    // b_{i,j} b_{i,k} -> a_i b_{j,k}
    for (std::size_t s = 0; s < b.size() && !changed; ++s) {
      for (std::size_t t = s + 1; t < b.size() && !changed; ++t) {
        const auto [p, q] = b[s];
        const auto [u, w] = b[t];
        int shared = 0, x = 0, y = 0;
        if (p == u) {
          shared = p, x = q, y = w;
        } else if (p == w) {
          shared = p, x = q, y = u;
        } else if (q == u) {
          shared = q, x = p, y = w;
        } else if (q == w) {
          shared = q, x = p, y = u;
        } else {
          continue;
        }
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(t));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(s));
        b.emplace_back(std::min(x, y), std::max(x, y));
        if (!add_a(shared)) return false;
        changed = true;
      }
    }
    if (!changed) return true;
  }
}

}  // namespace

Element curve_normal_form(const Element& e, int n) {
  Element out(e.ambient());
  for (const auto& [m, c] : e.terms()) {
    check_curve_generators(m, n);
    // Expand d_{j,k} = b_{j,k} + a_j + a_k.
    std::vector<std::pair<Monomial, Rational>> expanded{{Monomial(), c}};
    for (const auto& [g, exp] : m.factors()) {
      for (int t = 0; t < exp; ++t) {
        std::vector<std::pair<Monomial, Rational>> next;
        if (g.kind == GenKind::D) {
          const Monomial opts[3] = {Monomial(Generator::b(g.lo(), g.hi())), Monomial(Generator::a(g.lo())),
                                    Monomial(Generator::a(g.hi()))};
          for (const auto& [x, cx] : expanded) {
            for (const auto& o : opts) next.emplace_back(x * o, cx);
          }
        } else {
          for (const auto& [x, cx] : expanded) next.emplace_back(x * Monomial(g), cx);
        }
        expanded = std::move(next);
      }
    }
    for (const auto& [x, cx] : expanded) {
      IndexSet a = 0;
      std::vector<Pair> b;
      bool zero = false;
      for (const auto& [g, exp] : x.factors()) {
        if (g.kind == GenKind::A) {
          if (exp > 1) zero = true;
          a |= sets::singleton(g.index());
        } else {
          for (int t = 0; t < exp; ++t) b.emplace_back(g.lo(), g.hi());
        }
      }
      if (zero) continue;
      Rational coeff = cx;
      if (!reduce_ab(a, b, coeff)) continue;
      StandardCurveMonomial v{a, b};
      std::sort(v.b.begin(), v.b.end());
      out.add_term(v.to_monomial(), coeff);
    }
  }
  return out;
}

std::vector<StandardCurveMonomial> enumerate_standard_curve_on(IndexSet within, int d) {
  std::vector<StandardCurveMonomial> out;
  if (d < 0 || d > sets::size(within)) return out;
  // Choose the support of B (even size 2k), then A of size d-k in the rest.
  for (IndexSet bs = within;; bs = (bs - 1) & within) {
    const int k2 = sets::size(bs);
    if (k2 % 2 == 0 && k2 / 2 <= d) {
      const int na = d - k2 / 2;
      const IndexSet rest = within & ~bs;
      if (na <= sets::size(rest)) {
        const auto ms = perfect_matchings(bs);
        for (IndexSet as = rest;; as = (as - 1) & rest) {
          if (sets::size(as) == na) {
            for (const auto& m : ms) out.push_back({as, m});
          }
          if (as == 0) break;
        }
      }
    }
    if (bs == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StandardCurveMonomial> enumerate_standard_curve(int n, int d) {
  if (n < 0 || d < 0 || d > n) return {};
  return enumerate_standard_curve_on(sets::range(n), d);
}

StandardCurveMonomial curve_dual_on(const StandardCurveMonomial& v, IndexSet within) {
  return {within & ~(v.a | support(v.b)), v.b};
}

StandardCurveMonomial curve_dual(const StandardCurveMonomial& v, int n) { return curve_dual_on(v, sets::range(n)); }

Rational curve_socle_eval(const Element& e, int n) {
  if (!e.is_zero() && e.degree() != n) throw DomainError("curve socle evaluation needs degree " + std::to_string(n));
  const Element nf = curve_normal_form(e, n);
  Monomial point;
  for (int i = 1; i <= n; ++i) point *= Monomial(Generator::a(i));
  return nf.coefficient(point);
}

Rational curve_pair(const StandardCurveMonomial& v, const StandardCurveMonomial& w) {
  if (v.a & w.a) return 0;
  IndexSet a = v.a | w.a;
  std::vector<Pair> b = v.b;
  b.insert(b.end(), w.b.begin(), w.b.end());
  Rational c = 1;
  if (!reduce_ab(a, b, c)) return 0;
  if (!b.empty()) return 0;
  return c;
}

RationalMatrix curve_pairing_matrix(int n, int d) {
  const auto rows = enumerate_standard_curve(n, d);
  const auto cols = enumerate_standard_curve(n, n - d);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if ((rows[i].variables() | cols[j].variables()) != sets::range(n)) continue;
      m.set(i, j, curve_pair(rows[i], cols[j]));
    }
  }
  return m;
}

std::size_t curve_betti(int n, int d) { return rank(curve_pairing_matrix(n, d)); }

RationalMatrix t_matrix(int m) {
  const auto ms = perfect_matchings(sets::range(2 * m));
  RationalMatrix t(ms.size(), ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) t.set(i, j, curve_pair({0, ms[i]}, {0, ms[j]}));
  }
  return t;
}

std::vector<RationalVector> three_term_kernel(int m) {
  std::vector<RationalVector> out;
  if (m < 2) return out;
  const IndexSet all = sets::range(2 * m);
  const auto ms = perfect_matchings(all);
  std::map<Matching, std::size_t> index;
  for (std::size_t i = 0; i < ms.size(); ++i) index[ms[i]] = i;
  for (IndexSet q : sets::subsets_by_size(2 * m, 4, 4)) {
    const auto e = sets::elements(q);
    const Pair terms[3][2] = {{{e[0], e[1]}, {e[2], e[3]}}, {{e[0], e[2]}, {e[1], e[3]}}, {{e[0], e[3]}, {e[1], e[2]}}};
    for (const Matching& rest : perfect_matchings(all & ~q)) {
      RationalVector v(ms.size());
      for (const auto& t : terms) {
        Matching full = rest;
        full.push_back(t[0]);
        full.push_back(t[1]);
        std::sort(full.begin(), full.end());
        v[index.at(full)] += 1;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

Integer hook_length_dimension(const std::vector<int>& partition) {
  int total = 0;
  for (int p : partition) total += p;
  Integer num = factorial(static_cast<unsigned>(total)).get_num();
  Integer den = 1;
  for (std::size_t r = 0; r < partition.size(); ++r) {
    for (int c = 0; c < partition[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < partition.size() && partition[r2] > c; ++r2) ++below;
      den *= partition[r] - c - 1 + below + 1;
    }
  }
  return num / den;
}

Integer double_factorial_odd(int m) {
  Integer out = 1;
  for (int k = 2 * m - 1; k > 1; k -= 2) out *= k;
  return out;
}

TabloidSpace::TabloidSpace(int half_size)
    : m(half_size),
      matchings(perfect_matchings(sets::range(2 * half_size))),
      irreducible_dimension(hook_length_dimension(std::vector<int>(static_cast<std::size_t>(half_size), 2))) {}

}  // namespace taut
