#include "taut/genus0.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace taut::genus0 {

namespace {

using Mask = std::uint32_t;

Mask full(int N) { return N >= 32 ? ~Mask{0} : (Mask{1} << N) - 1; }

void add_to(std::map<Mask, Rational>& m, Mask key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Sub-integral memo keyed by the sorted factor list.
using Key = std::pair<int, std::vector<DivisorClass>>;
std::map<Key, Rational>& memo() {
  static std::map<Key, Rational> m;
  return m;
}
std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

// Integral of a product of pure psi combinations.
Rational integrate_psi(int N, const std::vector<DivisorClass>& factors) {
  // Expand into psi monomials keyed by exponent vectors.
  std::map<std::vector<int>, Rational> terms{{std::vector<int>(static_cast<std::size_t>(N), 0), Rational(1)}};
  for (const auto& f : factors) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [exps, c] : terms) {
      for (const auto& [i, w] : f.psi) {
        auto e = exps;
        ++e[static_cast<std::size_t>(i)];
        next[e] += c * w;
      }
    }
    std::erase_if(next, [](const auto& t) { return t.second == 0; });
    terms = std::move(next);
  }
  Rational total = 0;
  const Rational top = factorial(static_cast<unsigned>(N - 3));
  for (const auto& [exps, c] : terms) {
    Rational v = top;
    for (int e : exps) v /= factorial(static_cast<unsigned>(e));
    total += c * v;
  }
  return total;
}

// Relabels a subset of markings into the factor's local numbering.
struct Side {
  std::vector<int> local;  // global marking -> local index, -1 if absent
  int size = 0;            // markings on the factor including the node
  int node = 0;            // local index of the node

  Mask to_local(Mask s) const {
    Mask out = 0;
    for (Mask t = s; t != 0; t &= t - 1) out |= Mask{1} << local[static_cast<std::size_t>(std::countr_zero(t))];
    return out;
  }
};

Side make_side(Mask part, int N) {
  Side s;
  s.local.assign(static_cast<std::size_t>(N), -1);
  int k = 0;
  for (int i = 0; i < N; ++i)
    if ((part >> i) & 1U) s.local[static_cast<std::size_t>(i)] = k++;
  s.node = k;
  s.size = k + 1;
  return s;
}

std::pair<DivisorClass, DivisorClass> restrict_sides(const DivisorClass& f, Mask A, const Side& sa, const Side& sb,
                                                     int N) {
  const Mask all = full(N), B = all & ~A;
  DivisorClass fa, fb;
  for (const auto& [T, c] : f.boundary) {
    const Mask Tc = all & ~T;
    if (T == A || Tc == A) {
      fa.add_psi(sa.node, -c);
      fb.add_psi(sb.node, -c);
    } else if ((T & ~A) == 0) {
      fa.add_boundary(canonical_side(sa.to_local(T), sa.size), c);
    } else if ((Tc & ~A) == 0) {
      fa.add_boundary(canonical_side(sa.to_local(Tc), sa.size), c);
    } else if ((T & ~B) == 0) {
      fb.add_boundary(canonical_side(sb.to_local(T), sb.size), c);
    } else if ((Tc & ~B) == 0) {
      fb.add_boundary(canonical_side(sb.to_local(Tc), sb.size), c);
    }
  }
  for (const auto& [i, c] : f.psi) {
    if ((A >> i) & 1U) {
      fa.add_psi(sa.local[static_cast<std::size_t>(i)], c);
    } else {
      fb.add_psi(sb.local[static_cast<std::size_t>(i)], c);
    }
  }
  return {std::move(fa), std::move(fb)};
}

Rational integrate_impl(int N, std::vector<DivisorClass> factors);

Rational integrate_sorted(int N, std::vector<DivisorClass> factors) {
  std::sort(factors.begin(), factors.end());
  Key key{N, factors};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  Rational v = integrate_impl(N, std::move(factors));
  std::lock_guard<std::mutex> lock(memo_mutex());
  memo().emplace(std::move(key), v);
  return v;
}

Rational integrate_impl(int N, std::vector<DivisorClass> factors) {
  if (static_cast<int>(factors.size()) != N - 3) return 0;
  if (N == 3) return 1;
  for (const auto& f : factors)
    if (f.is_zero()) return 0;
  // Restrict along the factor with the fewest boundary terms.
  std::size_t pick = factors.size();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].boundary.empty()) continue;
    if (pick == factors.size() || factors[i].boundary.size() < factors[pick].boundary.size()) pick = i;
  }
  if (pick == factors.size()) return integrate_psi(N, factors);

  const DivisorClass chosen = factors[pick];
  if (!chosen.psi.empty()) {
    // Split off the psi part so that the restriction sees pure boundary.
    DivisorClass bd, ps;
    bd.boundary = chosen.boundary;
    ps.psi = chosen.psi;
    factors[pick] = std::move(bd);
    Rational v = integrate_sorted(N, factors);
    factors[pick] = std::move(ps);
    return v + integrate_sorted(N, std::move(factors));
  }
  factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(pick));
  const Mask all = full(N);
  Rational total = 0;
  for (const auto& [S, coeff] : chosen.boundary) {
    const Mask A = S, B = all & ~S;
    const Side sa = make_side(A, N), sb = make_side(B, N);
    const int dim_a = sa.size - 3;
    std::vector<DivisorClass> on_a, on_b;
    on_a.reserve(factors.size());
    on_b.reserve(factors.size());
    for (const auto& f : factors) {
      auto [fa, fb] = restrict_sides(f, A, sa, sb, N);
      on_a.push_back(std::move(fa));
      on_b.push_back(std::move(fb));
    }
    // Distribute the factors between the two components.
    const int k = static_cast<int>(factors.size());
    if (dim_a < 0 || dim_a > k) continue;
    Rational sub = 0;
    for (Mask choice = 0; choice < (Mask{1} << k); ++choice) {
      if (std::popcount(choice) != dim_a) continue;
      std::vector<DivisorClass> xa, xb;
      bool zero = false;
      for (int j = 0; j < k && !zero; ++j) {
        const auto& part = ((choice >> j) & 1U) ? on_a[static_cast<std::size_t>(j)] : on_b[static_cast<std::size_t>(j)];
        if (part.is_zero()) zero = true;
        (((choice >> j) & 1U) ? xa : xb).push_back(part);
      }
      if (zero) continue;
      Rational va = integrate_sorted(sa.size, std::move(xa));
      if (va == 0) continue;
      sub += va * integrate_sorted(sb.size, std::move(xb));
    }
    total += coeff * sub;
  }
  return total;
}

}  // namespace

void DivisorClass::add_boundary(std::uint32_t side, const Rational& c) { add_to(boundary, side, c); }

void DivisorClass::add_psi(int i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = psi.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) psi.erase(it);
  }
}

std::uint32_t canonical_side(std::uint32_t side, int N) {
  const Mask last = Mask{1} << (N - 1);
  const Mask s = (side & last) ? (full(N) & ~side) : side;
  const int k = std::popcount(s);
  if (k < 2 || k > N - 2) throw std::invalid_argument("not a boundary divisor");
  return s;
}

Rational integrate(int N, std::vector<DivisorClass> factors) {
  if (N < 3) throw std::invalid_argument("M_{0,N} needs N >= 3");
  // Top-level queries rarely repeat; only sub-integrals go in the memo.
  std::sort(factors.begin(), factors.end());
  return integrate_impl(N, std::move(factors));
}

Restriction restrict_to_boundary(const DivisorClass& f, std::uint32_t side, int N) {
  canonical_side(side, N);  // validates the size
  const Mask A = side;
  const Side sa = make_side(A, N), sb = make_side(full(N) & ~A, N);
  auto [fa, fb] = restrict_sides(f, A, sa, sb, N);
  return {std::move(fa), std::move(fb), sa.size, sb.size};
}

DivisorClass psi_as_boundary(int N, int i, int j, int k) {
  DivisorClass out;
  const Mask must = Mask{1} << i, avoid = (Mask{1} << j) | (Mask{1} << k);
  for (Mask s = 0; s <= full(N); ++s) {
    if ((s & must) == 0 || (s & avoid) != 0 || std::popcount(s) < 2) continue;
    if (std::popcount(s) > N - 2) continue;
    out.add_boundary(canonical_side(s, N), 1);
    if (s == full(N)) break;
  }
  return out;
}

}  // namespace taut::genus0
