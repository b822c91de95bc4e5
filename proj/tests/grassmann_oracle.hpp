#pragma once

// Exterior-algebra model of the cohomology of E^n used as an independent
// check of curve-ring values. Odd classes alpha_i (bit 2i-2) and beta_i
// (bit 2i-1); a_i = alpha_i beta_i, b_{j,k} = beta_j alpha_k - alpha_j beta_k,
// d_{j,k} = a_j + a_k + b_{j,k}. The socle functional reads the coefficient
// of a_1 ... a_n.

#include <bit>
#include <cstdint>
#include <map>

#include "taut/element.hpp"
#include "taut/errors.hpp"

namespace oracle {

using taut::Rational;
using Wedge = std::map<std::uint32_t, Rational>;

inline int wedge_sign(std::uint32_t x, std::uint32_t y) {
  // sign of moving the odd generators of y past the ones of x above them
  int swaps = 0;
  for (std::uint32_t t = y; t != 0; t &= t - 1) {
    const int bit = std::countr_zero(t);
    swaps += std::popcount(x >> (bit + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

inline Wedge wedge(const Wedge& x, const Wedge& y) {
  Wedge out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      if (mx & my) continue;
      Rational& slot = out[mx | my];
      slot += wedge_sign(mx, my) * cx * cy;
    }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

inline std::uint32_t alpha(int i) { return 1U << (2 * i - 2); }
inline std::uint32_t beta(int i) { return 1U << (2 * i - 1); }

inline Wedge generator_class(const taut::Generator& g) {
  using taut::GenKind;
  Wedge w;
  auto a = [&](int i, int sign) { w[alpha(i) | beta(i)] += sign; };
  auto b = [&](int j, int k) {
    w[beta(j) | alpha(k)] += wedge_sign(beta(j), alpha(k));
    w[alpha(j) | beta(k)] -= wedge_sign(alpha(j), beta(k));
  };
  switch (g.kind) {
    case GenKind::A:
      a(g.index(), 1);
      break;
    case GenKind::B:
      b(g.lo(), g.hi());
      break;
    case GenKind::D:
      a(g.lo(), 1);
      a(g.hi(), 1);
      b(g.lo(), g.hi());
      break;
    default:
      throw taut::DomainError("not a curve class");
  }
  std::erase_if(w, [](const auto& e) { return e.second == 0; });
  return w;
}

inline Wedge cohomology_class(const taut::Element& e) {
  Wedge out;
  for (const auto& [m, c] : e.terms()) {
    Wedge term{{0U, c}};
    for (const auto& [g, k] : m.factors())
      for (int t = 0; t < k; ++t) term = wedge(term, generator_class(g));
    for (const auto& [mask, v] : term) out[mask] += v;
  }
  std::erase_if(out, [](const auto& x) { return x.second == 0; });
  return out;
}

inline Rational socle(const taut::Element& e, int n) {
  const std::uint32_t top = (n >= 16) ? ~0U : ((1U << (2 * n)) - 1);
  Wedge w = cohomology_class(e);
  auto it = w.find(top);
  return it == w.end() ? Rational(0) : it->second;
}

}  // namespace oracle
