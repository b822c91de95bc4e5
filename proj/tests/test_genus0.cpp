#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "taut/genus0.hpp"

using namespace taut;
using namespace taut::genus0;

namespace {

DivisorClass bd(std::uint32_t side, int N) {
  DivisorClass c;
  c.add_boundary(canonical_side(side, N), 1);
  return c;
}

DivisorClass psi(int i) {
  DivisorClass c;
  c.add_psi(i, 1);
  return c;
}

std::uint32_t mask(std::initializer_list<int> xs) {
  std::uint32_t m = 0;
  for (int x : xs) m |= 1U << x;
  return m;
}

DivisorClass permuted(const DivisorClass& c, const std::vector<int>& perm, int N) {
  DivisorClass out;
  for (const auto& [s, w] : c.boundary) {
    std::uint32_t t = 0;
    for (int i = 0; i < N; ++i)
      if ((s >> i) & 1U) t |= 1U << perm[static_cast<std::size_t>(i)];
    out.add_boundary(canonical_side(t, N), w);
  }
  for (const auto& [i, w] : c.psi) out.add_psi(perm[static_cast<std::size_t>(i)], w);
  return out;
}

}  // namespace

TEST_CASE("small intersection numbers") {
  CHECK(integrate(3, {}) == 1);
  CHECK(integrate(4, {bd(mask({0, 1}), 4)}) == 1);
  CHECK(integrate(4, {psi(2)}) == 1);
  CHECK(integrate(5, {bd(mask({0, 1}), 5), bd(mask({0, 1}), 5)}) == -1);
  CHECK(integrate(5, {bd(mask({0, 1}), 5), bd(mask({2, 3}), 5)}) == 1);
  CHECK(integrate(5, {bd(mask({0, 1}), 5), bd(mask({0, 2}), 5)}) == 0);
  CHECK(integrate(5, {bd(mask({0, 1}), 5), bd(mask({0, 1, 2}), 5)}) == 1);
  CHECK(integrate(5, {psi(0), psi(0)}) == 1);
  CHECK(integrate(5, {psi(0), psi(1)}) == 2);
  CHECK(integrate(5, {psi(0), bd(mask({2, 3}), 5)}) == 1);
  CHECK(integrate(5, {psi(0), bd(mask({0, 1}), 5)}) == 0);
  CHECK(integrate(6, {bd(mask({0, 1}), 6), bd(mask({0, 1}), 6), bd(mask({0, 1}), 6)}) == 1);
  CHECK(integrate(6, {bd(mask({0, 1, 2}), 6), bd(mask({0, 1, 2}), 6), bd(mask({0, 1, 2}), 6)}) == 2);
  CHECK(integrate(6, {psi(0), psi(1), psi(2)}) == 6);
  CHECK(integrate(6, {psi(0), psi(0), psi(1)}) == 3);
  // wrong number of factors
  CHECK(integrate(5, {psi(0)}) == 0);
}

TEST_CASE("mixed boundary and psi factors") {
  DivisorClass f = bd(mask({1, 2}), 4);
  f.add_psi(3, -1);
  CHECK(integrate(4, {f}) == 0);
  DivisorClass g = bd(mask({0, 1}), 5);
  g.add_psi(4, 2);
  CHECK(integrate(5, {g, psi(0)}) == 0 + 2 * 2);
}

TEST_CASE("canonical sides") {
  CHECK(canonical_side(mask({0, 1}), 5) == mask({0, 1}));
  CHECK(canonical_side(mask({2, 3, 4}), 5) == mask({0, 1}));
  CHECK_THROWS(canonical_side(mask({0}), 5));
  CHECK_THROWS(canonical_side(mask({0, 1, 2, 3}), 5));
}

TEST_CASE("psi through boundary divisors matches the multinomial formula") {
  for (int N = 4; N <= 7; ++N) {
    std::vector<int> a(static_cast<std::size_t>(N), 0);
    std::mt19937 rng(static_cast<unsigned>(N));
    for (int trial = 0; trial < 6; ++trial) {
      std::fill(a.begin(), a.end(), 0);
      std::uniform_int_distribution<int> pick(0, N - 1);
      for (int k = 0; k < N - 3; ++k) ++a[static_cast<std::size_t>(pick(rng))];
      std::vector<DivisorClass> as_boundary, as_psi;
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < a[static_cast<std::size_t>(i)]; ++k) {
          const int j = (i + 1) % N, l = (i + 2) % N;
          as_boundary.push_back(psi_as_boundary(N, i, j, l));
          as_psi.push_back(psi(i));
        }
      Rational expected = factorial(static_cast<unsigned>(N - 3));
      for (int e : a) expected /= factorial(static_cast<unsigned>(e));
      CHECK(integrate(N, as_boundary) == expected);
      CHECK(integrate(N, as_psi) == expected);
    }
  }
}

TEST_CASE("psi does not depend on the auxiliary markings") {
  const int N = 6;
  const DivisorClass other = bd(mask({0, 4}), N);
  for (int j = 1; j < N; ++j)
    for (int k = j + 1; k < N; ++k) {
      CHECK(integrate(N, {psi_as_boundary(N, 0, j, k), psi(1), other}) == integrate(N, {psi(0), psi(1), other}));
    }
}

TEST_CASE("integrals are invariant under relabelling") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int N = 5 + trial % 3;
    std::vector<std::uint32_t> sides;
    for (std::uint32_t s = 1; s < (1U << N); ++s) {
      const int k = __builtin_popcount(s);
      if (k >= 2 && k <= N - 2 && !((s >> (N - 1)) & 1U)) sides.push_back(s);
    }
    std::uniform_int_distribution<std::size_t> pick(0, sides.size() - 1);
    std::vector<DivisorClass> fs;
    for (int k = 0; k < N - 3; ++k) {
      DivisorClass c = bd(sides[pick(rng)], N);
      c.add_boundary(sides[pick(rng)], 2);
      if (k % 2 == 0) c.add_psi(static_cast<int>(rng() % static_cast<unsigned>(N)), -1);
      fs.push_back(c);
    }
    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<DivisorClass> gs;
    for (const auto& f : fs) gs.push_back(permuted(f, perm, N));
    CHECK(integrate(N, fs) == integrate(N, gs));
  }
}

TEST_CASE("the four-point relation holds under integration") {
  // sum over S with i,j in S and k,l outside equals the same with j,k swapped
  const int N = 6;
  auto side_sum = [&](int i, int j, int k, int l) {
    DivisorClass c;
    for (std::uint32_t s = 0; s < (1U << N); ++s) {
      const int size = __builtin_popcount(s);
      if (size < 2 || size > N - 2) continue;
      if (((s >> i) & 1U) && ((s >> j) & 1U) && !((s >> k) & 1U) && !((s >> l) & 1U))
        c.add_boundary(canonical_side(s, N), 1);
    }
    return c;
  };
  const DivisorClass lhs = side_sum(0, 1, 2, 3), rhs = side_sum(0, 2, 1, 3);
  std::vector<std::vector<DivisorClass>> tails = {
      {psi(4), psi(5)}, {bd(mask({0, 4}), N), psi(1)}, {bd(mask({2, 5}), N), bd(mask({1, 4}), N)}};
  for (const auto& t : tails) {
    std::vector<DivisorClass> x = t, y = t;
    x.push_back(lhs);
    y.push_back(rhs);
    CHECK(integrate(N, x) == integrate(N, y));
  }
}

TEST_CASE("restriction to a boundary divisor") {
  const int N = 6;
  // crossing divisors restrict to zero
  const auto crossing = restrict_to_boundary(bd(mask({0, 1}), N), mask({1, 2}), N);
  CHECK(crossing.on_side.is_zero());
  CHECK(crossing.on_complement.is_zero());
  // the divisor itself gives minus psi at the node on both factors
  const auto self = restrict_to_boundary(bd(mask({0, 1}), N), mask({0, 1}), N);
  CHECK(self.side_markings == 3);
  CHECK(self.complement_markings == 5);
  CHECK(self.on_side.psi == std::map<int, Rational>{{2, Rational(-1)}});
  CHECK(self.on_complement.psi == std::map<int, Rational>{{4, Rational(-1)}});
  // a nested divisor lands on the side containing it, relabelled
  const auto nested = restrict_to_boundary(bd(mask({3, 4}), N), mask({0, 1}), N);
  CHECK(nested.on_side.is_zero());
  CHECK(nested.on_complement.boundary.size() == 1);
  // a psi class stays on the factor holding its marking
  const auto ps = restrict_to_boundary(psi(3), mask({0, 1}), N);
  CHECK(ps.on_complement.psi == std::map<int, Rational>{{1, Rational(1)}});
  CHECK_THROWS(restrict_to_boundary(psi(3), mask({0}), N));
}
