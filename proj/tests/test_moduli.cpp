#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "taut/errors.hpp"
#include "taut/moduli.hpp"
#include "taut/parser.hpp"

using namespace taut;

namespace {

Element expr(const std::string& text, int n) { return parse_expression(text, n); }

bool pairs_to_zero(const Element& x, int n) {
  for (int d = 0; d <= n - 1; ++d) {
    const Element part = x.component(d);
    if (part.is_zero()) continue;
    for (const auto& w : enumerate_standard_blowup(n, n - 1 - d))
      if (blowup_socle_eval(part * Element(n, w.to_monomial()), n) != 0) return false;
  }
  return true;
}

std::vector<Generator> boundary_generators(int n) {
  std::vector<Generator> g;
  for (IndexSet s : sets::subsets_by_size(n, 2, n)) g.push_back(Generator::boundary(s));
  return g;
}

}  // namespace

TEST_CASE("pullback of boundary divisors") {
  CHECK(pullback_F(expr("D_{1,3}", 3), 3) == expr("a_1 - E0", 3));
  CHECK(pullback_F(expr("D_{1,2,3}", 3), 3) == expr("E0", 3));
  CHECK(pullback_F(expr("D_{1,4}", 4), 4) == expr("a_1 - E0 - E_2 - E_3", 4));
  CHECK(pullback_F(expr("D_{2,3}", 4), 4) == expr("d_{2,3} - E0 - E_1 - E_4", 4));
  CHECK(pullback_F(expr("D_{1,2}", 2), 2) == expr("a_1", 2));
  CHECK(pullback_F(expr("D_{1,2,3,4}", 4), 4) == expr("E0", 4));
}

TEST_CASE("pushdown of blow-up generators") {
  CHECK(pushdown_G(expr("E0", 3), 3) == expr("D_{1,2,3}", 3));
  CHECK(pushdown_G(expr("a_1", 3), 3) == expr("D_{1,3} + D_{1,2,3}", 3));
  CHECK(pushdown_G(expr("d_{1,2}", 3), 3) == expr("D_{1,2} + D_{1,2,3}", 3));
  CHECK(pushdown_G(expr("b_{1,2}", 3), 3) == expr("D_{1,2} - D_{1,3} - D_{2,3} - D_{1,2,3}", 3));
}

TEST_CASE("psi classes") {
  CHECK(psi_class(1, 2) == expr("D_{1,2}", 2));
  CHECK(psi_class(1, 3) == expr("D_{1,2} + D_{1,3} + D_{1,2,3}", 3));
  CHECK(expand_diagonals(pullback_F(psi_class(1, 3), 3)) == expand_diagonals(expr("a_1 + d_{1,2} - E0", 3)));
  CHECK(psi_genus0(1, 2, 3, 4) == expr("D_{1,4}", 4));
  CHECK(psi_genus0(1, 2, 3, 3).is_zero());
  CHECK(psi_genus0(1, 2, 3, 5) == expr("D_{1,4} + D_{1,5} + D_{1,4,5}", 5));
  CHECK(expr("psi_1", 3) == psi_class(1, 3));
  CHECK_THROWS_AS(psi_class(4, 3), IndexError);
  CHECK_THROWS_AS(psi_genus0(1, 1, 2, 4), DomainError);
}

TEST_CASE("every blow-up generator is hit") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : blowup_generators(n)) {
      const Element x(n, g);
      CHECK(pairs_to_zero(pullback_F(pushdown_G(x, n), n) - x, n));
    }
}

TEST_CASE("pullback is multiplicative") {
  std::mt19937 rng(23);
  for (int n = 3; n <= 5; ++n) {
    const auto gens = boundary_generators(n);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      Element x = Element(n, gens[pick(rng)]) + Element(n, gens[pick(rng)], 2);
      Element y = Element(n, gens[pick(rng)]) - Element(n, gens[pick(rng)]);
      CHECK(pairs_to_zero(pullback_F(x * y, n) - pullback_F(x, n) * pullback_F(y, n), n));
    }
  }
}

TEST_CASE("boundary products vanish unless nested or disjoint") {
  for (int n = 3; n <= 5; ++n) {
    const auto sets_ = sets::subsets_by_size(n, 2, n);
    for (IndexSet I : sets_)
      for (IndexSet J : sets_) {
        if (sets::is_subset(I, J) || sets::is_subset(J, I) || (I & J) == 0) continue;
        CHECK(pairs_to_zero(pullback_F(boundary_divisor(I, n) * boundary_divisor(J, n), n), n));
      }
  }
}

TEST_CASE("socle of boundary monomials agrees with their pullbacks") {
  for (int n = 3; n <= 5; ++n) {
    const auto gens = boundary_generators(n);
    const auto all = monomials_of_degree(gens, n - 1);
    // every monomial for n <= 4, every tenth for n = 5
    const std::size_t step = n <= 4 ? 1 : 10;
    for (std::size_t i = 0; i < all.size(); i += step) {
      const Element x(n, all[i]);
      CHECK(blowup_socle_eval(x, n) == blowup_socle_eval(pullback_F(x, n), n));
    }
  }
}

TEST_CASE("relations transport to the moduli side") {
  for (int n = 3; n <= 4; ++n) {
    const auto gens = boundary_generators(n);
    for (const auto& r : relation_generators(n)) {
      const int e = r.degree().value();
      if (e > n - 1) continue;
      const Element pushed = pushdown_G(r, n);
      for (const auto& m : monomials_of_degree(gens, n - 1 - e))
        CHECK(blowup_socle_eval(pullback_F(pushed * Element(n, m), n), n) == 0);
    }
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("lambda integrals") {
  CHECK(lambda_integral(1, {0}) == Rational(1, 24));
  CHECK(lambda_integral(1, {2, 0, 0}) == Rational(1, 24));
  CHECK(lambda_integral(2, {2}) == Rational(7, 5760));
  CHECK(lambda_integral(1, {1, 1, 0}) == Rational(2) / 24);
  CHECK_THROWS_AS(lambda_integral(1, {1}), DomainError);
  CHECK_THROWS_AS(lambda_integral(0, {0, 0, 0}), DomainError);
}

TEST_CASE("epsilon on psi monomials") {
  CHECK(epsilon_eval(psi_class(1, 2), 2) == Rational(1, 24));
  CHECK(epsilon_eval(psi_class(1, 3).pow(2), 3) == Rational(1, 24));
  CHECK(epsilon_eval(psi_class(1, 3) * psi_class(2, 3), 3) == Rational(2) / 24);
  CHECK_THROWS_AS(epsilon_eval(psi_class(1, 3), 3), DomainError);
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        alpha[static_cast<std::size_t>(i)] = left;
        Element x(n, Rational(1));
        for (int j = 0; j < n; ++j) x *= psi_class(j + 1, std::max(n, 2)).pow(alpha[static_cast<std::size_t>(j)]);
        CHECK(epsilon_eval(x, n) == lambda_integral(1, alpha));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        alpha[static_cast<std::size_t>(i)] = k;
        rec(i + 1, left - k);
      }
    };
    if (n >= 2) rec(0, n - 1);
  }
}

TEST_CASE("getzler classes") {
  CHECK(delta_22().size() == 3);
  CHECK(delta_23().size() == 12);
  CHECK(delta_24().size() == 6);
  CHECK(delta_34().size() == 4);
  CHECK(delta_22() == expr("D_{1,2}*D_{3,4} + D_{1,3}*D_{2,4} + D_{1,4}*D_{2,3}", 4));
  CHECK(delta_34() == expr("D_{1,2,3}*D_{1,2,3,4} + D_{1,2,4}*D_{1,2,3,4} + D_{1,3,4}*D_{1,2,3,4} + D_{2,3,4}*D_{1,2,3,4}", 4));
  const Element g = getzler_ct_relation();
  CHECK(g.size() == 25);
  CHECK(g.coefficient(expr("D_{1,2}*D_{3,4}", 4).terms().begin()->first) == 12);
  CHECK(g.coefficient(expr("D_{1,2,3}*D_{1,2,3,4}", 4).terms().begin()->first) == 6);
  CHECK(pairs_to_zero(pullback_F(g, 4), 4));
}

TEST_CASE("forgetful pullback") {
  CHECK(forgetful_pullback(expr("D_{1,2}", 4), 4) == expr("D_{1,2} + D_{1,2,5}", 5));
  CHECK_THROWS_AS(forgetful_pullback(expr("a_1", 4), 4), DomainError);
}

TEST_CASE("Getzler pullbacks match the expected displays") {
  const GetzlerReport rep = verify_getzler_pullbacks();
  CHECK(rep.checks.size() == 14);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(rep.passed());
}

TEST_CASE("the local ideal separates wrong displays") {
  const LocalIdeal four(4), five(5);
  const Element pb = pullback_F(delta_22(), 4);
  CHECK(four.normal_form(pb) == four.normal_form(getzler_display_4("delta_22")));
  CHECK(four.normal_form(pb) != four.normal_form(expr("a_1*d_{2,3} + a_2*d_{1,3} + a_3*d_{1,2} + 2*E0^2", 4)));
  // the three-term combination is not in either ideal
  CHECK_FALSE(four.contains(expr("a_1*b_{2,3} - b_{1,2}*b_{1,3}", 4)));
  CHECK_FALSE(five.contains(expr("b_{1,2}*b_{3,4} + b_{1,3}*b_{2,4} + b_{1,4}*b_{2,3}", 5)));
  CHECK(five.contains(expr("b_{1,2}*b_{1,3} - a_1*b_{2,3}", 5)));
  // summing over ordered pairs in the delta_24 display is wrong
  const Element pb24 = pullback_F(forgetful_pullback(delta_24(), 4), 5);
  Element doubled = getzler_display_5("delta_24");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      doubled -= expr("d_{" + std::to_string(i) + "," + std::to_string(j) + "}*(E_{" + std::to_string(i) + ",5} + E_{" +
                          std::to_string(j) + ",5})",
                      5);
  CHECK(five.normal_form(pb24) == five.normal_form(getzler_display_5("delta_24")));
  CHECK(five.normal_form(pb24) != five.normal_form(doubled));
}
