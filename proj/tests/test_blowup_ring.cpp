#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "taut/blowup_ring.hpp"
#include "taut/errors.hpp"
#include "taut/parser.hpp"

using namespace taut;

namespace {

IndexSet S(std::initializer_list<int> xs) { return sets::from_elements(std::vector<int>(xs)); }

Element expr(const char* text, int n) { return parse_expression(text, n); }

StandardBlowupMonomial sbm(IndexSet a, Matching b, EPart e) { return {a, std::move(b), std::move(e)}; }

// x is zero in the ring iff it pairs to zero with every standard monomial of
// complementary degree.
bool pairs_to_zero(const Element& x, int n) {
  for (int d = 0; d <= n - 1; ++d) {
    const Element part = x.component(d);
    if (part.is_zero()) continue;
    for (const auto& w : enumerate_standard_blowup(n, n - 1 - d))
      if (blowup_socle_eval(part * Element(n, w.to_monomial()), n) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("index set order and star condition") {
  CHECK(sets::subset_less(S({1, 3}), S({1, 2, 4})));
  CHECK(sets::subset_less(S({1, 3}), S({1, 4})));
  CHECK_FALSE(sets::subset_less(S({2}), S({2})));
  CHECK(sets::star_compatible(S({1, 2}), S({1, 2, 3}), 6));
  CHECK(sets::star_compatible(S({1, 2, 3}), S({4, 5, 6}), 6));
  CHECK_FALSE(sets::star_compatible(S({1, 2}), S({4, 5, 6}), 6));
}

TEST_CASE("forests") {
  Forest chain = build_forest({S({1, 2, 3}), S({1, 2})}, 6);
  REQUIRE(chain.size() == 2);
  CHECK(chain.vertices[0] == S({1, 2}));
  CHECK(chain.roots == std::vector<int>{0});
  CHECK(chain.children[0] == std::vector<int>{1});
  CHECK(chain.is_external(1));
  CHECK_FALSE(chain.is_external(0));

  Forest two = build_forest({S({1, 2, 3}), S({4, 5, 6})}, 6);
  CHECK(two.roots == std::vector<int>{0, 1});
  CHECK(two.is_external(0));
  CHECK(two.is_external(1));
  // the only root without 6
  std::vector<int> without;
  for (int r : two.roots)
    if (!sets::contains(two.vertices[static_cast<std::size_t>(r)], 6)) without.push_back(r);
  CHECK(without == std::vector<int>{0});

  CHECK_THROWS_AS(build_forest({S({1, 2}), S({4, 5, 6})}, 6), DomainError);
  CHECK_THROWS_AS(build_forest({S({1, 2, 3, 4})}, 6), DomainError);

  // minimal-superset edges only
  Forest tri = build_forest({S({1}), S({1, 2}), S({1, 2, 3})}, 7);
  CHECK(tri.children[0] == std::vector<int>{1});
  CHECK(tri.children[1] == std::vector<int>{2});
}

TEST_CASE("forests of standard monomials have one root without n") {
  for (int n = 3; n <= 7; ++n)
    for (const EPart& e : standard_epatterns(n, n - 1)) {
      if (e.empty()) continue;
      std::vector<IndexSet> vs;
      for (const auto& [s, k] : e) vs.push_back(s);
      const Forest f = build_forest(vs, n);
      int without = 0;
      for (int r : f.roots)
        if (!sets::contains(f.vertices[static_cast<std::size_t>(r)], n)) ++without;
      CHECK(without == (sets::contains(f.intersection(), n) ? 0 : 1));
      // an undirected cycle would need more edges than vertices minus roots
      std::size_t edges = 0;
      for (int r = 0; r < f.size(); ++r) edges += static_cast<std::size_t>(f.deg(r));
      CHECK(edges == static_cast<std::size_t>(f.size()) - f.roots.size());
    }
}

TEST_CASE("variable sets") {
  CHECK(s_set(EPart{{0, 1}}, 3) == 0);
  CHECK(s_set(EPart{{S({1, 5}), 1}}, 5) == S({1, 2}));
  CHECK(s_set(EPart{{S({1, 2, 3}), 1}, {S({4, 5, 6}), 1}}, 6) == S({1}));
  CHECK(s_set(EPart{}, 5) == S({1, 2, 3, 4}));
}

TEST_CASE("standardness") {
  CHECK(is_standard(expr("E0", 3).terms().begin()->first, 3));
  CHECK_FALSE(is_standard(expr("E0^2", 3).terms().begin()->first, 3));
  CHECK_FALSE(is_standard(expr("a_3*E_{1,5}", 5).terms().begin()->first, 5));
  CHECK(is_standard(expr("a_2*E_{1,5}", 5).terms().begin()->first, 5));
  CHECK_FALSE(is_standard(expr("E_{1,2}*E_{4,5}", 6).terms().begin()->first, 6));
  CHECK_FALSE(is_standard(expr("a_1*b_{1,2}", 4).terms().begin()->first, 4));
  for (int n = 2; n <= 6; ++n)
    for (int d = 0; d < n; ++d)
      for (const auto& v : enumerate_standard_blowup(n, d)) {
        CHECK(is_standard(v, n));
        CHECK(v.degree() == d);
      }
}

TEST_CASE("standard monomials in degree one") {
  for (int n = 2; n <= 7; ++n) {
    const std::size_t expected = (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1;
    CHECK(enumerate_standard_blowup(n, 1).size() == expected);
  }
  const auto v = enumerate_standard_blowup(3, 1);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == sbm(S({1}), {}, {}));
  CHECK(v[3] == sbm(0, {}, {{0, 1}}));
}

TEST_CASE("monomial order on exceptional parts") {
  CHECK(e_less(EPart{}, EPart{{0, 1}}));
  CHECK(e_less(EPart{{0, 2}}, EPart{{S({1}), 1}}));
  CHECK(e_less(EPart{{0, 1}, {S({1}), 1}}, EPart{{0, 2}, {S({1}), 1}}));
  CHECK_FALSE(e_less(EPart{{S({2}), 1}}, EPart{{S({1}), 1}}));
  CHECK(much_less(EPart{{0, 3}}, EPart{{S({1}), 1}, {S({1, 2}), 1}}));
  CHECK_FALSE(much_less(EPart{{S({1}), 1}}, EPart{{S({1}), 1}, {S({1, 2}), 1}}));
  CHECK(much_less(EPart{}, EPart{{0, 1}}));
}

TEST_CASE("duals") {
  const auto v = sbm(0, {}, {{S({1, 5}), 1}});
  CHECK(blowup_dual(v, 5) == sbm(S({1, 2}), {}, {{S({1, 5}), 1}}));
  CHECK(blowup_dual(sbm(0, {}, {{0, 1}}), 3) == sbm(0, {}, {{0, 1}}));
}

TEST_CASE("dual bookkeeping") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 0; d < n; ++d)
      for (const auto& v : enumerate_standard_blowup(n, d)) {
        const auto w = blowup_dual(v, n);
        CHECK(is_standard(w, n));
        CHECK(w.degree() == n - 1 - d);
        CHECK(blowup_dual(w, n) == v);
        CHECK((v.a & w.a) == 0);
        if (v.e.empty()) continue;
        // closure sums of i_r + j_r
        std::vector<IndexSet> vs;
        for (const auto& [s, k] : v.e) vs.push_back(s);
        const Forest f = build_forest(vs, n);
        for (int r = 0; r < f.size(); ++r) {
          int sum = 0;
          for (int s : f.closure(r))
            sum += v.e[static_cast<std::size_t>(s)].second + w.e[static_cast<std::size_t>(s)].second;
          CHECK(sum == n - 1 - sets::size(f.vertices[static_cast<std::size_t>(r)]));
        }
      }
}

TEST_CASE("filtration level") {
  CHECK(filtration_level(sbm(0, {}, {{S({1, 5}), 1}}), 5) == 2);
  CHECK(filtration_level(sbm(0, {}, {{0, 1}}), 3) == 2);
  CHECK(filtration_level(sbm(S({1, 2}), {}, {}), 4) == 2);
  for (int n = 3; n <= 6; ++n)
    for (int d = 0; d < n; ++d)
      for (const auto& v : enumerate_standard_blowup(n, d)) CHECK(filtration_level(v, n) >= 0);
}

TEST_CASE("socle evaluation") {
  CHECK(blowup_socle_eval(expr("a_1*a_2", 3), 3) == 1);
  CHECK(blowup_socle_eval(expr("E0^2", 3), 3) == -1);
  CHECK(blowup_socle_eval(expr("a_1*a_2*a_3", 4), 4) == 1);
  CHECK(blowup_socle_eval(expr("E0^3", 4), 4) == 1);
  CHECK(blowup_socle_eval(expr("a_1*a_2*E_{1,5}^2", 5), 5) == -1);
  CHECK(blowup_socle_eval(expr("b_{1,2}*b_{3,4}*b_{1,3}*b_{2,4}", 5), 5) == -2);
  CHECK_THROWS_AS(blowup_socle_eval(expr("a_1", 3), 3), DomainError);
  for (int n = 2; n <= 7; ++n) {
    Element top(n, Rational(1));
    for (int i = 1; i < n; ++i) top *= Element(n, Generator::a(i));
    CHECK(blowup_socle_eval(top, n) == 1);
    if (n >= 3) CHECK(blowup_socle_eval(Element(n, Generator::exc(0)).pow(n - 1), n) == (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("block entries") {
  const auto v = sbm(0, {}, {{S({1, 5}), 1}});
  CHECK(identity5_eval(v, blowup_dual(v, 5), 5) == -1);
  CHECK(identity5_eval(sbm(0, {}, {{0, 1}}), sbm(0, {}, {{0, 1}}), 3) == -1);
  CHECK(identity5_eval(sbm(0, {}, {{0, 1}}), sbm(0, {}, {{0, 2}}), 4) == 1);
  CHECK_THROWS_AS(identity5_eval(sbm(0, {}, {{0, 1}}), sbm(0, {}, {{0, 1}}), 4), DomainError);
}

TEST_CASE("block entries agree with the socle on chains") {
  for (int n = 3; n <= 5; ++n)
    for (int d = 0; d < n; ++d)
      for (const auto& v : enumerate_standard_blowup(n, d)) {
        bool chain = true;
        for (std::size_t r = 1; r < v.e.size(); ++r)
          if (!sets::is_subset(v.e[r - 1].first, v.e[r].first)) chain = false;
        if (v.e.empty() || !chain) continue;
        const auto w = blowup_dual(v, n);
        const Element prod = blowup_reduce(Element(n, v.to_monomial() * w.to_monomial()), n);
        CHECK(blowup_socle_eval(prod, n) == identity5_eval(v, w, n));
      }
}

TEST_CASE("relation generators contain the worked examples") {
  const auto rels = relation_generators(6);
  auto has = [&](const Element& x) {
    return std::find(rels.begin(), rels.end(), x) != rels.end() || std::find(rels.begin(), rels.end(), -x) != rels.end();
  };
  CHECK(has(expr("a_1*E0", 6)));
  CHECK(has(expr("b_{1,2}*E0", 6)));
  CHECK(has(expr("(a_1-E0)*E_{1}", 6)));
  CHECK(has(expr("(a_1-E0)*(a_2-E0)*(a_3-E0)*(a_4-E0)*(a_5-E0)", 6)));
  for (const auto& r : rels) CHECK(r.is_homogeneous());
}

TEST_CASE("every relation is killed by the socle pairing") {
  for (int n = 3; n <= 5; ++n) {
    const auto gens = blowup_generators(n);
    for (const auto& r : labeled_relation_generators(n)) {
      const int e = r.value.degree().value();
      if (e > n - 1) continue;
      bool zero = true;
      for (const auto& m : monomials_of_degree(gens, n - 1 - e))
        if (blowup_socle_eval(r.value * Element(n, m), n) != 0) zero = false;
      CHECK_MESSAGE(zero, r.family << ": " << to_string(r.value));
    }
  }
}

TEST_CASE("reduction") {
  CHECK(blowup_reduce(expr("E0^2", 3), 3) == expr("-a_1*a_2", 3));
  CHECK(blowup_reduce(expr("b_{2,3}*E_{1,5}", 5), 5) == expr("-2*a_2*E_{1,5}", 5));
  CHECK(blowup_reduce(expr("a_3*E_{1,5}", 5), 5) == expr("a_2*E_{1,5}", 5));
  CHECK(blowup_reduce(expr("E0^3", 4), 4) == expr("a_1*a_2*a_3", 4));
  CHECK(blowup_reduce(expr("d_{1,2}", 3), 3) == expr("a_1 + a_2 + b_{1,2}", 3));
  CHECK(blowup_reduce(expr("3 + E0", 3), 3) == expr("3 + E0", 3));
  // reduced forms live on the basis and pair like the input
  std::mt19937 rng(7);
  for (int n = 3; n <= 5; ++n) {
    const auto gens = blowup_generators(n);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const int d = 1 + trial % (n - 1);
      Element x(n);
      for (int t = 0; t < 3; ++t) {
        std::vector<Monomial::Factor> fs;
        for (int k = 0; k < d; ++k) fs.emplace_back(gens[pick(rng)], 1);
        x += Element(n, Monomial::from_factors(fs), Rational(static_cast<int>(rng() % 5) - 2));
      }
      const Element y = blowup_reduce(x, n);
      const auto& basis = blowup_basis(n, d);
      for (const auto& [m, c] : y.terms())
        CHECK(std::any_of(basis.begin(), basis.end(), [&](const auto& b) { return b.to_monomial() == m; }));
      CHECK(pairs_to_zero(x - y, n));
      CHECK(blowup_reduce(y, n) == y);
    }
  }
}

TEST_CASE("star soundness") {
  for (int n = 3; n <= 7; ++n) {
    const auto adm = sets::subsets_by_size(n, 0, n - 3);
    std::mt19937 rng(static_cast<unsigned>(n));
    std::vector<StandardBlowupMonomial> partners;
    if (n >= 6) partners = enumerate_standard_blowup(n, n - 3);
    for (std::size_t x = 0; x < adm.size(); ++x)
      for (std::size_t y = x + 1; y < adm.size(); ++y) {
        if (sets::star_compatible(adm[x], adm[y], n)) continue;
        const Element p = Element(n, Generator::exc(adm[x])) * Element(n, Generator::exc(adm[y]));
        if (n <= 5) {
          CHECK(blowup_reduce(p, n).is_zero());
          continue;
        }
        // larger n: a fixed pseudo-random sample of complementary monomials
        for (int t = 0; t < 8; ++t) {
          const auto& w = partners[rng() % partners.size()];
          CHECK(blowup_socle_eval(p * Element(n, w.to_monomial()), n) == 0);
        }
      }
  }
}

TEST_CASE("triangularity") {
  for (int n = 3; n <= 6; ++n) {
    std::mt19937 rng(static_cast<unsigned>(17 * n));
    for (int d = 0; d < n; ++d) {
      const auto v = enumerate_standard_blowup(n, d);
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (!e_less(v[i].e, v[j].e)) continue;
          if (n == 6 && rng() % 50 != 0) continue;
          CHECK(blowup_socle_eval(v[i].to_monomial() * blowup_dual(v[j], n).to_monomial(), n) == 0);
        }
    }
  }
}

TEST_CASE("filtration vanishing") {
  for (int n = 3; n <= 5; ++n) {
    const auto gens = blowup_generators(n);
    for (int dv = 0; dv < n; ++dv)
      for (const auto& v : enumerate_standard_blowup(n, dv)) {
        const int p = filtration_level(v, n);
        for (int d = std::max(0, n - p); dv + d <= n - 1; ++d)
          for (const auto& w : monomials_of_degree(gens, d)) {
            EPart we;
            for (const auto& [g, k] : w.factors())
              if (g.kind == GenKind::E) we.emplace_back(g.set(), k);
            if (!much_less(we, v.e)) continue;
            CHECK(pairs_to_zero(Element(n, v.to_monomial() * w), n));
          }
      }
  }
}

TEST_CASE("pairing matrices") {
  const auto p = pairing_matrix_blowup(3, 1);
  CHECK(p.monomials.size() == 4);
  CHECK(p.betti == 4);
  CHECK(p.matrix.get(3, 3) == -1);
  for (int n = 2; n <= 5; ++n) {
    const auto q = pairing_matrix_blowup(n, 0);
    CHECK(q.matrix == RationalMatrix::from_dense({{Rational(1)}}));
    CHECK(q.betti == 1);
  }
  CHECK(pairing_matrix_blowup(4, 1).betti == 11);
  // full and block assemblies have the same rank
  for (int d = 0; d < 5; ++d)
    CHECK(pairing_matrix_blowup(5, d, PairingMode::Full).betti == pairing_matrix_blowup(5, d).betti);
}

TEST_CASE("gorenstein verification") {
  const std::vector<std::vector<std::size_t>> dims = {
      {1, 1}, {1, 4, 1}, {1, 11, 11, 1}, {1, 26, 71, 26, 1}};
  for (int n = 2; n <= 5; ++n) {
    const auto rep = verify_gorenstein(n, PairingMode::Full);
    CHECK(rep.passed());
    CHECK(rep.dims == dims[static_cast<std::size_t>(n - 2)]);
  }
  const auto six = verify_gorenstein(6);
  CHECK(six.passed());
  CHECK(six.dims == std::vector<std::size_t>{1, 57, 348, 348, 57, 1});
}

TEST_CASE("brute-force oracle") {
  CHECK(brute_force_betti(3, 1) == 4);
  CHECK(brute_force_betti(4, 1) == 11);
  CHECK(brute_force_betti(4, 3) == 1);
  CHECK_THROWS_AS(brute_force_betti(6, 1), DomainError);
  for (int n = 2; n <= 5; ++n)
    for (int d = 0; d < n; ++d) CHECK(brute_force_betti(n, d) == pairing_matrix_blowup(n, d).betti);
}
