#include "taut/moduli.hpp"

#include <algorithm>
#include <map>

#include "taut/errors.hpp"
#include "taut/parser.hpp"

namespace taut {

Element boundary_divisor(IndexSet I, int n) { return Element(n, Generator::boundary(I)); }

namespace {

Element exc_sum(IndexSet within, int n) {
  Element s(n);
  for (IndexSet I = within;; I = (I - 1) & within) {
    if (sets::size(I) <= n - 3) s += Element(n, Generator::exc(I));
    if (I == 0) break;
  }
  return s;
}

Element pullback_generator(const Generator& g, int n) {
  if (g.kind != GenKind::Bd) return Element(n, g);
  const IndexSet J = g.set();
  if (sets::size(J) >= 3) return Element(n, Generator::exc(sets::range(n) & ~J));
  const auto el = sets::elements(J);
  if (el[1] == n) {
    const int i = el[0];
    return Element(n, Generator::a(i)) - exc_sum(sets::range(n - 1) & ~sets::singleton(i), n);
  }
  return Element(n, Generator::d(el[0], el[1])) - exc_sum(sets::range(n) & ~J, n);
}

Element sum_containing(IndexSet must, int n) {
  Element s(n);
  const IndexSet rest = sets::range(n) & ~must;
  for (IndexSet t = rest;; t = (t - 1) & rest) {
    if (sets::size(must | t) >= 2) s += boundary_divisor(must | t, n);
    if (t == 0) break;
  }
  return s;
}

Element pushdown_generator(const Generator& g, int n) {
  switch (g.kind) {
    case GenKind::A:
      return sum_containing(sets::singleton(g.index()) | sets::singleton(n), n);
    case GenKind::D:
      return sum_containing(sets::singleton(g.lo()) | sets::singleton(g.hi()), n);
    case GenKind::B:
      return sum_containing(sets::singleton(g.lo()) | sets::singleton(g.hi()), n) -
             sum_containing(sets::singleton(g.lo()) | sets::singleton(n), n) -
             sum_containing(sets::singleton(g.hi()) | sets::singleton(n), n);
    case GenKind::E:
      return boundary_divisor(sets::range(n) & ~g.set(), n);
    case GenKind::Bd:
      return Element(n, g);
  }
  return Element(n);
}

template <class F>
Element substitute(const Element& x, int n, F image) {
  Element out(n);
  std::map<Generator, Element> cache;
  for (const auto& [m, c] : x.terms()) {
    Element t(n, Rational(c));
    for (const auto& [g, k] : m.factors()) {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, image(g)).first;
      for (int i = 0; i < k; ++i) t *= it->second;
    }
    out += t;
  }
  return out;
}

}  // namespace

Element pullback_F(const Element& x, int n) {
  for (const auto& [m, c] : x.terms())
    for (const auto& [g, k] : m.factors()) validate(g, n);
  return substitute(x, n, [n](const Generator& g) { return pullback_generator(g, n); });
}

Element pushdown_G(const Element& e, int n) {
  for (const auto& [m, c] : e.terms())
    for (const auto& [g, k] : m.factors()) validate(g, n);
  return substitute(e, n, [n](const Generator& g) { return pushdown_generator(g, n); });
}

Element psi_class(int i, int n) {
  if (i < 1 || i > n) throw IndexError("psi index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  return sum_containing(sets::singleton(i), n);
}

Element psi_genus0(int i, int j, int k, int n) {
  for (int x : {i, j, k})
    if (x < 1 || x > n) throw IndexError("psi index " + std::to_string(x) + " out of range for n=" + std::to_string(n));
  if (i == j || i == k || j == k) throw DomainError("psi_genus0 needs three distinct markings");
  Element s(n);
  const IndexSet rest = sets::range(n) & ~(sets::singleton(i) | sets::singleton(j) | sets::singleton(k));
  for (IndexSet t = rest;; t = (t - 1) & rest) {
    if (t != 0) s += boundary_divisor(sets::singleton(i) | t, n);
    if (t == 0) break;
  }
  return s;
}

Element forgetful_pullback(const Element& x, int n_from) {
  const int n = n_from + 1;
  Element out(n);
  for (const auto& [m, c] : x.terms()) {
    Element t(n, Rational(c));
    for (const auto& [g, k] : m.factors()) {
      if (g.kind != GenKind::Bd) throw DomainError("forgetful pullback is defined on D_I generators");
      validate(g, n_from);
      const Element img = boundary_divisor(g.set(), n) + boundary_divisor(g.set() | sets::singleton(n), n);
      for (int i = 0; i < k; ++i) t *= img;
    }
    out += t;
  }
  return out;
}

namespace {

Element D(std::initializer_list<int> xs) { return boundary_divisor(sets::from_elements(std::vector<int>(xs)), 4); }

}  // namespace

Element delta_22() { return D({1, 2}) * D({3, 4}) + D({1, 3}) * D({2, 4}) + D({1, 4}) * D({2, 3}); }

Element delta_23() {
  Element s(4);
  for (IndexSet pair : sets::subsets_by_size(4, 2, 2))
    for (IndexSet triple : sets::subsets_by_size(4, 3, 3))
      if (sets::is_subset(pair, triple)) s += boundary_divisor(pair, 4) * boundary_divisor(triple, 4);
  return s;
}

Element delta_24() {
  Element s(4);
  for (IndexSet pair : sets::subsets_by_size(4, 2, 2)) s += boundary_divisor(pair, 4) * D({1, 2, 3, 4});
  return s;
}

Element delta_34() {
  Element s(4);
  for (IndexSet triple : sets::subsets_by_size(4, 3, 3)) s += boundary_divisor(triple, 4) * D({1, 2, 3, 4});
  return s;
}

Element getzler_ct_relation() {
  return Rational(12) * delta_22() - Rational(4) * delta_23() - Rational(2) * delta_24() + Rational(6) * delta_34();
}

Rational bernoulli(int k) {
  if (k < 0) throw DomainError("Bernoulli index must be non-negative");
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -s / (m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b[static_cast<std::size_t>(k)];
}

Rational lambda_integral(int g, const std::vector<int>& alphas) {
  if (g < 1) throw DomainError("genus must be at least 1");
  if (alphas.empty()) throw DomainError("at least one marking is needed");
  const int n = static_cast<int>(alphas.size());
  int total = 0;
  for (int a : alphas) {
    if (a < 0) throw DomainError("negative exponent");
    total += a;
  }
  if (total != 2 * g - 3 + n)
    throw DomainError("exponents sum to " + std::to_string(total) + ", expected " + std::to_string(2 * g - 3 + n));
  Rational v = factorial(static_cast<unsigned>(total));
  for (int a : alphas) v /= factorial(static_cast<unsigned>(a));
  Rational pw = 1;
  for (int i = 0; i < 2 * g - 1; ++i) pw *= 2;
  Rational b = bernoulli(2 * g);
  if (b < 0) b = -b;
  v *= (pw - 1) / pw * b / factorial(static_cast<unsigned>(2 * g));
  v.canonicalize();
  return v;
}

Rational epsilon_eval(const Element& x, int n) {
  if (x.is_zero()) return 0;
  if (x.degree() != n - 1) throw DomainError("epsilon needs a homogeneous element of degree " + std::to_string(n - 1));
  // F^* is a ring map, so each monomial pulls back to a product of linear
  // forms that the socle evaluates without expanding.
  Rational v = 0;
  std::map<Generator, Element> images;
  for (const auto& [m, c] : x.terms()) {
    std::vector<Element> factors;
    for (const auto& [g, k] : m.factors()) {
      auto it = images.find(g);
      if (it == images.end()) it = images.emplace(g, pullback_F(Element(n, g), n)).first;
      for (int i = 0; i < k; ++i) factors.push_back(it->second);
    }
    v += c * blowup_socle_eval_product(factors, n);
  }
  v /= 24;
  v.canonicalize();
  return v;
}

LocalIdeal::LocalIdeal(int n) : n_(n) {
  std::vector<Element> rows;
  for (auto& r : labeled_relation_generators(n)) {
    if (r.value.degree() != 2) continue;
    if (r.family == "curve-three-term") continue;
    if (n <= 4 && r.family == "curve-bb") continue;
    rows.push_back(std::move(r.value));
  }
  columns_ = monomials_of_degree(blowup_generators(n), 2);
  // larger monomials first, so pivots eliminate exceptional terms before curve terms
  std::sort(columns_.begin(), columns_.end(), [](const Monomial& x, const Monomial& y) { return y < x; });
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < columns_.size(); ++i) col.emplace(columns_[i], i);
  RationalMatrix m(rows.size(), columns_.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [mono, c] : rows[i].terms()) m.set(i, col.at(mono), c);
  echelon_ = row_echelon(m);
}

Element LocalIdeal::normal_form(const Element& x) const {
  const Element e = expand_diagonals(Element(n_) + x);
  std::map<Monomial, Rational> vec;
  Element out(n_);
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() != 2) {
      out.add_term(m, c);
      continue;
    }
    vec[m] += c;
  }
  std::vector<Rational> dense(columns_.size());
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    auto it = vec.find(columns_[i]);
    if (it != vec.end()) dense[i] = it->second;
  }
  for (std::size_t k = 0; k < echelon_.pivot_cols.size(); ++k) {
    const Rational f = dense[echelon_.pivot_cols[k]];
    if (f == 0) continue;
    for (const auto& [j, v] : echelon_.rows[k]) dense[j] -= f * v;
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) out.add_term(columns_[i], dense[i]);
  return out;
}

Element getzler_display_4(const std::string& which) {
  const int n = 4;
  if (which == "delta_22") return parse_expression("a_1*d_{2,3} + a_2*d_{1,3} + a_3*d_{1,2} + 3*E0^2", n);
  if (which == "delta_23")
    return parse_expression("3*(a_1*a_2 + a_1*a_3 + a_2*a_3 + d_{1,2}*d_{1,3}) + 3*(4*E0 + E_1 + E_2 + E_3 + E_4)*E0", n);
  if (which == "delta_24") return parse_expression("-3*(2*E0 + E_1 + E_2 + E_3 + E_4)*E0", n);
  if (which == "delta_34") return parse_expression("(E_1 + E_2 + E_3 + E_4)*E0", n);
  throw DomainError("unknown class " + which);
}

Element getzler_display_5(const std::string& which) {
  const int n = 5;
  std::string s;
  if (which == "delta_22") {
    s = "d_{1,2}*d_{3,4} + d_{1,3}*d_{2,4} + d_{1,4}*d_{2,3} + 3*(E0 + E_5)^2";
  } else if (which == "delta_23") {
    s = "12*(E0+E_5)^2 + 3*(d_{1,2}*d_{1,3} + d_{1,2}*d_{1,4} + d_{1,3}*d_{1,4} + d_{2,3}*d_{2,4}";
    for (int i = 1; i <= 4; ++i) s += " + (E0+E_5)*(E_" + std::to_string(i) + " + E_{" + std::to_string(i) + ",5})";
    s += ")";
  } else if (which == "delta_24") {
    s = "-6*(E0 + E_5)^2";
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        s += " - d_{" + std::to_string(i) + "," + std::to_string(j) + "}*(E_{" + std::to_string(i) + ",5} + E_{" +
             std::to_string(j) + ",5})";
    for (int i = 1; i <= 4; ++i) s += " - 3*E0*E_" + std::to_string(i);
  } else if (which == "delta_34") {
    s = "0";
    for (int i = 1; i <= 4; ++i) {
      const std::string si = std::to_string(i);
      s += " + E_5*E_{" + si + ",5} + E0*(E_" + si + " + E_{" + si + ",5})";
    }
  } else {
    throw DomainError("unknown class " + which);
  }
  return parse_expression(s, n);
}

bool GetzlerReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const GetzlerCheck& c) { return c.passed; });
}

GetzlerReport verify_getzler_pullbacks() {
  GetzlerReport rep;
  const std::vector<std::pair<std::string, Element>> classes = {
      {"delta_22", delta_22()}, {"delta_23", delta_23()}, {"delta_24", delta_24()}, {"delta_34", delta_34()}};
  const std::vector<Rational> weights = {12, -4, -2, 6};

  auto compare = [&](std::string name, const LocalIdeal& ideal, const Element& got, const Element& want) {
    GetzlerCheck c{std::move(name), ideal.normal_form(got), ideal.normal_form(want), false};
    c.passed = c.computed == c.expected;
    rep.checks.push_back(std::move(c));
  };
  auto check = [&](std::string name, bool ok) {
    rep.checks.push_back({std::move(name), Element(), Element(), ok});
  };
  auto vanishes = [](const Element& x, int n) {
    for (const auto& w : enumerate_standard_blowup(n, n - 1 - 2))
      if (blowup_socle_eval(x * Element(n, w.to_monomial()), n) != 0) return false;
    return true;
  };

  // four markings
  {
    const LocalIdeal ideal(4);
    Element total(4);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Element pb = pullback_F(classes[i].second, 4);
      compare("F^* " + classes[i].first, ideal, pb, getzler_display_4(classes[i].first));
      total += weights[i] * pb;
    }
    rep.relation4 = parse_expression("12*(a_1*b_{2,3} - b_{1,2}*b_{1,3})", 4);
    compare("F^* relation", ideal, total, rep.relation4);
    check("relation nonzero in the local quotient (n=4)", !ideal.contains(rep.relation4));
    check("relation vanishes in the ring (n=4)", vanishes(rep.relation4, 4));
  }
  // five markings through the forgetful map
  {
    const LocalIdeal ideal(5);
    Element total(5);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Element pb = pullback_F(forgetful_pullback(classes[i].second, 4), 5);
      compare("(pi F)^* " + classes[i].first, ideal, pb, getzler_display_5(classes[i].first));
      total += weights[i] * pb;
    }
    rep.relation5 = parse_expression("12*(b_{1,2}*b_{3,4} + b_{1,3}*b_{2,4} + b_{1,4}*b_{2,3})", 5);
    compare("(pi F)^* relation", ideal, total, rep.relation5);
    check("relation nonzero in the local quotient (n=5)", !ideal.contains(rep.relation5));
    check("relation vanishes in the ring (n=5)", vanishes(rep.relation5, 5));
  }
  return rep;
}

}  // namespace taut
