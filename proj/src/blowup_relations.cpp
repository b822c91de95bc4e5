#include "taut/blowup_ring.hpp"
#include "taut/errors.hpp"

namespace taut {

namespace {

Element gen(int n, const Generator& g, const Rational& c = 1) { return Element(n, g, c); }

Element diag(int n, int j, int k) {
  return gen(n, Generator::b(std::min(j, k), std::max(j, k))) + gen(n, Generator::a(j)) + gen(n, Generator::a(k));
}

// prod over factors of (f - t)
Element chern_at(const std::vector<Element>& factors, const Element& t, int n) {
  Element out(n, Rational(1));
  for (const auto& f : factors) out *= (f - t);
  return out;
}

Element exc_sum_below(IndexSet I, int n) {
  Element s(n);
  for (IndexSet J = I;; J = (J - 1) & I) {
    if (sets::size(J) <= n - 3) s += gen(n, Generator::exc(J));
    if (J == 0) break;
  }
  return s;
}

}  // namespace

Element expand_diagonals(const Element& e) {
  const int n = e.ambient();
  Element out(n);
  for (const auto& [m, c] : e.terms()) {
    Element t(n, Rational(c));
    for (const auto& [g, k] : m.factors()) {
      const Element f = g.kind == GenKind::D ? diag(n, g.lo(), g.hi()) : gen(n, g);
      for (int i = 0; i < k; ++i) t *= f;
    }
    out += t;
  }
  return out;
}

std::vector<Element> center_presentation(IndexSet I, int n) {
  std::vector<Element> out;
  const IndexSet outside = sets::range(n - 1) & ~I;
  if (!sets::contains(I, n)) {
    for (int i : sets::elements(outside)) out.push_back(gen(n, Generator::a(i)));
  } else if (outside != 0) {
    const int j0 = sets::min_element(outside);
    for (int k : sets::elements(outside))
      if (k != j0) out.push_back(diag(n, j0, k));
  }
  return out;
}

std::vector<LabeledRelation> labeled_relation_generators(int n) {
  std::vector<LabeledRelation> out;
  const int m = n - 1;
  auto A = [&](int i) { return gen(n, Generator::a(i)); };
  auto B = [&](int i, int j) { return gen(n, Generator::b(std::min(i, j), std::max(i, j))); };
  auto E = [&](IndexSet s) { return gen(n, Generator::exc(s)); };

  for (int i = 1; i <= m; ++i) out.push_back({"curve-square", A(i) * A(i)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) out.push_back({"curve-ab", A(i) * B(i, j)});
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.push_back({"curve-bsquare", B(i, j) * B(i, j) + Rational(2) * A(i) * A(j)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        if (i != j && i != k) out.push_back({"curve-bb", B(i, j) * B(i, k) - A(i) * B(j, k)});
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l)
          out.push_back({"curve-three-term", B(i, j) * B(k, l) + B(i, k) * B(j, l) + B(i, l) * B(j, k)});
  if (n < 3) return out;

  const auto adm = sets::subsets_by_size(n, 0, n - 3);
  for (std::size_t x = 0; x < adm.size(); ++x)
    for (std::size_t y = x + 1; y < adm.size(); ++y)
      if (!sets::star_compatible(adm[x], adm[y], n)) out.push_back({"star", E(adm[x]) * E(adm[y])});

  for (IndexSet I : adm) {
    const IndexSet outside = sets::range(m) & ~I;
    if (!sets::contains(I, n)) {
      for (int j : sets::elements(outside)) {
        out.push_back({"kernel", A(j) * E(I)});
        for (int k = 1; k <= m; ++k)
          if (k != j) out.push_back({"kernel", B(j, k) * E(I)});
      }
    } else {
      const int j0 = sets::min_element(outside);
      for (int j : sets::elements(outside)) {
        if (j != j0) out.push_back({"kernel", (A(j) - A(j0)) * E(I)});
        for (int k : sets::elements(outside))
          if (j < k) out.push_back({"kernel", (B(j, k) + Rational(2) * A(j0)) * E(I)});
      }
      for (int i : sets::elements(I & sets::range(m)))
        for (int k : sets::elements(outside))
          if (k != j0) out.push_back({"kernel", (B(i, k) - B(i, j0) + A(k) - A(j0)) * E(I)});
      for (int i : sets::elements(I & sets::range(m)))
        for (int k : sets::elements(outside))
          out.push_back({"exceptional-restriction",
                         (B(i, k) - exc_sum_below(I & ~sets::singleton(i), n) + A(i) + A(k)) * E(I)});
    }
  }

  // X_I ∩ X_L = X_K transversally, with X_L cut out by the generators
  // separating I - K from the rest.
  for (IndexSet I : adm) {
    if (I == 0) continue;
    const int j0 = sets::contains(I, n) ? sets::min_element(sets::range(n) & ~I) : n;
    for (IndexSet K = (I - 1) & I;; K = (K - 1) & I) {
      const IndexSet lc = (I & ~K) | sets::singleton(j0);
      std::vector<Element> factors;
      if (sets::contains(lc, n)) {
        for (int i : sets::elements(lc & ~sets::singleton(n))) factors.push_back(A(i));
      } else {
        const int m0 = sets::min_element(lc);
        for (int i : sets::elements(lc))
          if (i != m0) factors.push_back(diag(n, m0, i));
      }
      out.push_back({"transversal", chern_at(factors, exc_sum_below(K, n), n) * E(I)});
      if (K == 0) break;
    }
  }

  for (IndexSet I : adm) out.push_back({"center", chern_at(center_presentation(I, n), exc_sum_below(I, n), n)});
  return out;
}

std::vector<Element> relation_generators(int n) {
  std::vector<Element> out;
  for (auto& r : labeled_relation_generators(n)) out.push_back(std::move(r.value));
  return out;
}

}  // namespace taut
