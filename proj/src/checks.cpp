#include "taut/checks.hpp"

#include <algorithm>
#include <functional>

#include "taut/moduli.hpp"

namespace taut {

bool CheckReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

namespace {

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

CheckReport check_tmatrix(int m) {
  CheckReport rep{"tmatrix", {}};
  const RationalMatrix t = t_matrix(m);
  const std::string tag = "m=" + std::to_string(m) + ": ";
  if (m == 2) {
    const auto want = RationalMatrix::from_dense({{Rational(4), Rational(-2), Rational(-2)},
                                                  {Rational(-2), Rational(4), Rational(-2)},
                                                  {Rational(-2), Rational(-2), Rational(4)}});
    rep.add(tag + "explicit matrix", t == want);
  }
  Rational c = factorial(static_cast<unsigned>(m + 1));
  if (m % 2 == 1) c = -c;
  rep.add(tag + "T^2 = " + to_string(c) + " T", t * t == t * c);
  const Rational catalan = factorial(static_cast<unsigned>(2 * m)) /
                           (factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m + 1)));
  const std::size_t r = rank(t);
  rep.add(tag + "rank = " + to_string(catalan), Rational(static_cast<unsigned long>(r)) == catalan,
          "rank " + std::to_string(r));
  // the three-term multiples lie in the kernel and span it
  const auto kern = three_term_kernel(m);
  bool inside = true;
  for (const auto& v : kern) {
    const RationalVector img = t.apply(v);
    if (std::any_of(img.begin(), img.end(), [](const Rational& x) { return x != 0; })) inside = false;
  }
  RationalMatrix span(kern.size(), t.cols());
  for (std::size_t i = 0; i < kern.size(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) span.set(i, j, kern[i][j]);
  const std::size_t kr = rank(span);
  rep.add(tag + "kernel = span of three-term multiples", inside && kr + r == t.cols(),
          "span rank " + std::to_string(kr) + ", nullity " + std::to_string(t.cols() - r));
  return rep;
}

CheckReport check_oracle(int n) {
  CheckReport rep{"oracle", {}};
  std::vector<std::size_t> brute, pairing;
  for (int d = 0; d < n; ++d) {
    brute.push_back(brute_force_betti(n, d, true));
    pairing.push_back(pairing_matrix_blowup(n, d).betti);
  }
  rep.add("n=" + std::to_string(n) + ": oracle dims = pairing dims", brute == pairing,
          "oracle [" + dims_text(brute) + "], pairing [" + dims_text(pairing) + "]");
  return rep;
}

CheckReport check_gorenstein(int n, PairingMode mode, int jobs) {
  CheckReport rep{"gorenstein", {}};
  const PairingReport p = verify_gorenstein(n, mode, jobs);
  const std::string tag = "n=" + std::to_string(n) + ": ";
  std::string why;
  for (const auto& f : p.failures) why += (why.empty() ? "" : "; ") + f;
  rep.add(tag + "perfect pairing, symmetric dims [" + dims_text(p.dims) + "]", p.passed(), why);
  if (n >= 2) {
    const std::size_t want = (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1;
    rep.add(tag + "dim R^1 = " + std::to_string(want), p.dims.size() > 1 && p.dims[1] == want);
  }
  return rep;
}

CheckReport check_getzler() {
  CheckReport rep{"getzler", {}};
  const GetzlerReport g = verify_getzler_pullbacks();
  for (const auto& c : g.checks) {
    std::string detail;
    if (!c.passed && !c.computed.is_zero()) detail = "got " + to_string(c.computed) + ", expected " + to_string(c.expected);
    rep.add(c.name, c.passed, detail);
  }
  return rep;
}

CheckReport check_lambda(int max_n) {
  CheckReport rep{"lambda", {}};
  rep.add("lambda_integral(1,(0)) = 1/24", lambda_integral(1, {0}) == Rational(1, 24));
  rep.add("lambda_integral(2,(2)) = 7/5760", lambda_integral(2, {2}) == Rational(7, 5760));
  rep.add("epsilon(psi_1^2) = 1/24 at n=3", epsilon_eval(psi_class(1, 3).pow(2), 3) == Rational(1, 24));
  rep.add("epsilon(psi_1 psi_2) = 2/24 at n=3",
          epsilon_eval(psi_class(1, 3) * psi_class(2, 3), 3) == Rational(2) / 24);
  for (int n = 2; n <= max_n; ++n) {
    std::size_t total = 0, bad = 0;
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        alpha[static_cast<std::size_t>(i)] = left;
        Element x(n, Rational(1));
        for (int j = 0; j < n; ++j) x *= psi_class(j + 1, n).pow(alpha[static_cast<std::size_t>(j)]);
        ++total;
        if (epsilon_eval(x, n) != lambda_integral(1, alpha)) ++bad;
        return;
      }
      for (int k = 0; k <= left; ++k) {
        alpha[static_cast<std::size_t>(i)] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, n - 1);
    rep.add("n=" + std::to_string(n) + ": epsilon = lambda integral on " + std::to_string(total) + " psi monomials",
            bad == 0, std::to_string(bad) + " mismatches");
  }
  return rep;
}

}  // namespace taut
