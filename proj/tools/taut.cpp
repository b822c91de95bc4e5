// Command-line front end for the tautological ring computations.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <algorithm>
#include <map>
#include <optional>

#include "taut/checks.hpp"
#include "taut/curve_ring.hpp"
#include "taut/errors.hpp"
#include "taut/moduli.hpp"
#include "taut/parser.hpp"

using namespace taut;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "taut-ring/1";

enum class Format { Text, Json, Csv };

struct Options {
  int n = 3;
  std::optional<int> degree;
  int m = 2;
  int max_n = 0;
  std::string ring = "blowup";
  std::string suite = "all";
  std::string expression;
  std::string mode = "blocks";
  Format format = Format::Text;
  bool eval = false;
  bool pullback = false;
  bool slow = false;
  int jobs = 1;
  int genus = 1;
  std::vector<int> alphas;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_n(const Options& o, int default_cap) {
  const int cap = o.max_n > 0 ? o.max_n : default_cap;
  if (o.n < 2 || o.n > cap)
    throw UsageError("--n must be in [2, " + std::to_string(cap) + "] (raise the cap with --max-n)");
  if (o.degree && (*o.degree < 0 || *o.degree > o.n - 1))
    throw UsageError("--degree must be in [0, " + std::to_string(o.n - 1) + "]");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_report(const CheckReport& rep, Format f) {
  if (f == Format::Json) {
    json j{{"schema", kSchema}, {"suite", rep.suite}, {"passed", rep.passed()}, {"checks", json::array()}};
    for (const auto& l : rep.lines) j["checks"].push_back({{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
    std::cout << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << "suite,check,status,detail\n";
    for (const auto& l : rep.lines)
      std::cout << rep.suite << "," << csv_escape(l.name) << "," << (l.passed ? "PASS" : "FAIL") << ","
                << csv_escape(l.detail) << "\n";
  } else {
    for (const auto& l : rep.lines) {
      std::cout << (l.passed ? "PASS " : "FAIL ") << l.name;
      if (!l.detail.empty()) std::cout << " (" << l.detail << ")";
      std::cout << "\n";
    }
    std::cout << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
}

int cmd_betti(const Options& o) {
  check_n(o, 7);
  const PairingReport p = verify_gorenstein(o.n, o.mode == "full" ? PairingMode::Full : PairingMode::Blocks, o.jobs);
  const std::size_t top = p.dims.size() - 1;
  if (o.format == Format::Json) {
    json j{{"schema", kSchema}, {"n", o.n}, {"dims", p.dims}, {"gorenstein", p.passed()}};
    if (!p.failures.empty()) j["failures"] = p.failures;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == Format::Csv) {
    std::cout << "degree,dim,standard_monomials,symmetric\n";
    for (std::size_t d = 0; d <= top; ++d)
      std::cout << d << "," << p.dims[d] << "," << p.standard_counts[d] << ","
                << (p.dims[d] == p.dims[top - d] ? "yes" : "no") << "\n";
  } else {
    std::cout << "R*(M_{1," << o.n << "}^ct)\n";
    for (std::size_t d = 0; d <= top; ++d)
      std::cout << "  R^" << d << ": " << p.dims[d] << (p.dims[d] == p.dims[top - d] ? "  [sym ok]" : "  [sym FAIL]")
                << "\n";
    for (const auto& f : p.failures) std::cout << "  failure: " << f << "\n";
    std::cout << "gorenstein: " << (p.passed() ? "yes" : "no") << "\n";
  }
  return p.passed() ? 0 : 1;
}

int cmd_pairing(const Options& o) {
  check_n(o, 6);
  if (!o.degree) throw UsageError("pairing needs --degree");
  const BlowupPairing p =
      pairing_matrix_blowup(o.n, *o.degree, o.mode == "full" ? PairingMode::Full : PairingMode::Blocks, o.jobs);
  const auto dense = p.matrix.to_dense();
  if (o.format == Format::Json) {
    json rows = json::array(), labels = json::array();
    for (const auto& v : p.monomials) labels.push_back(to_string(v));
    for (const auto& r : dense) {
      json row = json::array();
      for (const auto& x : r) row.push_back(to_string(x));
      rows.push_back(row);
    }
    std::cout << json{{"schema", kSchema}, {"n", o.n},       {"degree", *o.degree},
                      {"rank", p.betti},   {"monomials", labels}, {"matrix", rows}}
                     .dump(2)
              << "\n";
  } else if (o.format == Format::Csv) {
    std::cout << "row";
    for (const auto& v : p.monomials) std::cout << "," << csv_escape(to_string(blowup_dual(v, o.n)));
    std::cout << "\n";
    for (std::size_t i = 0; i < dense.size(); ++i) {
      std::cout << csv_escape(to_string(p.monomials[i]));
      for (const auto& x : dense[i]) std::cout << "," << to_string(x);
      std::cout << "\n";
    }
  } else {
    std::cout << "pairing R^" << *o.degree << " x R^" << o.n - 1 - *o.degree << " on n=" << o.n << ": "
              << p.monomials.size() << " standard monomials, rank " << p.betti << "\n";
    for (std::size_t i = 0; i < dense.size(); ++i) {
      std::cout << "  " << to_string(p.monomials[i]) << ":";
      for (const auto& x : dense[i]) std::cout << " " << to_string(x);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(const Options& o) {
  static const std::vector<std::string> suites = {"gorenstein", "getzler", "oracle", "tmatrix", "all"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw UsageError("unknown suite '" + o.suite + "'");
  CheckReport rep{o.suite, {}};
  const bool all = o.suite == "all";
  if (all || o.suite == "tmatrix") {
    if (o.m < 1 || o.m > 6) throw UsageError("--m must be in [1, 6]");
    if (all) {
      for (int m = 2; m <= 4; ++m) rep.append(check_tmatrix(m));
    } else {
      rep.append(check_tmatrix(o.m));
    }
  }
  if (all || o.suite == "getzler") {
    rep.append(check_getzler());
  }
  if (all || o.suite == "gorenstein") {
    check_n(o, 7);
    const PairingMode mode = o.mode == "full" ? PairingMode::Full : PairingMode::Blocks;
    if (all)
      for (int n = 2; n <= (o.slow ? 6 : 5); ++n) rep.append(check_gorenstein(n, mode, o.jobs));
    else
      rep.append(check_gorenstein(o.n, mode, o.jobs));
  }
  if (all || o.suite == "oracle") {
    const int cap = o.slow ? 6 : 5;
    if (!all && (o.n < 2 || o.n > (o.max_n > 0 ? o.max_n : cap)))
      throw UsageError("oracle --n must be in [2, " + std::to_string(cap) + "] (--slow raises it to 6)");
    if (all)
      for (int n = 3; n <= cap; ++n) rep.append(check_oracle(n));
    else
      rep.append(check_oracle(o.n));
  }
  print_report(rep, o.format);
  if (o.format == Format::Text && (all || o.suite == "getzler")) {
    const GetzlerReport g = verify_getzler_pullbacks();
    std::cout << "pulled back n=4 relation: " << to_string(g.relation4) << " (zero in the ring)\n";
    std::cout << "pulled back n=5 relation: " << to_string(g.relation5) << " (zero in the ring)\n";
  }
  return rep.passed() ? 0 : 1;
}

void print_reduced(const Options& o, const std::string& ring, const Element& r, std::optional<Rational> value,
                   const std::string& value_name) {
  if (o.format == Format::Json) {
    json j{{"schema", kSchema}, {"ring", ring}, {"n", o.n}, {"input", o.expression}, {"result", to_string(r)}};
    if (value) j[value_name] = to_string(*value);
    std::cout << j.dump(2) << "\n";
  } else if (o.format == Format::Csv) {
    std::cout << "ring,n,input,result" << (value ? "," + value_name : "") << "\n";
    std::cout << ring << "," << o.n << "," << csv_escape(o.expression) << "," << csv_escape(to_string(r));
    if (value) std::cout << "," << to_string(*value);
    std::cout << "\n";
  } else {
    std::cout << to_string(r) << "\n";
    if (value) std::cout << value_name << ": " << to_string(*value) << "\n";
  }
}

int cmd_reduce(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be positive");
  std::optional<Rational> value;
  if (o.ring == "curve") {
    const Element x = parse_expression(o.expression, curve_ambient(o.n));
    const Element r = curve_normal_form(x, o.n);
    if (o.eval) {
      if (x.degree() != std::optional<int>(o.n)) throw UsageError("--eval needs an element of degree " + std::to_string(o.n));
      value = curve_socle_eval(r, o.n);
    }
    print_reduced(o, "curve", r, value, "value");
    return 0;
  }
  check_n(o, 7);
  const Element x = parse_expression(o.expression, o.n);
  if (o.ring == "blowup") {
    for (const auto& [m, c] : x.terms())
      for (const auto& [g, k] : m.factors())
        if (g.kind == GenKind::Bd) throw UsageError("D_I classes belong to --ring moduli");
    const Element r = blowup_reduce(x, o.n);
    if (o.eval) {
      if (x.degree() != std::optional<int>(o.n - 1)) throw UsageError("--eval needs an element of degree " + std::to_string(o.n - 1));
      value = blowup_socle_eval(r, o.n);
    }
    print_reduced(o, "blowup", r, value, "value");
    return 0;
  }
  if (o.ring == "moduli") {
    for (const auto& [m, c] : x.terms())
      for (const auto& [g, k] : m.factors())
        if (g.kind != GenKind::Bd) throw UsageError("--ring moduli takes D_I classes and psi_i only");
    const Element r = o.pullback ? blowup_reduce(pullback_F(x, o.n), o.n) : x;
    if (o.eval) {
      if (x.degree() != std::optional<int>(o.n - 1)) throw UsageError("--eval needs an element of degree " + std::to_string(o.n - 1));
      value = epsilon_eval(x, o.n);
    }
    print_reduced(o, "moduli", r, value, "epsilon");
    return 0;
  }
  throw UsageError("unknown ring '" + o.ring + "'");
}

int cmd_integral(const Options& o) {
  const Rational v = lambda_integral(o.genus, o.alphas);
  std::string alphas;
  for (int a : o.alphas) alphas += (alphas.empty() ? "" : " ") + std::to_string(a);
  if (o.format == Format::Json) {
    std::cout << json{{"schema", kSchema}, {"g", o.genus}, {"alphas", o.alphas}, {"value", to_string(v)}}.dump(2)
              << "\n";
  } else if (o.format == Format::Csv) {
    std::cout << "g,alphas,value\n" << o.genus << "," << alphas << "," << to_string(v) << "\n";
  } else {
    std::cout << to_string(v) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tautological rings of M_{1,n}^ct and their blow-up models"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of markings");
    sub->add_option("--format", o.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--max-n", o.max_n, "raise the default bound on --n");
    sub->add_flag("--slow", o.slow, "include the expensive cases");
  };

  auto* betti = app.add_subcommand("betti", "dimensions of R^d for d = 0..n-1");
  common(betti);
  betti->add_option("--mode", o.mode, "blocks or full")->check(CLI::IsMember({"blocks", "full"}));

  auto* pairing = app.add_subcommand("pairing", "pairing matrix between R^d and R^{n-1-d}");
  common(pairing);
  pairing->add_option("--degree", o.degree, "degree d");
  pairing->add_option("--mode", o.mode, "blocks or full")->check(CLI::IsMember({"blocks", "full"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("suite", o.suite, "gorenstein, getzler, oracle, tmatrix or all");
  verify->add_option("--m", o.m, "half size for the tmatrix suite");
  verify->add_option("--mode", o.mode, "blocks or full")->check(CLI::IsMember({"blocks", "full"}));

  auto* reduce = app.add_subcommand("reduce", "reduce an expression");
  common(reduce);
  reduce->add_option("expression", o.expression, "expression in the ring")->required();
  reduce->add_option("--ring", o.ring, "curve, blowup or moduli")->check(CLI::IsMember({"curve", "blowup", "moduli"}));
  reduce->add_option("--degree", o.degree, "unused; accepted for symmetry");
  reduce->add_flag("--eval", o.eval, "also print the socle value in top degree");
  reduce->add_flag("--pullback", o.pullback, "map moduli classes to the blow-up ring first");

  auto* integral = app.add_subcommand("integral", "closed-form psi/lambda_g integral");
  integral->add_option("--g", o.genus, "genus")->default_val(1);
  integral->add_option("--alphas", o.alphas, "psi exponents")->required()->expected(1, -1);
  integral->add_option("--format", o.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*betti) return cmd_betti(o);
    if (*pairing) return cmd_pairing(o);
    if (*verify) return cmd_verify(o);
    if (*reduce) return cmd_reduce(o);
    if (*integral) return cmd_integral(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AmbientMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
