#include "taut/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "taut/errors.hpp"

namespace taut {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) {}

  Element run() {
    Element e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(d);
  }

  Element expr() {
    Element e(n_);
    bool negate = accept('-');
    if (!negate) accept('+');
    e = term();
    if (negate) e = -e;
    for (;;) {
      if (accept('+')) {
        e += term();
      } else if (accept('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  Element term() {
    Element e = factor();
    while (accept('*')) e = multiply(e, factor());
    return e;
  }

  Element factor() {
    Element e = primary();
    if (accept('^')) e = e.pow(small_int());
    return e;
  }

  Element primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      if (accept('/')) {
        const std::size_t at = pos_;
        Integer den(digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return Element(n_, q);
      }
      return Element(n_, Rational(num));
    }
    return generator();
  }

  std::vector<int> index_list() {
    std::vector<int> xs;
    expect('{');
    if (accept('}')) return xs;
    do {
      xs.push_back(small_int());
    } while (accept(','));
    expect('}');
    return xs;
  }

  IndexSet index_set(const std::vector<int>& xs, std::size_t at) {
    IndexSet s = 0;
    for (int x : xs) {
      if (x < 1 || x > 31) {
        throw IndexError("index " + std::to_string(x) + " out of range for n=" + std::to_string(n_) +
                         " at position " + std::to_string(at));
      }
      if (sets::contains(s, x)) {
        pos_ = at;
        fail("repeated index " + std::to_string(x));
      }
      s |= sets::singleton(x);
    }
    return s;
  }

  Element checked(const Generator& g) {
    validate(g, n_);
    return Element(n_, g);
  }

  Element pair_generator(bool is_b) {
    const std::size_t at = pos_;
    expect('{');
    const int j = small_int();
    expect(',');
    const int k = small_int();
    expect('}');
    if (j == k) {
      pos_ = at;
      fail("repeated index " + std::to_string(j));
    }
    if (j < 1 || k < 1) {
      throw IndexError(std::string(is_b ? "b" : "d") + "_{" + std::to_string(j) + "," + std::to_string(k) +
                       "} is out of range for n=" + std::to_string(n_));
    }
    return checked(is_b ? Generator::b(j, k) : Generator::d(j, k));
  }

  Element generator() {
    const std::size_t at = pos_;
    if (accept_word("psi_")) {
      const int i = small_int();
      if (i < 1 || i > n_) throw IndexError("psi_" + std::to_string(i) + " is out of range for n=" + std::to_string(n_));
      Element e(n_);
      for (IndexSet s : sets::subsets_by_size(n_, 2, n_)) {
        if (sets::contains(s, i)) e.add_term(Monomial(Generator::boundary(s)), 1);
      }
      return e;
    }
    if (accept_word("a_")) {
      const int i = small_int();
      if (i < 1) throw IndexError("a_" + std::to_string(i) + " is out of range for n=" + std::to_string(n_));
      return checked(Generator::a(i));
    }
    if (accept_word("b_")) return pair_generator(true);
    if (accept_word("d_")) return pair_generator(false);
    if (accept_word("E0")) return checked(Generator::exc(0));
    if (accept_word("E_")) {
      const std::size_t list_at = pos_;
      if (peek('{')) return checked(Generator::exc(index_set(index_list(), list_at)));
      const int i = small_int();
      if (i == 0) return checked(Generator::exc(0));
      return checked(Generator::exc(index_set({i}, list_at)));
    }
    if (accept_word("D_")) {
      const std::size_t list_at = pos_;
      return checked(Generator::boundary(index_set(index_list(), list_at)));
    }
    pos_ = at;
    fail("expected coefficient, generator or '('");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(std::string_view text, int ambient_n) {
  if (ambient_n < 2) throw DomainError("ambient n must be at least 2");
  return Parser(text, ambient_n).run();
}

}  // namespace taut
