#include "taut/element.hpp"

#include "taut/errors.hpp"

namespace taut {

namespace {

int joint_ambient(int x, int y) {
  if (x == 0) return y;
  if (y == 0 || x == y) return x;
  throw AmbientMismatch("ambient n=" + std::to_string(x) + " vs n=" + std::to_string(y));
}

}  // namespace

Element::Element(int ambient, const Rational& constant) : ambient_(ambient) {
  add_term(Monomial(), constant);
}

Element::Element(int ambient, const Monomial& m, const Rational& coeff) : ambient_(ambient) {
  add_term(m, coeff);
}

Element::Element(int ambient, const Generator& g, const Rational& coeff)
    : Element(ambient, Monomial(g), coeff) {}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

bool Element::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

Element Element::component(int d) const {
  Element out(ambient_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

int Element::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Element Element::operator-() const {
  Element out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& other) {
  ambient_ = joint_ambient(ambient_, other.ambient_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  ambient_ = joint_ambient(ambient_, other.ambient_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    Rational k = c;
    k.canonicalize();
    for (auto& [m, x] : terms_) x *= k;
  }
  return *this;
}

Element& Element::operator*=(const Element& other) { return *this = multiply(*this, other); }

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

Element multiply(const Element& x, const Element& y) {
  Element out(joint_ambient(x.ambient(), y.ambient()));
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) out.add_term(m1 * m2, c1 * c2);
  }
  return out;
}

Element Element::pow(int k) const {
  if (k < 0) throw DomainError("negative power");
  Element result(ambient_, Rational(1));
  Element base = *this;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += mag.get_str() + "*" + to_string(m);
    }
  }
  return out;
}

}  // namespace taut
