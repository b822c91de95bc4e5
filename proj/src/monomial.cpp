#include "taut/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace taut {

namespace {

void canonicalize(std::vector<Monomial::Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (out > 0 && fs[out - 1].first == fs[i].first) {
      fs[out - 1].second += fs[i].second;
    } else {
      fs[out++] = fs[i];
    }
  }
  fs.resize(out);
  std::erase_if(fs, [](const auto& f) { return f.second == 0; });
}

}  // namespace

Monomial::Monomial(const Generator& g, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) {
    factors_.emplace_back(g, exponent);
    degree_ = exponent;
  }
}

Monomial::Monomial(std::initializer_list<Factor> factors) : Monomial(from_factors(std::vector<Factor>(factors))) {}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  for (const auto& f : factors) {
    if (f.second < 0) throw std::invalid_argument("negative exponent");
  }
  canonicalize(factors);
  Monomial m;
  m.factors_ = std::move(factors);
  for (const auto& f : m.factors_) m.degree_ += f.second;
  return m;
}

int Monomial::exponent(const Generator& g) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                             [](const Factor& f, const Generator& x) { return f.first < x; });
  return (it != factors_.end() && it->first == g) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) { return *this = *this * other; }

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (k == 0) return Monomial();
  Monomial out = *this;
  for (auto& f : out.factors_) f.second *= k;
  out.degree_ *= k;
  return out;
}

Monomial Monomial::without(const Generator& g, int times) const {
  Monomial out = *this;
  for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
    if (it->first == g) {
      if (it->second < times) break;
      it->second -= times;
      out.degree_ -= times;
      if (it->second == 0) out.factors_.erase(it);
      return out;
    }
  }
  throw std::invalid_argument("generator " + to_string(g) + " does not divide " + to_string(*this));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  GeneratorHash gh;
  for (const auto& f : factors_) {
    h ^= gh(f.first) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(f.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() <=> y.degree();
  const auto& a = x.factors();
  const auto& b = y.factors();
  // Lex on the expanded sequences g1 <= g2 <= ...: at the first differing
  // factor the smaller generator wins; on equal generators the monomial
  // carrying more copies continues with that generator and so is smaller.
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first <=> b[i].first;
    if (a[i].second != b[i].second) return b[i].second <=> a[i].second;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [g, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += to_string(g);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace taut
