#include "taut/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "taut/errors.hpp"

namespace taut {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// x := p*x - q*y, then primitive.
void combine(IntRow& x, const Integer& p, const Integer& q, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, p * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, -q * j->second);
      ++j;
    } else {
      Integer v = p * i->second - q * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  x = std::move(out);
  make_primitive(x);
}

const Integer* entry_at(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

IntRow to_integer_row(const std::map<std::size_t, Rational>& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
  make_primitive(out);
  return out;
}

void eliminate_with(IntRow& x, const IntRow& pivot, std::size_t col) {
  const Integer* xv = entry_at(x, col);
  if (xv == nullptr) return;
  const Integer* pv = entry_at(pivot, col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), xv->get_mpz_t(), pv->get_mpz_t());
  Integer p = *pv / g, q = *xv / g;
  combine(x, p, q, pivot);
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (v == 0) {
    data_[r].erase(c);
  } else {
    Rational& slot = data_[r][c];
    slot = v;
    slot.canonicalize();
  }
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t k = 0;
  for (const auto& r : data_) k += r.size();
  return k;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, v] : data_[r]) {
      for (const auto& [c, w] : other.data_[k]) acc[c] += v * w;
    }
    for (auto& [c, v] : acc) {
      if (v != 0) out.data_[r].emplace(c, std::move(v));
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const {
  RationalMatrix out(rows_, cols_);
  if (c == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [k, v] : data_[r]) out.data_[r].emplace(k, v * c);
  }
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace(r, v);
  }
  return out;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto it = data_[rows[i]].find(cols[j]);
      if (it != data_[rows[i]].end()) out.data_[i].emplace(j, it->second);
    }
  }
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  }
  return out;
}

RowEchelon row_echelon(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = to_integer_row(m.row(r));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  RowEchelon out;
  out.cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      const Integer* v = entry_at(rows[i], col);
      if (v == nullptr) continue;
      if (best == rows.size() || mpz_cmpabs(v->get_mpz_t(), entry_at(rows[best], col)->get_mpz_t()) < 0) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank) eliminate_with(rows[i], rows[rank], col);
    }
    out.pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t k = 0; k < rank; ++k) {
    const Integer lead = *entry_at(rows[k], out.pivot_cols[k]);
    std::vector<std::pair<std::size_t, Rational>> row;
    row.reserve(rows[k].size());
    for (const auto& [c, v] : rows[k]) {
      Rational q(v, lead);
      q.canonicalize();
      row.emplace_back(c, std::move(q));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

RankKernel rank_and_kernel(const RationalMatrix& m) {
  RowEchelon e = row_echelon(m);
  RankKernel out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      for (const auto& [c, x] : e.rows[k]) {
        if (c == f) v[e.pivot_cols[k]] = -x;
      }
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  IncrementalRank acc(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    acc.add_rational(std::vector<std::pair<std::size_t, Rational>>(m.row(r).begin(), m.row(r).end()));
  }
  return acc.rank();
}

bool IncrementalRank::add(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseRow merged;
  merged.reserve(row.size());
  for (auto& [c, v] : row) {
    if (c >= cols_) throw std::out_of_range("column index");
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second += v;
    } else {
      merged.emplace_back(c, std::move(v));
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  make_primitive(merged);
  while (!merged.empty()) {
    const std::size_t lead = merged.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      pivots_.emplace(lead, std::move(merged));
      return true;
    }
    if (mpz_cmpabs(merged.front().second.get_mpz_t(), it->second.front().second.get_mpz_t()) < 0) std::swap(merged, it->second);
    eliminate_with(merged, it->second, lead);
  }
  return false;
}

bool IncrementalRank::add_rational(const std::vector<std::pair<std::size_t, Rational>>& row) {
  std::map<std::size_t, Rational> m;
  for (const auto& [c, v] : row) m[c] += v;
  std::erase_if(m, [](const auto& e) { return e.second == 0; });
  return add(to_integer_row(m));
}

RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : a.row(r)) aug.set(r, c, v);
    aug.set(r, n, b[r]);
  }
  RowEchelon e = row_echelon(aug);
  if (e.pivot_cols.size() != n || (n > 0 && e.pivot_cols.back() != n - 1)) {
    throw DomainError("solve: singular system");
  }
  RationalVector x(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [c, v] : e.rows[k]) {
      if (c == n) x[e.pivot_cols[k]] = v;
    }
  }
  return x;
}

}  // namespace taut
