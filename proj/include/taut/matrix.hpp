#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

using RationalVector = std::vector<Rational>;

/// Sparse matrix over Q. Entries may be set in any order; zero entries are
/// dropped.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void set(std::size_t r, std::size_t c, const Rational& v);
  Rational get(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Rational>& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator*(const Rational& c) const;
  RationalVector apply(const RationalVector& v) const;
  RationalMatrix transpose() const;
  RationalMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  std::vector<std::vector<Rational>> to_dense() const;

  bool operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<std::size_t, Rational>> data_;
};

/// Reduced row-echelon form of a matrix: rows[k] has a leading 1 in
/// pivot_cols[k] and zeros in every other pivot column.
struct RowEchelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
};

/// Exact RREF by fraction-free elimination (rows kept primitive over Z, the
/// smallest-magnitude candidate is chosen as pivot), normalised at the end.
RowEchelon row_echelon(const RationalMatrix& m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<RationalVector> kernel;  // one vector per free column, ascending
};

RankKernel rank_and_kernel(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Exact rank of the span of sparse integer-valued rows over `cols` columns.
/// Rows are consumed; used for large ideal spans.
class IncrementalRank {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

  explicit IncrementalRank(std::size_t cols) : cols_(cols) {}
  /// Adds a row (entries need not be sorted; duplicates are summed). Returns
  /// true when the row was independent of those before it.
  bool add(SparseRow row);
  bool add_rational(const std::vector<std::pair<std::size_t, Rational>>& row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;  // keyed by leading column
};

/// Solves A x = b for square invertible A; throws DomainError if singular.
RationalVector solve(const RationalMatrix& a, const RationalVector& b);

}  // namespace taut
