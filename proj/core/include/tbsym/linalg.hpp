#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tbsym/polyring.hpp"

namespace tbsym {

/// Dense matrix of rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transposed() const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Dense matrix of polynomials over one variable table.
class PolyMatrix {
 public:
  PolyMatrix(VarTablePtr table, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(VarTablePtr table, std::size_t n);
  /// Rows of gradients: entry (i, j) = d polys[i] / d vars[j].
  static PolyMatrix jacobian(std::span<const MultiPoly> polys, std::span<const VarIndex> vars);

  const VarTablePtr& table() const noexcept { return table_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transposed() const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  /// Contiguous block [row0, row0+nrows) x [col0, col0+ncols).
  PolyMatrix block(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator*(const Rational& c, const PolyMatrix& x);
  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y);

 private:
  VarTablePtr table_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> data_;
};

RatMatrix eval_matrix_origin(const PolyMatrix& m);

/// Exact rank by fraction-free elimination.
std::size_t rank_rational(const RatMatrix& m);

/// Exact symbolic determinant: cofactor expansion below size 4, fraction-free
/// elimination with exact polynomial division from size 4 up.
MultiPoly det_poly(const PolyMatrix& m);

/// Reference determinant by Laplace expansion along the first row.
MultiPoly det_cofactor(const PolyMatrix& m);

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  MultiPoly value;
  bool zero;
};

/// Streams the s x s minors of m in lexicographic (row-set, col-set) order.
class MinorEnumerator {
 public:
  MinorEnumerator(const PolyMatrix& m, std::size_t order);

  /// Number of minors the enumeration produces in total.
  std::size_t count() const noexcept { return total_; }
  std::optional<Minor> next();

 private:
  const PolyMatrix* matrix_;
  std::size_t order_;
  std::size_t total_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  bool done_ = false;
};

/// Eagerly collects every minor of the given order.
std::vector<Minor> minors(const PolyMatrix& m, std::size_t order);

/// C(n, k), saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

/// Advances a strictly increasing k-subset of {0..n-1}; false past the last.
bool next_combination(std::vector<std::size_t>& subset, std::size_t n);

}  // namespace tbsym
