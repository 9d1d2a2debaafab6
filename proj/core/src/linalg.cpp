#include "tbsym/linalg.hpp"

#include <limits>
#include <utility>

#include "tbsym/errors.hpp"

namespace tbsym {

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(VarTablePtr table, std::size_t rows, std::size_t cols)
    : table_(std::move(table)), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(table_)) {}

PolyMatrix PolyMatrix::identity(VarTablePtr table, std::size_t n) {
  PolyMatrix m(table, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly::constant(table, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::jacobian(std::span<const MultiPoly> polys, std::span<const VarIndex> vars) {
  if (polys.empty()) throw ShapeError("jacobian of an empty generator list");
  PolyMatrix m(polys.front().table(), polys.size(), vars.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].table() != m.table_) throw ContextError("jacobian rows over mixed tables");
    for (std::size_t j = 0; j < vars.size(); ++j) m(i, j) = partial_derive(polys[i], vars[j]);
  }
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(table_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  PolyMatrix s(table_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw ShapeError("submatrix index out of range");
      s(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return s;
}

PolyMatrix PolyMatrix::block(std::size_t row0, std::size_t nrows, std::size_t col0,
                             std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ShapeError("block out of range");
  PolyMatrix s(table_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(row0 + i, col0 + j);
  }
  return s;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.cols_ != y.rows_) throw ShapeError("matrix product dimension mismatch");
  if (x.table_ != y.table_) throw ContextError("matrix product over mixed tables");
  PolyMatrix out(x.table_, x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t j = 0; j < y.cols_; ++j) {
      MultiPoly acc(x.table_);
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
        acc += x(i, k) * y(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeError("matrix sum dimension mismatch");
  PolyMatrix out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += y.data_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeError("matrix sum dimension mismatch");
  PolyMatrix out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= y.data_[k];
  return out;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& x) {
  PolyMatrix out = x;
  for (auto& e : out.data_) e *= c;
  return out;
}

bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
  return x.table_ == y.table_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

// ---------------------------------------------------------------- rank / det

RatMatrix eval_matrix_origin(const PolyMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval_origin();
  }
  return out;
}

std::size_t rank_rational(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class d = m(i, j).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

MultiPoly det_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly::constant(m.table(), Rational(1));
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  MultiPoly sum(m.table());
  std::vector<std::size_t> rest_rows;
  for (std::size_t i = 1; i < n; ++i) rest_rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> rest_cols;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) rest_cols.push_back(k);
    }
    MultiPoly term = m(0, j) * det_cofactor(m.submatrix(rest_rows, rest_cols));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

MultiPoly det_poly(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n < 4) return det_cofactor(m);

  PolyMatrix a = m;
  MultiPoly prev = MultiPoly::constant(m.table(), Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Smallest nonzero pivot keeps the intermediate entries small.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (pivot == n || a(i, k).size() < a(pivot, k).size()) pivot = i;
    }
    if (pivot == n) return MultiPoly(m.table());
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = exact_divide(num, prev);
      }
      a(i, k) = MultiPoly(m.table());
    }
    prev = a(k, k);
  }
  MultiPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

// ---------------------------------------------------------------- minors

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    if (result > std::numeric_limits<std::size_t>::max() / num) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

bool next_combination(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  for (std::size_t idx = k; idx-- > 0;) {
    if (subset[idx] < n - k + idx) {
      ++subset[idx];
      for (std::size_t j = idx + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

MinorEnumerator::MinorEnumerator(const PolyMatrix& m, std::size_t order)
    : matrix_(&m), order_(order) {
  if (order == 0 || order > std::min(m.rows(), m.cols())) {
    throw ShapeError("minor order out of range");
  }
  const std::size_t r = binomial(m.rows(), order);
  const std::size_t c = binomial(m.cols(), order);
  total_ = (c != 0 && r > std::numeric_limits<std::size_t>::max() / c)
               ? std::numeric_limits<std::size_t>::max()
               : r * c;
  for (std::size_t i = 0; i < order; ++i) {
    rows_.push_back(i);
    cols_.push_back(i);
  }
}

std::optional<Minor> MinorEnumerator::next() {
  if (done_) return std::nullopt;
  Minor out{rows_, cols_, det_poly(matrix_->submatrix(rows_, cols_)), false};
  out.zero = out.value.is_zero();
  if (!next_combination(cols_, matrix_->cols())) {
    if (!next_combination(rows_, matrix_->rows())) {
      done_ = true;
    } else {
      for (std::size_t i = 0; i < order_; ++i) cols_[i] = i;
    }
  }
  return out;
}

std::vector<Minor> minors(const PolyMatrix& m, std::size_t order) {
  MinorEnumerator it(m, order);
  std::vector<Minor> out;
  while (auto minor = it.next()) out.push_back(std::move(*minor));
  return out;
}

}  // namespace tbsym
