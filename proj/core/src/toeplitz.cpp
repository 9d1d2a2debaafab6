#include "tbsym/toeplitz.hpp"

#include <utility>

#include "tbsym/errors.hpp"

namespace tbsym {

LowerToeplitzSeries::LowerToeplitzSeries(VarTablePtr table, std::size_t size)
    : table_(std::move(table)), coeffs_(size, MultiPoly(table_)) {
  if (size == 0) throw ShapeError("lower Toeplitz series of size zero");
}

LowerToeplitzSeries::LowerToeplitzSeries(VarTablePtr table, std::size_t size,
                                         std::vector<MultiPoly> coeffs)
    : LowerToeplitzSeries(std::move(table), size) {
  for (std::size_t k = 0; k < coeffs.size() && k < size; ++k) {
    if (coeffs[k].table() != table_) throw ContextError("series coefficient over another table");
    coeffs_[k] = std::move(coeffs[k]);
  }
}

LowerToeplitzSeries LowerToeplitzSeries::identity(VarTablePtr table, std::size_t size) {
  LowerToeplitzSeries s(table, size);
  s.coeffs_[0] = MultiPoly::constant(table, Rational(1));
  return s;
}

LowerToeplitzSeries LowerToeplitzSeries::monic(VarTablePtr table, std::size_t size,
                                               const std::vector<MultiPoly>& tail) {
  LowerToeplitzSeries s = identity(table, size);
  for (std::size_t k = 0; k < tail.size() && k + 1 < size; ++k) {
    if (tail[k].table() != table) throw ContextError("series coefficient over another table");
    s.coeffs_[k + 1] = tail[k];
  }
  return s;
}

const MultiPoly& LowerToeplitzSeries::coefficient(std::size_t k) const {
  if (k >= coeffs_.size()) throw ShapeError("series coefficient index out of range");
  return coeffs_[k];
}

bool LowerToeplitzSeries::unitriangular() const {
  const MultiPoly& t0 = coeffs_.front();
  return t0.is_constant() && t0.eval_origin() == 1;
}

LowerToeplitzSeries LowerToeplitzSeries::resized(std::size_t size) const {
  return LowerToeplitzSeries(table_, size, coeffs_);
}

LowerToeplitzSeries LowerToeplitzSeries::derivative(VarIndex v) const {
  LowerToeplitzSeries d(table_, size());
  for (std::size_t k = 0; k < size(); ++k) d.coeffs_[k] = partial_derive(coeffs_[k], v);
  return d;
}

LowerToeplitzSeries series_mul(const LowerToeplitzSeries& v, const LowerToeplitzSeries& w) {
  if (v.size() != w.size()) throw ShapeError("series_mul of different sizes");
  if (v.table() != w.table()) throw ContextError("series_mul over mixed tables");
  const std::size_t n = v.size();
  std::vector<MultiPoly> out(n, MultiPoly(v.table()));
  const auto& a = v.coefficients();
  const auto& b = w.coefficients();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return LowerToeplitzSeries(v.table(), n, std::move(out));
}

LowerToeplitzSeries series_inv(const LowerToeplitzSeries& v) {
  if (!v.unitriangular()) throw NotInvertibleError("series_inv requires a unit diagonal");
  const std::size_t n = v.size();
  const auto& a = v.coefficients();
  std::vector<MultiPoly> w(n, MultiPoly(v.table()));
  w[0] = MultiPoly::constant(v.table(), Rational(1));
  // Long division: w_k = -(a_1 w_{k-1} + ... + a_k w_0).
  for (std::size_t k = 1; k < n; ++k) {
    MultiPoly acc(v.table());
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i].is_zero() || w[k - i].is_zero()) continue;
      acc += a[i] * w[k - i];
    }
    w[k] = -acc;
  }
  return LowerToeplitzSeries(v.table(), n, std::move(w));
}

LowerToeplitzSeries series_pow(const LowerToeplitzSeries& v, int k) {
  if (k < 0) return series_pow(series_inv(v), -k);
  LowerToeplitzSeries result = LowerToeplitzSeries::identity(v.table(), v.size());
  LowerToeplitzSeries base = v;
  auto e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1U) result = series_mul(result, base);
    e >>= 1U;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

LowerToeplitzSeries series_scale(const LowerToeplitzSeries& v, const Rational& c) {
  std::vector<MultiPoly> out = v.coefficients();
  for (auto& t : out) t *= c;
  return LowerToeplitzSeries(v.table(), v.size(), std::move(out));
}

LowerToeplitzSeries series_add(const LowerToeplitzSeries& v, const LowerToeplitzSeries& w) {
  if (v.size() != w.size()) throw ShapeError("series_add of different sizes");
  std::vector<MultiPoly> out = v.coefficients();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += w.coefficient(k);
  return LowerToeplitzSeries(v.table(), v.size(), std::move(out));
}

PolyMatrix to_poly_matrix(const LowerToeplitzSeries& v, IndexRange rows, IndexRange cols) {
  const std::size_t n = v.size();
  if (rows.begin > rows.end || cols.begin > cols.end || rows.end > n || cols.end > n) {
    throw ShapeError("block range outside the series size");
  }
  PolyMatrix m(v.table(), rows.size(), cols.size());
  for (std::size_t i = rows.begin; i < rows.end; ++i) {
    for (std::size_t j = cols.begin; j < cols.end && j <= i; ++j) {
      m(i - rows.begin, j - cols.begin) = v.coefficient(i - j);
    }
  }
  return m;
}

PolyMatrix to_poly_matrix(const LowerToeplitzSeries& v) {
  return to_poly_matrix(v, {0, v.size()}, {0, v.size()});
}

const MultiPoly& coefficient(const LowerToeplitzSeries& v, std::size_t k) {
  return v.coefficient(k);
}

}  // namespace tbsym
