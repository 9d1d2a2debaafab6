#pragma once

#include <cstddef>
#include <vector>

#include "tbsym/linalg.hpp"
#include "tbsym/polyring.hpp"

namespace tbsym {

struct IndexRange {
  std::size_t begin;
  std::size_t end;

  std::size_t size() const noexcept { return end - begin; }
};

/// N x N lower Toeplitz matrix t0*I + t1*L + ... + t_{N-1}*L^{N-1}, where L is
/// the lower shift matrix. Products are truncated at L^N.
class LowerToeplitzSeries {
 public:
  LowerToeplitzSeries(VarTablePtr table, std::size_t size);
  /// Coefficients beyond `size` are dropped, missing ones are zero.
  LowerToeplitzSeries(VarTablePtr table, std::size_t size, std::vector<MultiPoly> coeffs);

  static LowerToeplitzSeries identity(VarTablePtr table, std::size_t size);
  /// I + c[0]*L + c[1]*L^2 + ... ; the monic form used for A, B and friends.
  static LowerToeplitzSeries monic(VarTablePtr table, std::size_t size,
                                   const std::vector<MultiPoly>& tail);

  const VarTablePtr& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }
  /// t_k; throws ShapeError when k >= size().
  const MultiPoly& coefficient(std::size_t k) const;
  bool unitriangular() const;

  /// Same series viewed at another ambient size.
  LowerToeplitzSeries resized(std::size_t size) const;
  /// Coefficient-wise partial derivative.
  LowerToeplitzSeries derivative(VarIndex v) const;

  friend bool operator==(const LowerToeplitzSeries&, const LowerToeplitzSeries&) = default;

 private:
  VarTablePtr table_;
  std::vector<MultiPoly> coeffs_;
};

LowerToeplitzSeries series_mul(const LowerToeplitzSeries& v, const LowerToeplitzSeries& w);
/// Inverse by long division; requires t0 = 1.
LowerToeplitzSeries series_inv(const LowerToeplitzSeries& v);
/// Integer power; negative exponents require t0 = 1.
LowerToeplitzSeries series_pow(const LowerToeplitzSeries& v, int k);
LowerToeplitzSeries series_scale(const LowerToeplitzSeries& v, const Rational& c);
LowerToeplitzSeries series_add(const LowerToeplitzSeries& v, const LowerToeplitzSeries& w);
/// Block of the full N x N matrix.
PolyMatrix to_poly_matrix(const LowerToeplitzSeries& v, IndexRange rows, IndexRange cols);
PolyMatrix to_poly_matrix(const LowerToeplitzSeries& v);
const MultiPoly& coefficient(const LowerToeplitzSeries& v, std::size_t k);

}  // namespace tbsym
