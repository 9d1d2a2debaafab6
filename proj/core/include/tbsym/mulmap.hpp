#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tbsym/linalg.hpp"
#include "tbsym/polyring.hpp"
#include "tbsym/toeplitz.hpp"

namespace tbsym {

/// The map (a, b) -> c sending the coefficients of monic f (degree n) and
/// g (degree r) to the non-leading coefficients of f*g.
struct MulMapContext {
  std::size_t n = 0;
  std::size_t r = 0;
  VarTablePtr table;
  std::vector<VarIndex> a_vars;  // a_vars[i] is the variable a_i
  std::vector<VarIndex> b_vars;
  std::vector<MultiPoly> a;  // a[i] = coefficient of x^i in f
  std::vector<MultiPoly> b;
  std::vector<MultiPoly> c;  // c[j] = coefficient of x^j in f*g, j < n + r

  /// c_{n+r-1}, ..., c_0.
  std::vector<MultiPoly> c_descending() const;
  /// a_{n-1}, ..., a_0, b_{r-1}, ..., b_0: the column order of every Jacobian.
  std::vector<VarIndex> jacobian_columns() const;

  /// A_N = I + a_{n-1} L + ... + a_0 L^n at ambient size N.
  LowerToeplitzSeries a_series(std::size_t size) const;
  LowerToeplitzSeries b_series(std::size_t size) const;
};

/// Top-level context over variables named a{n-1}..a0, b{r-1}..b0.
MulMapContext build_context(std::size_t n, std::size_t r);
/// Same construction over variables named {a_prefix}{i} and {b_prefix}{j}.
MulMapContext build_context(std::size_t n, std::size_t r, const std::string& a_prefix,
                            const std::string& b_prefix);

/// Jacobian of c_{n+r-1}..c_0 in the column order of jacobian_columns().
PolyMatrix sylvester_jacobian(const MulMapContext& ctx);
/// The same matrix assembled from corner blocks of B_{n+r+1} and A_{n+r+1}.
PolyMatrix sylvester_jacobian_factored(const MulMapContext& ctx);

struct EuclidData {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::size_t> quotients;  // q_1 .. q_{k+1}
  std::vector<std::size_t> chain;      // n, r, r_1, ..., r_k, 0
  std::vector<std::size_t> tuple;      // r repeated q_1 times, r_1 repeated q_2 times, ...

  /// r_i for i >= -1 (r_{-1} = n, r_0 = r).
  std::size_t remainder(int i) const;
  /// q_i for i >= 1.
  std::size_t quotient(std::size_t i) const;
  /// Number of divisions: k + 1.
  std::size_t depth() const noexcept { return quotients.size(); }
};

EuclidData euclid_symbol(std::size_t n, std::size_t r);

enum class FamilyKind { kD, kPsi, kPhi, kAlpha, kBeta, kGamma, kTau };

std::string to_string(FamilyKind kind);

/// Indexed list of polynomials; at(k) is the member with index k, counting from first_index.
struct GeneratorFamily {
  FamilyKind kind;
  int first_index = 0;
  std::vector<MultiPoly> polys;

  std::size_t size() const noexcept { return polys.size(); }
  const MultiPoly& at(int k) const;
};

/// D_{n+r+1} = B_{n+r+1}^{-1} A_{n+r+1}; coefficient of L^j is d_{n-j}.
LowerToeplitzSeries d_series(const MulMapContext& ctx);

/// d_0..d_{n-1}, computed by the coefficient recursion and by series division,
/// cross-checked against each other and against the vanishing relations of
/// d_{-1}..d_{-r}. Throws InvariantViolation on disagreement.
GeneratorFamily d_family(const MulMapContext& ctx);
/// d_0..d_{n-1} by the recursion alone.
GeneratorFamily d_family_recursive(const MulMapContext& ctx);
/// d_{-r}..d_{-1} read off D_{n+r+1}.
GeneratorFamily d_negative(const MulMapContext& ctx);

/// alpha_1..alpha_{n-1}: B^{-q1} Dhat = I + alpha_{n-1} L + ... + alpha_1 L^{n-1}.
GeneratorFamily alpha_family(const MulMapContext& ctx);
/// beta_1..beta_{n-1}: inverse of the alpha series.
GeneratorFamily beta_family(const MulMapContext& ctx);
/// gamma_1..gamma_{n-1}: B^{-(q1-1)} Dhat = I + gamma_{n-1} L + ... + gamma_1 L^{n-1}.
GeneratorFamily gamma_family(const MulMapContext& ctx);

/// psi_0..psi_{q1 r + r1 - 1}: d-blocks, b_0-derivative blocks, then the
/// r1 entries read off the beta series.
GeneratorFamily psi_family(const MulMapContext& ctx);

/// One level of the descent: the map mu_{r_{i-1}, r_i} given by f_i * f_{i+1}.
struct DescentLevel {
  std::size_t index = 0;
  std::size_t deg_first = 0;   // r_{i-1}
  std::size_t deg_second = 0;  // r_i
  std::size_t parent_quotient = 0;  // q_i, zero at level 0
  VarTablePtr top;
  std::vector<MultiPoly> first;   // coefficients of f_i over the top table
  std::vector<MultiPoly> second;  // coefficients of f_{i+1} over the top table
  MulMapContext local;            // mu_{r_{i-1}, r_i} over its own variables
  std::optional<int> jet_degree;  // truncation applied when composing

  /// Local variable -> top-level polynomial.
  Substitution to_top() const;
  /// Rewrites a polynomial in the local variables over the top table.
  MultiPoly compose(const MultiPoly& local_poly) const;
};

/// Level 0: f_0 = f, f_1 = g over ctx's own table.
DescentLevel top_level(const MulMapContext& ctx, std::optional<int> jet_degree = std::nullopt);
/// Level i+1: (f_{i+1}, f_{i+2}) with f_{i+2} built from the level's gamma
/// coefficients. Throws DescentTerminated when the level's remainder is zero.
DescentLevel descend(const DescentLevel& level);

/// Coefficients tau_0..tau_{N-1} of h_i * f_i^{q_i} over the top table, which
/// has degree N = r_{i-2} + r_{i-1}. Requires level index >= 1.
GeneratorFamily tau_family(const DescentLevel& level);

/// Coefficients (without the leading 1) of the product of two monic
/// polynomials given by their lower coefficients.
std::vector<MultiPoly> monic_product(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g);

}  // namespace tbsym
