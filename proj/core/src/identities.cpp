#include "tbsym/identities.hpp"

#include <optional>
#include <random>
#include <string>

#include "tbsym/ideal.hpp"

namespace tbsym {

namespace {

IdentityCheck verdict(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? "PASS" : "FAIL", std::move(detail)};
}

IdentityCheck skipped(std::string name, std::string why) { return {std::move(name), "SKIPPED", std::move(why)}; }

std::string with_s(const char* name, std::size_t s) { return std::string(name) + "[s=" + std::to_string(s) + "]"; }

MultiPoly b0_derivative(MultiPoly p, const MulMapContext& ctx, std::size_t times) {
  for (std::size_t k = 0; k < times; ++k) p = partial_derive(p, ctx.b_vars[0]);
  return p;
}

// 1 x k row of partial derivatives.
PolyMatrix gradient(const MultiPoly& p, const std::vector<VarIndex>& vars) {
  return PolyMatrix::jacobian(std::span<const MultiPoly>(&p, 1), vars);
}

std::vector<VarIndex> a_columns(const MulMapContext& ctx) { return {ctx.a_vars.rbegin(), ctx.a_vars.rend()}; }
std::vector<VarIndex> b_columns(const MulMapContext& ctx) { return {ctx.b_vars.rbegin(), ctx.b_vars.rend()}; }

// Some c with lhs = c * rhs, if one exists.
std::optional<Rational> proportionality(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (rhs(i, j).is_zero()) {
        if (!lhs(i, j).is_zero()) return std::nullopt;
        continue;
      }
      if (!c) c = lhs(i, j).is_zero() ? Rational(0) : lhs(i, j).leading_term().coeff / rhs(i, j).leading_term().coeff;
    }
  }
  if (!c) c = Rational(0);
  return lhs == *c * rhs ? c : std::nullopt;
}

}  // namespace

PolyMatrix d_jacobian_a(const MulMapContext& ctx, std::size_t s) {
  const GeneratorFamily d = d_family(ctx);
  std::vector<MultiPoly> rows;
  for (std::size_t k = 0; k < ctx.n; ++k) rows.push_back(b0_derivative(d.at(static_cast<int>(ctx.n - 1 - k)), ctx, s - 1));
  return PolyMatrix::jacobian(rows, a_columns(ctx));
}

PolyMatrix d_jacobian_b(const MulMapContext& ctx, std::size_t s) {
  const GeneratorFamily d = d_family(ctx);
  std::vector<MultiPoly> rows;
  for (std::size_t k = 0; k < ctx.n; ++k) rows.push_back(b0_derivative(d.at(static_cast<int>(ctx.n - 1 - k)), ctx, s - 1));
  return PolyMatrix::jacobian(rows, b_columns(ctx));
}

PolyMatrix d_block(const MulMapContext& ctx) {
  return to_poly_matrix(d_series(ctx), {0, ctx.n}, {0, ctx.r});
}

IdentityCheck check_toeplitz_algebra(const MulMapContext& ctx, std::size_t trials, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, ctx.table->size() - 1);
  const std::size_t size = ctx.n + ctx.r + 1;
  const auto random_entry = [&]() {
    MultiPoly p(ctx.table);
    for (int t = 0; t < 3; ++t) {
      MultiPoly term = MultiPoly::constant(ctx.table, Rational(coeff(rng)));
      const std::size_t deg = rng() % 3;
      for (std::size_t k = 0; k < deg; ++k) term *= MultiPoly::variable(ctx.table, static_cast<VarIndex>(var(rng)));
      p += term;
    }
    return p;
  };
  const auto random_series = [&]() {
    std::vector<MultiPoly> tail;
    for (std::size_t k = 1; k < size; ++k) tail.push_back(random_entry());
    return LowerToeplitzSeries::monic(ctx.table, size, tail);
  };
  const LowerToeplitzSeries id = LowerToeplitzSeries::identity(ctx.table, size);
  for (std::size_t t = 0; t < trials; ++t) {
    const LowerToeplitzSeries v = random_series();
    const LowerToeplitzSeries w = random_series();
    if (!(series_mul(v, w) == series_mul(w, v))) return verdict("toeplitz-algebra", false, "VW != WV");
    if (!(series_mul(v, series_inv(v)) == id)) return verdict("toeplitz-algebra", false, "V inv(V) != I");
  }
  return verdict("toeplitz-algebra", true, std::to_string(trials) + " random pairs of size " + std::to_string(size));
}

IdentityCheck check_d_jacobian(const MulMapContext& ctx) {
  const PolyMatrix b = to_poly_matrix(ctx.b_series(ctx.n));
  const bool inverse = b * d_jacobian_a(ctx, 1) == PolyMatrix::identity(ctx.table, ctx.n);
  const bool shifted = (b * d_jacobian_b(ctx, 1) + d_block(ctx)) == PolyMatrix(ctx.table, ctx.n, ctx.r);
  std::string detail;
  if (!inverse) detail += "B (dd/da) != I; ";
  if (!shifted) detail += "B (dd/db) + D != 0";
  return verdict("d-jacobian", inverse && shifted, detail);
}

IdentityCheck check_b0_derivative(const MulMapContext& ctx, std::size_t s) {
  const PolyMatrix lhs = d_jacobian_b(ctx, s);
  const PolyMatrix rhs = Rational(-static_cast<long>(s)) * (d_jacobian_a(ctx, s) * d_block(ctx));
  return verdict(with_s("b0-derivative", s), lhs == rhs);
}

IdentityCheck check_d_jacobian_shape(const MulMapContext& ctx) {
  const LowerToeplitzSeries m =
      series_scale(series_mul(series_inv(ctx.b_series(ctx.n)), d_series(ctx).resized(ctx.n)), Rational(-1));
  return verdict("d-jacobian-shape", d_jacobian_b(ctx, 1) == to_poly_matrix(m, {0, ctx.n}, {0, ctx.r}));
}

IdentityCheck check_psi_gradient(const MulMapContext& ctx, std::size_t s) {
  const std::string name = with_s("psi-gradient", s);
  const GeneratorFamily psi = psi_family(ctx);
  const PolyMatrix d = d_block(ctx);
  const Rational expected(-static_cast<long>(s + 1));
  for (std::size_t i = 0; i < ctx.r; ++i) {
    const MultiPoly& p = psi.at(static_cast<int>(s * ctx.r + i));
    const PolyMatrix lhs = gradient(p, b_columns(ctx));
    const PolyMatrix base = gradient(p, a_columns(ctx)) * d;
    if (lhs == expected * base) continue;
    const auto c = proportionality(lhs, base);
    const std::string where = "psi" + std::to_string(s * ctx.r + i);
    if (c) return verdict(name, false, where + ": holds with constant " + to_string(*c) + " instead of " + to_string(expected));
    return verdict(name, false, where + ": not proportional");
  }
  return verdict(name, true);
}

IdentityCheck check_quotient_vanishing(const MulMapContext& ctx, std::size_t s, int degree) {
  const std::string name = with_s("quotient-vanishing", s);
  const GeneratorFamily psi = psi_family(ctx);
  const std::vector<MultiPoly> gens(psi.polys.begin(), psi.polys.begin() + static_cast<std::ptrdiff_t>(s * ctx.r));
  const JetSpan span(ctx.table, gens, degree);
  const std::size_t big = ctx.n + ctx.r + 1;
  const LowerToeplitzSeries q = series_mul(series_pow(ctx.b_series(big), -static_cast<int>(s)), ctx.a_series(big));
  for (std::size_t i = ctx.n - s * ctx.r + 1; i < big; ++i) {
    if (!span.contains(q.coefficient(i))) return verdict(name, false, "coefficient of L^" + std::to_string(i));
  }
  return verdict(name, true, "mod m^" + std::to_string(degree + 1));
}

IdentityCheck check_gamma_coordinates(const MulMapContext& ctx) {
  const std::size_t q1 = ctx.n / ctx.r;
  const std::size_t r1 = ctx.n % ctx.r;
  const GeneratorFamily psi = psi_family(ctx);
  std::vector<MultiPoly> coords(psi.polys.begin(), psi.polys.begin() + static_cast<std::ptrdiff_t>(q1 * ctx.r));
  if (r1 > 0) {
    const GeneratorFamily gamma = gamma_family(ctx);
    for (std::size_t k = ctx.n - r1; k < ctx.n; ++k) coords.push_back(gamma.at(static_cast<int>(k)));
  }
  coords.insert(coords.end(), ctx.b.begin(), ctx.b.end());
  const PolyMatrix jac = PolyMatrix::jacobian(coords, ctx.jacobian_columns());
  const std::size_t rank = rank_rational(eval_matrix_origin(jac));
  return verdict("gamma-coordinates", rank == ctx.n + ctx.r,
                 "rank " + std::to_string(rank) + " of " + std::to_string(ctx.n + ctx.r));
}

IdentityCheck check_descent_tail(const MulMapContext& ctx, int degree) {
  const std::size_t q1 = ctx.n / ctx.r;
  const std::size_t r1 = ctx.n % ctx.r;
  if (r1 == 0) return skipped("descent-tail", "r1 = 0");
  const GeneratorFamily psi = psi_family(ctx);
  const std::vector<MultiPoly> gens(psi.polys.begin(), psi.polys.begin() + static_cast<std::ptrdiff_t>(q1 * ctx.r));
  const JetSpan span(ctx.table, gens, degree);
  const DescentLevel one = descend(top_level(ctx));
  const GeneratorFamily phi = psi_family(one.local);
  for (std::size_t i = 0; i < r1; ++i) {
    const MultiPoly diff = one.compose(phi.at(static_cast<int>(i))) - psi.at(static_cast<int>(q1 * ctx.r + i));
    if (!span.contains(diff)) return verdict("descent-tail", false, "phi" + std::to_string(i));
  }
  return verdict("descent-tail", true, "mod m^" + std::to_string(degree + 1));
}

IdentityCheck check_product_congruence(const MulMapContext& ctx, int degree) {
  const std::size_t q1 = ctx.n / ctx.r;
  const std::size_t r1 = ctx.n % ctx.r;
  if (r1 == 0) return skipped("product-congruence", "r1 = 0");
  const GeneratorFamily psi = psi_family(ctx);
  const std::vector<MultiPoly> gens(psi.polys.begin(), psi.polys.begin() + static_cast<std::ptrdiff_t>(q1 * ctx.r));
  const JetSpan span(ctx.table, gens, degree);
  const GeneratorFamily tau = tau_family(descend(top_level(ctx)));
  for (std::size_t i = 0; i < ctx.n + ctx.r; ++i) {
    if (!span.contains(ctx.c[i] - tau.at(static_cast<int>(i)))) {
      return verdict("product-congruence", false, "c" + std::to_string(i));
    }
  }
  return verdict("product-congruence", true, "mod m^" + std::to_string(degree + 1));
}

std::vector<IdentityCheck> verify_identities(std::size_t n, std::size_t r, int degree) {
  const MulMapContext ctx = build_context(n, r);
  const std::size_t q1 = n / r;
  std::vector<IdentityCheck> out;
  out.push_back(check_toeplitz_algebra(ctx, 10, static_cast<std::uint32_t>(1000 * n + r)));
  out.push_back(check_d_jacobian(ctx));
  for (std::size_t s = 1; s <= q1; ++s) out.push_back(check_b0_derivative(ctx, s));
  out.push_back(check_d_jacobian_shape(ctx));
  for (std::size_t s = 0; s < q1; ++s) out.push_back(check_psi_gradient(ctx, s));
  for (std::size_t s = 1; s <= q1; ++s) out.push_back(check_quotient_vanishing(ctx, s, degree));
  out.push_back(check_gamma_coordinates(ctx));
  out.push_back(check_descent_tail(ctx, degree));
  out.push_back(check_product_congruence(ctx, degree));
  return out;
}

}  // namespace tbsym
