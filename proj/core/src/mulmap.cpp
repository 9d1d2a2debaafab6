#include "tbsym/mulmap.hpp"

#include <utility>

#include "tbsym/errors.hpp"

namespace tbsym {

namespace {

std::vector<MultiPoly> descending(const std::vector<MultiPoly>& coeffs) {
  return {coeffs.rbegin(), coeffs.rend()};
}

PolyMatrix hconcat(const PolyMatrix& left, const PolyMatrix& right) {
  PolyMatrix out(left.table(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

// Coefficients k = 1..n-1 of L^{n-k}, stored at index k - 1.
GeneratorFamily read_upper(FamilyKind kind, const LowerToeplitzSeries& s, std::size_t n) {
  GeneratorFamily fam{kind, 1, {}};
  for (std::size_t k = 1; k < n; ++k) fam.polys.push_back(s.coefficient(n - k));
  return fam;
}

LowerToeplitzSeries d_hat(const MulMapContext& ctx) { return d_series(ctx).resized(ctx.n); }

LowerToeplitzSeries alpha_series(const MulMapContext& ctx) {
  const int q1 = static_cast<int>(ctx.n / ctx.r);
  return series_mul(series_pow(ctx.b_series(ctx.n), -q1), d_hat(ctx));
}

}  // namespace

// ---------------------------------------------------------------- context

std::vector<MultiPoly> MulMapContext::c_descending() const { return descending(c); }

std::vector<VarIndex> MulMapContext::jacobian_columns() const {
  std::vector<VarIndex> cols(a_vars.rbegin(), a_vars.rend());
  cols.insert(cols.end(), b_vars.rbegin(), b_vars.rend());
  return cols;
}

LowerToeplitzSeries MulMapContext::a_series(std::size_t size) const {
  return LowerToeplitzSeries::monic(table, size, descending(a));
}

LowerToeplitzSeries MulMapContext::b_series(std::size_t size) const {
  return LowerToeplitzSeries::monic(table, size, descending(b));
}

MulMapContext build_context(std::size_t n, std::size_t r) { return build_context(n, r, "a", "b"); }

MulMapContext build_context(std::size_t n, std::size_t r, const std::string& a_prefix,
                            const std::string& b_prefix) {
  if (r == 0) throw ArgumentError("degrees must be positive");
  if (n < r) throw ArgumentError("degrees must satisfy n >= r");
  std::vector<std::string> names;
  for (std::size_t i = n; i-- > 0;) names.push_back(a_prefix + std::to_string(i));
  for (std::size_t j = r; j-- > 0;) names.push_back(b_prefix + std::to_string(j));

  MulMapContext ctx;
  ctx.n = n;
  ctx.r = r;
  ctx.table = VarTable::make(std::move(names));
  ctx.a_vars.resize(n);
  ctx.b_vars.resize(r);
  for (std::size_t i = 0; i < n; ++i) {
    ctx.a_vars[i] = static_cast<VarIndex>(n - 1 - i);
    ctx.a.push_back(MultiPoly::variable(ctx.table, ctx.a_vars[i]));
  }
  for (std::size_t j = 0; j < r; ++j) {
    ctx.b_vars[j] = static_cast<VarIndex>(n + r - 1 - j);
    ctx.b.push_back(MultiPoly::variable(ctx.table, ctx.b_vars[j]));
  }

  // c_{n+r-j} = a_{n-j} + b_{r-j} + sum_{i+k = n+r-j} a_i b_k, with out-of-range
  // terms absent.
  const std::size_t total = n + r;
  ctx.c.assign(total, MultiPoly(ctx.table));
  for (std::size_t j = 1; j <= total; ++j) {
    const std::size_t deg = total - j;
    MultiPoly cj(ctx.table);
    if (j <= n) cj += ctx.a[n - j];
    if (j <= r) cj += ctx.b[r - j];
    for (std::size_t i = 0; i < n && i <= deg; ++i) {
      const std::size_t k = deg - i;
      if (k < r) cj += ctx.a[i] * ctx.b[k];
    }
    ctx.c[deg] = std::move(cj);
  }
  return ctx;
}

PolyMatrix sylvester_jacobian(const MulMapContext& ctx) {
  const auto rows = ctx.c_descending();
  const auto cols = ctx.jacobian_columns();
  return PolyMatrix::jacobian(rows, cols);
}

PolyMatrix sylvester_jacobian_factored(const MulMapContext& ctx) {
  const std::size_t big = ctx.n + ctx.r + 1;
  const IndexRange rows{0, ctx.n + ctx.r};
  PolyMatrix left = to_poly_matrix(ctx.b_series(big), rows, {0, ctx.n});
  PolyMatrix right = to_poly_matrix(ctx.a_series(big), rows, {0, ctx.r});
  return hconcat(left, right);
}

// ---------------------------------------------------------------- Euclid

std::size_t EuclidData::remainder(int i) const {
  if (i < -1 || static_cast<std::size_t>(i + 1) >= chain.size()) {
    throw ArgumentError("remainder index out of range");
  }
  return chain[static_cast<std::size_t>(i + 1)];
}

std::size_t EuclidData::quotient(std::size_t i) const {
  if (i == 0 || i > quotients.size()) throw ArgumentError("quotient index out of range");
  return quotients[i - 1];
}

EuclidData euclid_symbol(std::size_t n, std::size_t r) {
  if (r == 0) throw ArgumentError("degrees must be positive");
  if (n < r) throw ArgumentError("degrees must satisfy n >= r");
  EuclidData e;
  e.n = n;
  e.r = r;
  e.chain = {n, r};
  while (e.chain.back() != 0) {
    const std::size_t prev = e.chain[e.chain.size() - 2];
    const std::size_t cur = e.chain.back();
    e.quotients.push_back(prev / cur);
    e.tuple.insert(e.tuple.end(), prev / cur, cur);
    e.chain.push_back(prev % cur);
  }
  return e;
}

// ---------------------------------------------------------------- families

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kD: return "d";
    case FamilyKind::kPsi: return "psi";
    case FamilyKind::kPhi: return "phi";
    case FamilyKind::kAlpha: return "alpha";
    case FamilyKind::kBeta: return "beta";
    case FamilyKind::kGamma: return "gamma";
    case FamilyKind::kTau: return "tau";
  }
  return "?";
}

const MultiPoly& GeneratorFamily::at(int k) const {
  const long idx = static_cast<long>(k) - first_index;
  if (idx < 0 || static_cast<std::size_t>(idx) >= polys.size()) {
    throw ShapeError(to_string(kind) + " index " + std::to_string(k) + " out of range");
  }
  return polys[static_cast<std::size_t>(idx)];
}

LowerToeplitzSeries d_series(const MulMapContext& ctx) {
  const std::size_t big = ctx.n + ctx.r + 1;
  return series_mul(series_inv(ctx.b_series(big)), ctx.a_series(big));
}

GeneratorFamily d_family_recursive(const MulMapContext& ctx) {
  const std::size_t n = ctx.n;
  const std::size_t r = ctx.r;
  // dd[j] = d_{n-j}; dd[0] stands for the leading 1 and is never used.
  std::vector<MultiPoly> dd(n + 1, MultiPoly(ctx.table));
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly v = ctx.a[n - j];
    if (j <= r) v -= ctx.b[r - j];
    for (std::size_t i = 1; i < j; ++i) {
      const std::size_t k = j - i;
      if (k <= r) v -= dd[i] * ctx.b[r - k];
    }
    dd[j] = std::move(v);
  }
  GeneratorFamily fam{FamilyKind::kD, 0, {}};
  for (std::size_t i = 0; i < n; ++i) fam.polys.push_back(dd[n - i]);
  return fam;
}

GeneratorFamily d_negative(const MulMapContext& ctx) {
  const LowerToeplitzSeries d = d_series(ctx);
  GeneratorFamily fam{FamilyKind::kD, -static_cast<int>(ctx.r), {}};
  for (std::size_t j = ctx.r; j >= 1; --j) fam.polys.push_back(d.coefficient(ctx.n + j));
  return fam;
}

GeneratorFamily d_family(const MulMapContext& ctx) {
  GeneratorFamily fam = d_family_recursive(ctx);
  const LowerToeplitzSeries d = d_series(ctx);
  for (std::size_t i = 0; i < ctx.n; ++i) {
    if (!(fam.polys[i] == d.coefficient(ctx.n - i))) {
      throw InvariantViolation("d_" + std::to_string(i) + " differs between recursion and series");
    }
  }
  // d_{-j} + b_{r-1} d_{-j+1} + ... + b_0 d_{r-j} = 0 for j = 1..r.
  const auto value = [&](long k) -> MultiPoly {
    return d.coefficient(static_cast<std::size_t>(static_cast<long>(ctx.n) - k));
  };
  for (std::size_t j = 1; j <= ctx.r; ++j) {
    MultiPoly rel = value(-static_cast<long>(j));
    for (std::size_t k = 1; k <= ctx.r; ++k) {
      rel += ctx.b[ctx.r - k] * value(static_cast<long>(k) - static_cast<long>(j));
    }
    if (!rel.is_zero()) {
      throw InvariantViolation("negative-index relation fails at j = " + std::to_string(j));
    }
  }
  return fam;
}

GeneratorFamily alpha_family(const MulMapContext& ctx) {
  return read_upper(FamilyKind::kAlpha, alpha_series(ctx), ctx.n);
}

GeneratorFamily beta_family(const MulMapContext& ctx) {
  return read_upper(FamilyKind::kBeta, series_inv(alpha_series(ctx)), ctx.n);
}

GeneratorFamily gamma_family(const MulMapContext& ctx) {
  const int q1 = static_cast<int>(ctx.n / ctx.r);
  LowerToeplitzSeries g = series_mul(series_pow(ctx.b_series(ctx.n), 1 - q1), d_hat(ctx));
  return read_upper(FamilyKind::kGamma, g, ctx.n);
}

GeneratorFamily psi_family(const MulMapContext& ctx) {
  const std::size_t n = ctx.n;
  const std::size_t r = ctx.r;
  const std::size_t q1 = n / r;
  const std::size_t r1 = n % r;
  const GeneratorFamily d = d_family(ctx);

  GeneratorFamily fam{FamilyKind::kPsi, 0, {}};
  for (std::size_t i = 0; i < r; ++i) fam.polys.push_back(d.polys[i]);

  MultiPoly base = d.polys[r - 1];
  for (std::size_t s = 1; s < q1; ++s) {
    if (s > 1) base = partial_derive(base, ctx.b_vars[0]);
    for (std::size_t i = 0; i < r; ++i) {
      fam.polys.push_back(partial_derive(base, ctx.b_vars[r - 1 - i]));
    }
  }

  if (r1 > 0) {
    const GeneratorFamily beta = beta_family(ctx);
    for (std::size_t i = 0; i < r1; ++i) {
      fam.polys.push_back(beta.at(static_cast<int>((q1 - 1) * r + r1 + i)));
    }
  }
  return fam;
}

// ---------------------------------------------------------------- descent

Substitution DescentLevel::to_top() const {
  Substitution map;
  for (std::size_t i = 0; i < local.n; ++i) map.emplace(local.a_vars[i], first[i]);
  for (std::size_t j = 0; j < local.r; ++j) map.emplace(local.b_vars[j], second[j]);
  return map;
}

MultiPoly DescentLevel::compose(const MultiPoly& local_poly) const {
  if (local.table == top) {
    return jet_degree ? truncate_jet(local_poly, *jet_degree) : local_poly;
  }
  const Substitution map = to_top();
  return jet_degree ? substitute_jet(local_poly, map, *jet_degree) : substitute(local_poly, map);
}

DescentLevel top_level(const MulMapContext& ctx, std::optional<int> jet_degree) {
  DescentLevel level;
  level.index = 0;
  level.deg_first = ctx.n;
  level.deg_second = ctx.r;
  level.top = ctx.table;
  level.first = ctx.a;
  level.second = ctx.b;
  level.local = ctx;
  level.jet_degree = jet_degree;
  if (jet_degree) {
    for (auto& p : level.first) p = truncate_jet(p, *jet_degree);
    for (auto& p : level.second) p = truncate_jet(p, *jet_degree);
  }
  return level;
}

DescentLevel descend(const DescentLevel& level) {
  const MulMapContext& local = level.local;
  const std::size_t q = local.n / local.r;
  const std::size_t rem = local.n % local.r;
  if (rem == 0) throw DescentTerminated("remainder is zero; Euclid chain ends here");

  const GeneratorFamily gamma = gamma_family(local);
  DescentLevel next;
  next.index = level.index + 1;
  next.deg_first = local.r;
  next.deg_second = rem;
  next.parent_quotient = q;
  next.top = level.top;
  next.jet_degree = level.jet_degree;
  next.first = level.second;
  // f_{i+2} = x^{rem} + gamma_{n-1} x^{rem-1} + ... + gamma_{n-rem}.
  for (std::size_t j = 0; j < rem; ++j) {
    next.second.push_back(level.compose(gamma.at(static_cast<int>(local.n - rem + j))));
  }
  const std::string tag = std::to_string(next.index) + "_";
  next.local = build_context(local.r, rem, "u" + tag, "v" + tag);
  return next;
}

std::vector<MultiPoly> monic_product(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g) {
  if (f.empty() && g.empty()) return {};
  const VarTablePtr table = f.empty() ? g.front().table() : f.front().table();
  const std::size_t p = f.size();
  const std::size_t q = g.size();
  const MultiPoly one = MultiPoly::constant(table, Rational(1));
  const auto fc = [&](std::size_t i) -> const MultiPoly& { return i == p ? one : f[i]; };
  const auto gc = [&](std::size_t j) -> const MultiPoly& { return j == q ? one : g[j]; };
  std::vector<MultiPoly> out(p + q, MultiPoly(table));
  for (std::size_t i = 0; i <= p; ++i) {
    for (std::size_t j = 0; j <= q; ++j) {
      if (i + j == p + q) continue;
      out[i + j] += fc(i) * gc(j);
    }
  }
  return out;
}

GeneratorFamily tau_family(const DescentLevel& level) {
  if (level.index == 0) throw ArgumentError("tau family needs a descent level of index >= 1");
  const auto trim = [&](std::vector<MultiPoly> v) {
    if (level.jet_degree) {
      for (auto& p : v) p = truncate_jet(p, *level.jet_degree);
    }
    return v;
  };
  std::vector<MultiPoly> h = trim(monic_product(level.first, level.second));
  for (std::size_t k = 0; k < level.parent_quotient; ++k) h = trim(monic_product(h, level.first));
  return GeneratorFamily{FamilyKind::kTau, 0, std::move(h)};
}

}  // namespace tbsym
