#include "tbsym/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

#include "tbsym/linalg.hpp"

namespace tbsym {

namespace {

// Rational row echelon that accepts a vector only if it raises the rank.
class IncrementalRank {
 public:
  bool try_add(std::vector<Rational> v) {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      const Rational f = v[col];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      const Rational inv = Rational(1) / v[j];
      for (auto& x : v) x *= inv;
      rows_.emplace_back(j, std::move(v));
      return true;
    }
    return false;
  }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(v[k]);
  }
  return s + "]";
}

void check_deadline(const Deadline* deadline, const JetConfig& config) {
  if (deadline != nullptr && deadline->expired()) {
    throw CapExceeded("time budget of " + std::to_string(config.time_budget_secs) + " s exhausted", {});
  }
}

void check_minor_cap(std::size_t count, const JetConfig& config) {
  if (count > config.max_minors_per_step) {
    const std::string needed =
        count == std::numeric_limits<std::size_t>::max() ? "more than 2^64" : std::to_string(count);
    throw CapExceeded("step needs " + needed + " minors, cap is " +
                          std::to_string(config.max_minors_per_step),
                      {});
  }
}

struct Candidate {
  MultiPoly value;
  std::string label;
};

// A variable x that g contains only as a lone linear term lambda * x.
std::optional<std::pair<VarIndex, Rational>> solvable_variable(const MultiPoly& g, std::size_t m) {
  std::vector<Rational> linear(m, Rational(0));
  std::vector<bool> elsewhere(m, false);
  for (const auto& t : g.terms()) {
    if (t.mono.degree() == 1) {
      linear[t.mono.powers()[0].var] = t.coeff;
    } else {
      for (const auto& vp : t.mono.powers()) elsewhere[vp.var] = true;
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (linear[v] != 0 && !elsewhere[v]) return std::make_pair(static_cast<VarIndex>(v), linear[v]);
  }
  return std::nullopt;
}

std::vector<Candidate> all_minor_candidates(const IdealPresentation& ideal, std::size_t rank,
                                            std::size_t step, const JetConfig& config,
                                            const Deadline* deadline, StepRecord& rec) {
  const std::size_t m = ideal.table()->size();
  std::vector<VarIndex> vars(m);
  std::iota(vars.begin(), vars.end(), VarIndex{0});
  const PolyMatrix jac = PolyMatrix::jacobian(ideal.generators(), vars);
  std::vector<Candidate> out;
  if (rank + 1 > std::min(jac.rows(), jac.cols())) return out;
  MinorEnumerator it(jac, rank + 1);
  rec.candidate_minors = it.count();
  check_minor_cap(it.count(), config);
  while (auto minor = it.next()) {
    check_deadline(deadline, config);
    if (minor->zero) continue;
    out.push_back({std::move(minor->value), "minor(step=" + std::to_string(step) + ",rows=" +
                                                join(minor->rows) + ",cols=" + join(minor->cols) + ")"});
  }
  return out;
}

std::vector<Candidate> bordered_candidates(const IdealPresentation& ideal, std::size_t rank,
                                           std::size_t step, const JetConfig& config,
                                           const Deadline* deadline, StepRecord& rec) {
  const VarTablePtr& table = ideal.table();
  const std::size_t m = table->size();

  // 1. Solve away coordinates: g = lambda * x + h with h free of x lets us
  //    replace x by -h / lambda everywhere; each such step lowers the rank and
  //    the minor order by one.
  std::vector<MultiPoly> work = ideal.generators();
  std::vector<bool> active(m, true);
  for (;;) {
    check_deadline(deadline, config);
    std::optional<std::size_t> pick;
    std::pair<VarIndex, Rational> solved;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i].is_zero()) continue;
      if (pick && work[i].size() >= work[*pick].size()) continue;
      if (auto s = solvable_variable(work[i], m)) {
        pick = i;
        solved = *s;
      }
    }
    if (!pick) break;
    const auto [x, lambda] = solved;
    MultiPoly image = work[*pick] - MultiPoly::monomial(table, Monomial::variable(x), lambda);
    image *= Rational(-1) / lambda;
    const Substitution sub{{x, image}};
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(*pick));
    for (auto& g : work) {
      bool uses = false;
      for (const auto& t : g.terms()) {
        if (t.mono.exponent(x) > 0) {
          uses = true;
          break;
        }
      }
      if (uses) g = substitute(g, sub);
    }
    active[x] = false;
    ++rec.eliminated;
  }

  // 2. Keep a Q-linearly independent subset of what remains.
  std::vector<MultiPoly> rows;
  LinearSpan span(table);
  for (const auto& g : work) {
    if (g.is_zero()) continue;
    if (span.insert(g)) rows.push_back(normalized(g));
  }
  std::vector<VarIndex> cols;
  for (std::size_t v = 0; v < m; ++v) {
    if (active[v]) cols.push_back(static_cast<VarIndex>(v));
  }

  std::vector<Candidate> out;
  if (rows.empty() || cols.empty()) return out;
  const PolyMatrix jac = PolyMatrix::jacobian(rows, cols);
  const RatMatrix at0 = eval_matrix_origin(jac);
  const std::size_t reduced_rank = rank_rational(at0);
  if (reduced_rank + rec.eliminated != rank) {
    throw InvariantViolation("coordinate elimination changed the rank at the origin");
  }

  // 3. Pivot block invertible at the origin, preferring sparse rows/columns.
  std::vector<std::size_t> row_order(jac.rows());
  std::iota(row_order.begin(), row_order.end(), std::size_t{0});
  const auto row_weight = [&](std::size_t i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < jac.cols(); ++j) w += jac(i, j).size();
    return w;
  };
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](std::size_t x, std::size_t y) { return row_weight(x) < row_weight(y); });
  std::vector<std::size_t> prow;
  IncrementalRank rr;
  for (std::size_t i : row_order) {
    if (prow.size() == reduced_rank) break;
    std::vector<Rational> v(jac.cols());
    for (std::size_t j = 0; j < jac.cols(); ++j) v[j] = at0(i, j);
    if (rr.try_add(std::move(v))) prow.push_back(i);
  }
  std::sort(prow.begin(), prow.end());

  std::vector<std::size_t> col_order(jac.cols());
  std::iota(col_order.begin(), col_order.end(), std::size_t{0});
  const auto col_weight = [&](std::size_t j) {
    std::size_t w = 0;
    for (std::size_t i : prow) w += jac(i, j).size();
    return w;
  };
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](std::size_t x, std::size_t y) { return col_weight(x) < col_weight(y); });
  std::vector<std::size_t> pcol;
  IncrementalRank cr;
  for (std::size_t j : col_order) {
    if (pcol.size() == reduced_rank) break;
    std::vector<Rational> v(prow.size());
    for (std::size_t k = 0; k < prow.size(); ++k) v[k] = at0(prow[k], j);
    if (cr.try_add(std::move(v))) pcol.push_back(j);
  }
  std::sort(pcol.begin(), pcol.end());
  if (pcol.size() != reduced_rank) throw InvariantViolation("no invertible pivot block found");

  std::vector<std::size_t> other_rows, other_cols;
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    if (!std::binary_search(prow.begin(), prow.end(), i)) other_rows.push_back(i);
  }
  for (std::size_t j = 0; j < jac.cols(); ++j) {
    if (!std::binary_search(pcol.begin(), pcol.end(), j)) other_cols.push_back(j);
  }
  const std::size_t count = other_rows.size() * other_cols.size();
  rec.candidate_minors = count;
  check_minor_cap(count, config);

  // 4. Bordered minors det [[P, q_j], [r_i, s_ij]] = det P * s_ij - r_i adj(P) q_j,
  //    with adj(P) q_j taken column by column through Cramer's rule.
  const PolyMatrix pivot = jac.submatrix(prow, pcol);
  const MultiPoly det_p = det_poly(pivot);
  std::vector<std::vector<MultiPoly>> cramer(other_cols.size());
  for (std::size_t jj = 0; jj < other_cols.size(); ++jj) {
    for (std::size_t k = 0; k < pcol.size(); ++k) {
      check_deadline(deadline, config);
      PolyMatrix replaced = pivot;
      for (std::size_t a = 0; a < prow.size(); ++a) replaced(a, k) = jac(prow[a], other_cols[jj]);
      cramer[jj].push_back(det_poly(replaced));
    }
  }
  for (std::size_t i : other_rows) {
    for (std::size_t jj = 0; jj < other_cols.size(); ++jj) {
      check_deadline(deadline, config);
      MultiPoly minor = det_p * jac(i, other_cols[jj]);
      for (std::size_t k = 0; k < pcol.size(); ++k) {
        if (jac(i, pcol[k]).is_zero() || cramer[jj][k].is_zero()) continue;
        minor -= jac(i, pcol[k]) * cramer[jj][k];
      }
      if (minor.is_zero()) continue;
      out.push_back({std::move(minor), "bordered(step=" + std::to_string(step) + ",row=" +
                                           std::to_string(i) + ",col=" +
                                           table->name(cols[other_cols[jj]]) + ")"});
    }
  }
  return out;
}

}  // namespace

IdealPresentation c_ideal(const MulMapContext& ctx) {
  IdealPresentation ideal(ctx.table);
  for (std::size_t j = ctx.n + ctx.r; j-- > 0;) {
    ideal.adjoin(ctx.c[j], {GeneratorOrigin::kOriginal, "c" + std::to_string(j)});
  }
  return ideal;
}

ExtensionResult critical_extension(const IdealPresentation& ideal, const JetConfig& config,
                                   std::size_t step, const Deadline* deadline) {
  const std::size_t m = ideal.table()->size();
  const std::size_t rank = rank_at_origin(ideal);
  if (rank == m) throw ArgumentError("critical extension of an ideal of corank 0");

  ExtensionResult result{m - rank, ideal, {}};
  StepRecord& rec = result.record;
  rec.step = step;
  rec.corank = m - rank;
  rec.rank = rank;
  rec.jacobian_rows = ideal.size();
  rec.jacobian_cols = m;

  std::vector<Candidate> found =
      config.minor_mode == MinorMode::kAllMinors
          ? all_minor_candidates(ideal, rank, step, config, deadline, rec)
          : bordered_candidates(ideal, rank, step, config, deadline, rec);
  for (auto& c : found) {
    MultiPoly g = config.truncate_minors ? truncate_jet(c.value, config.degree) : std::move(c.value);
    if (g.is_zero()) continue;
    if (result.ideal.adjoin(g, {GeneratorOrigin::kMinor, c.label})) {
      ++rec.adjoined;
      if (config.record_generators) rec.generators.push_back(result.ideal.generators().back().to_string());
    }
    if (result.ideal.size() > config.max_generators) {
      throw CapExceeded("generator cap of " + std::to_string(config.max_generators) + " exceeded", {});
    }
  }
  return result;
}

ChainResult tb_symbol_oracle(std::size_t n, std::size_t r, const JetConfig& config) {
  return tb_symbol_oracle(build_context(n, r), config);
}

ChainResult tb_symbol_oracle(const MulMapContext& ctx, const JetConfig& config) {
  const std::size_t n = ctx.n;
  const std::size_t r = ctx.r;
  const Deadline deadline(config.time_budget_secs);
  ChainResult out{TBSymbol(), MethodRun{"oracle", RunStatus::kComplete, {}, std::nullopt, {}, {}},
                  {c_ideal(ctx)}};
  if (config.truncate_minors) out.run.note = "UNSOUND-FAST: minors truncated at the jet degree";

  for (std::size_t step = 1;; ++step) {
    const IdealPresentation& current = out.chain.back();
    const std::size_t corank = corank_at_origin(current);
    if (corank == 0) break;
    if (step > n + r) throw InvariantViolation("critical-extension chain exceeded n + r steps");
    out.run.coranks.push_back(corank);
    try {
      ExtensionResult ext = critical_extension(current, config, step, &deadline);
      out.run.steps.push_back(std::move(ext.record));
      out.chain.push_back(std::move(ext.ideal));
    } catch (const CapExceeded& e) {
      out.run.status = RunStatus::kCapped;
      out.run.note = std::string("inconclusive: ") + e.what();
      ExtensionCertificate partial;
      partial.n = n;
      partial.r = r;
      partial.config = config;
      partial.closed = TBSymbol(euclid_symbol(n, r).tuple);
      partial.runs.push_back(out.run);
      partial.verdict = Verdict::kPartial;
      throw CapExceeded(e.what(), std::move(partial));
    }
  }
  out.symbol = TBSymbol(out.run.coranks);
  out.run.symbol = out.symbol;
  return out;
}

}  // namespace tbsym
