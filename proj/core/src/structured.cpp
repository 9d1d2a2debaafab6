#include "tbsym/structured.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace tbsym {

namespace {

StructuredStep block(const DescentLevel& level, const GeneratorFamily& psi, std::size_t begin,
                     std::size_t count, const std::string& prefix) {
  StructuredStep step;
  step.level = level.index;
  for (std::size_t k = begin; k < begin + count; ++k) {
    step.generators.push_back(level.compose(psi.at(static_cast<int>(k))));
    step.labels.push_back(prefix + std::to_string(k));
  }
  return step;
}

}  // namespace

std::vector<StructuredStep> structured_steps(const MulMapContext& ctx, const JetConfig& config) {
  const std::optional<int> jet =
      config.exact_descent ? std::nullopt : std::optional<int>(std::max(config.degree, 1));
  std::vector<StructuredStep> steps;

  DescentLevel level = top_level(ctx, jet);
  {
    const GeneratorFamily psi = psi_family(ctx);
    const std::size_t q = ctx.n / ctx.r;
    const std::size_t rem = ctx.n % ctx.r;
    for (std::size_t s = 0; s < q; ++s) steps.push_back(block(level, psi, s * ctx.r, ctx.r, "psi"));
    if (rem > 0) steps.push_back(block(level, psi, q * ctx.r, rem, "psi"));
  }
  // Level i: the first block of mu_{r_{i-1}, r_i} repeats the previous tail
  // modulo the earlier generators, so only blocks 2..q_{i+1} and the tail are new.
  while (level.local.n % level.local.r != 0) {
    level = descend(level);
    const MulMapContext& local = level.local;
    const GeneratorFamily psi = psi_family(local);
    const std::size_t q = local.n / local.r;
    const std::size_t rem = local.n % local.r;
    const std::string prefix = "phi" + std::to_string(level.index) + "_";
    for (std::size_t s = 1; s < q; ++s) steps.push_back(block(level, psi, s * local.r, local.r, prefix));
    if (rem > 0) steps.push_back(block(level, psi, q * local.r, rem, prefix));
  }
  return steps;
}

ChainResult tb_symbol_structured(std::size_t n, std::size_t r, const JetConfig& config) {
  return tb_symbol_structured(build_context(n, r), config);
}

ChainResult tb_symbol_structured(const MulMapContext& ctx, const JetConfig& config) {
  const std::size_t n = ctx.n;
  const std::size_t r = ctx.r;
  const std::vector<std::size_t> predicted = euclid_symbol(n, r).tuple;
  ChainResult out{TBSymbol(), MethodRun{"structured", RunStatus::kComplete, {}, std::nullopt, {}, {}},
                  {c_ideal(ctx)}};
  if (!config.exact_descent) {
    out.run.note = "descent composed modulo m^" + std::to_string(std::max(config.degree, 1) + 1);
  }

  const auto violation = [&](const std::string& what) {
    out.run.status = RunStatus::kViolation;
    out.run.note = what;
    ExtensionCertificate cert;
    cert.n = n;
    cert.r = r;
    cert.config = config;
    cert.closed = TBSymbol(predicted);
    cert.runs.push_back(out.run);
    cert.verdict = Verdict::kViolation;
    throw TheoremViolation(what, std::move(cert));
  };

  const std::vector<StructuredStep> steps = structured_steps(ctx, config);
  for (std::size_t t = 0;; ++t) {
    const IdealPresentation& current = out.chain.back();
    const std::size_t rank = rank_at_origin(current);
    const std::size_t corank = ctx.table->size() - rank;
    if (t == steps.size()) {
      if (corank != 0) {
        out.run.coranks.push_back(corank);
        violation("corank " + std::to_string(corank) + " remains after the last structured step");
      }
      break;
    }
    out.run.coranks.push_back(corank);
    if (t >= predicted.size() || corank != predicted[t]) {
      violation("step " + std::to_string(t + 1) + ": measured corank " + std::to_string(corank) +
                ", predicted " + (t < predicted.size() ? std::to_string(predicted[t]) : "0"));
    }
    if (steps[t].generators.size() != predicted[t]) {
      violation("step " + std::to_string(t + 1) + " adjoins " +
                std::to_string(steps[t].generators.size()) + " generators, expected " +
                std::to_string(predicted[t]));
    }
    StepRecord rec;
    rec.step = t + 1;
    rec.corank = corank;
    rec.rank = rank;
    rec.jacobian_rows = current.size();
    rec.jacobian_cols = ctx.table->size();
    rec.candidate_minors = steps[t].generators.size();
    IdealPresentation next = current;
    for (std::size_t k = 0; k < steps[t].generators.size(); ++k) {
      if (next.adjoin(steps[t].generators[k], {GeneratorOrigin::kStructured, steps[t].labels[k]})) {
        ++rec.adjoined;
        if (config.record_generators) {
          rec.generators.push_back(steps[t].labels[k] + ": " + next.generators().back().to_string());
        }
      }
    }
    out.run.steps.push_back(std::move(rec));
    out.chain.push_back(std::move(next));
  }
  out.symbol = TBSymbol(out.run.coranks);
  out.run.symbol = out.symbol;
  return out;
}

}  // namespace tbsym
