#include "tbsym/certify.hpp"

#include <optional>
#include <utility>

#include <json.hpp>

#include "tbsym/identities.hpp"
#include "tbsym/mulmap.hpp"
#include "tbsym/oracle.hpp"
#include "tbsym/structured.hpp"

#ifndef TBSYM_VERSION
#define TBSYM_VERSION "0.0.0"
#endif

namespace tbsym {

namespace {

using Json = nlohmann::ordered_json;

Json to_json_value(const JetConfig& c) {
  Json j;
  j["jet_degree"] = c.degree;
  j["max_generators"] = c.max_generators;
  j["max_minors_per_step"] = c.max_minors_per_step;
  j["time_budget_secs"] = c.time_budget_secs;
  j["minor_mode"] = to_string(c.minor_mode);
  j["truncate_minors"] = c.truncate_minors;
  j["exact_descent"] = c.exact_descent;
  return j;
}

Json to_json_value(const MembershipRecord& m) {
  Json j;
  j["label"] = m.label;
  j["holds"] = m.holds;
  return j;
}

Json to_json_value(const StepRecord& s) {
  Json j;
  j["step"] = s.step;
  j["corank"] = s.corank;
  j["jacobian"] = Json{{"rows", s.jacobian_rows}, {"cols", s.jacobian_cols}};
  j["rank_at_origin"] = s.rank;
  j["eliminated"] = s.eliminated;
  j["candidate_minors"] = s.candidate_minors;
  j["adjoined"] = s.adjoined;
  j["generators"] = s.generators;
  Json checks = Json::array();
  for (const auto& m : s.jet_checks) checks.push_back(to_json_value(m));
  j["jet_checks"] = std::move(checks);
  return j;
}

Json to_json_value(const MethodRun& run) {
  Json j;
  j["method"] = run.method;
  j["status"] = to_string(run.status);
  j["coranks"] = run.coranks;
  j["symbol"] = run.symbol ? Json(run.symbol->to_string()) : Json(nullptr);
  j["note"] = run.note;
  Json steps = Json::array();
  for (const auto& s : run.steps) steps.push_back(to_json_value(s));
  j["steps"] = std::move(steps);
  return j;
}

void fill_from_chain(MethodRun& run, ChainResult&& result, std::optional<std::vector<IdealPresentation>>& chain) {
  run = std::move(result.run);
  chain = std::move(result.chain);
}

}  // namespace

std::string tool_version() { return TBSYM_VERSION; }

ExtensionCertificate certify(std::size_t n, std::size_t r, const JetConfig& config) {
  ExtensionCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.config = config;
  cert.closed = TBSymbol(euclid_symbol(n, r).tuple);
  const MulMapContext ctx = build_context(n, r);
  if (config.truncate_minors) cert.flags.push_back("UNSOUND-FAST");
  if (!config.exact_descent) cert.flags.push_back("descent-composed-at-jet-degree");

  MethodRun closed{"closed", RunStatus::kComplete, cert.closed.entries(), cert.closed, {}, "Euclidean algorithm"};
  cert.runs.push_back(closed);

  MethodRun structured;
  std::optional<std::vector<IdealPresentation>> structured_chain;
  try {
    fill_from_chain(structured, tb_symbol_structured(ctx, config), structured_chain);
  } catch (const TheoremViolation& e) {
    structured = e.certificate().runs.back();
  }

  MethodRun oracle;
  std::optional<std::vector<IdealPresentation>> oracle_chain;
  try {
    fill_from_chain(oracle, tb_symbol_oracle(ctx, config), oracle_chain);
  } catch (const CapExceeded& e) {
    oracle = e.partial().runs.back();
  }

  bool violation = false;
  if (structured_chain && oracle_chain) {
    const std::size_t common = std::min(structured_chain->size(), oracle_chain->size());
    for (std::size_t s = 0; s < common; ++s) {
      const IdealPresentation& lhs = (*oracle_chain)[s];
      const IdealPresentation& rhs = (*structured_chain)[s];
      const bool eq = ideal_equal_mod_jet(lhs, rhs, config.degree);
      cert.chain_equality.push_back({"J" + std::to_string(s), eq});
      violation |= !eq;
      if (s == 0) continue;
      // Each structured generator of step s lies in the oracle's J_s.
      const JetSpan span(lhs, config.degree);
      StepRecord& rec = structured.steps[s - 1];
      for (std::size_t k = (*structured_chain)[s - 1].size(); k < rhs.size(); ++k) {
        const bool holds = span.contains(rhs.generators()[k]);
        rec.jet_checks.push_back({rhs.provenance()[k].label + " in oracle J" + std::to_string(s), holds});
        violation |= !holds;
      }
    }
  }

  cert.runs.push_back(structured);
  cert.runs.push_back(oracle);

  cert.identities = verify_identities(n, r, config.degree);
  for (const auto& c : cert.identities) violation |= c.status == "FAIL";

  const bool structured_ok = structured.status == RunStatus::kComplete && structured.symbol == cert.closed;
  violation |= !structured_ok;
  if (oracle.status == RunStatus::kComplete) violation |= oracle.symbol != cert.closed;
  if (oracle.status == RunStatus::kViolation) violation = true;

  if (violation) {
    cert.verdict = Verdict::kViolation;
  } else if (oracle.status == RunStatus::kCapped) {
    cert.verdict = Verdict::kPartial;
  } else {
    cert.verdict = Verdict::kConfirmed;
  }
  return cert;
}

std::string to_json(const ExtensionCertificate& cert) {
  Json j;
  j["tool"] = "tbsym";
  j["tool_version"] = tool_version();
  j["n"] = cert.n;
  j["r"] = cert.r;
  j["config"] = to_json_value(cert.config);
  j["closed_form"] = cert.closed.to_string();
  Json runs = Json::array();
  for (const auto& run : cert.runs) runs.push_back(to_json_value(run));
  j["runs"] = std::move(runs);
  Json chain = Json::array();
  for (const auto& m : cert.chain_equality) chain.push_back(to_json_value(m));
  j["chain_equality"] = std::move(chain);
  Json ids = Json::array();
  for (const auto& c : cert.identities) ids.push_back(Json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  j["identities"] = std::move(ids);
  Json agreement;
  for (const auto& run : cert.runs) {
    if (run.method == "closed") continue;
    agreement[run.method] = run.symbol ? Json(*run.symbol == cert.closed) : Json(nullptr);
  }
  j["agreement"] = std::move(agreement);
  j["flags"] = cert.flags;
  j["verdict"] = to_string(cert.verdict);
  return j.dump(2) + "\n";
}

}  // namespace tbsym
