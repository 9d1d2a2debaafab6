#include "tbsym_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbsym/certify.hpp"
#include "tbsym/identities.hpp"
#include "tbsym/oracle.hpp"
#include "tbsym/structured.hpp"

namespace tbsym::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { kText, kTsv, kJson };

struct RunConfig {
  std::string command;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t max_sum = 0;
  std::string method = "all";
  int jet = 3;
  std::size_t max_minors = 200000;
  double time_budget = 600.0;
  bool all_minors = false;
  bool unsound_fast = false;
  std::string out_path;
  Format format = Format::kText;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

JetConfig jet_config(const RunConfig& cfg) {
  JetConfig c;
  c.degree = cfg.jet;
  c.max_minors_per_step = cfg.max_minors;
  c.time_budget_secs = cfg.time_budget;
  c.minor_mode = cfg.all_minors ? MinorMode::kAllMinors : MinorMode::kReduced;
  c.truncate_minors = cfg.unsound_fast;
  return c;
}

void validate_pair(std::size_t n, std::size_t r) {
  if (r < 1 || n < r) {
    throw UsageError("degrees must satisfy n >= r >= 1 (got n=" + std::to_string(n) +
                     ", r=" + std::to_string(r) + ")");
  }
}

// Result of one method on one pair.
struct MethodResult {
  std::string method;
  enum class Kind { kSymbol, kCapped, kViolation } kind = Kind::kSymbol;
  std::string text;    // symbol, or CAPPED / VIOLATION
  std::string reason;  // why it did not produce a symbol
};

MethodResult run_method(const std::string& method, const MulMapContext& ctx, const JetConfig& config) {
  MethodResult res{method, MethodResult::Kind::kSymbol, {}, {}};
  try {
    if (method == "closed") {
      res.text = TBSymbol(euclid_symbol(ctx.n, ctx.r).tuple).to_string();
    } else if (method == "structured") {
      res.text = tb_symbol_structured(ctx, config).symbol.to_string();
    } else {
      res.text = tb_symbol_oracle(ctx, config).symbol.to_string();
    }
  } catch (const CapExceeded& e) {
    res.kind = MethodResult::Kind::kCapped;
    res.text = "CAPPED";
    res.reason = e.what();
  } catch (const TheoremViolation& e) {
    res.kind = MethodResult::Kind::kViolation;
    res.text = "VIOLATION";
    res.reason = e.what();
  } catch (const InvariantViolation& e) {
    res.kind = MethodResult::Kind::kViolation;
    res.text = "VIOLATION";
    res.reason = e.what();
  }
  return res;
}

std::vector<std::string> methods_for(const std::string& selector) {
  if (selector == "all") return {"closed", "structured", "oracle"};
  return {selector};
}

// AGREE, DISAGREE or CAPPED over the methods that ran.
std::string row_verdict(const std::vector<MethodResult>& results) {
  std::optional<std::string> first;
  bool capped = false;
  for (const auto& m : results) {
    if (m.kind == MethodResult::Kind::kViolation) return "DISAGREE";
    if (m.kind == MethodResult::Kind::kCapped) {
      capped = true;
      continue;
    }
    if (!first) first = m.text;
    if (*first != m.text) return "DISAGREE";
  }
  return capped ? "CAPPED" : "AGREE";
}

int exit_for(const std::string& verdict) {
  if (verdict == "DISAGREE") return kExitDisagree;
  if (verdict == "CAPPED") return kExitCapped;
  return kExitOk;
}

int cmd_symbol(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MulMapContext ctx = build_context(cfg.n, cfg.r);
  const JetConfig config = jet_config(cfg);
  std::vector<MethodResult> results;
  for (const auto& m : methods_for(cfg.method)) results.push_back(run_method(m, ctx, config));
  for (const auto& m : results) {
    if (!m.reason.empty()) err << m.method << ": " << m.reason << "\n";
  }
  const std::string verdict = row_verdict(results);
  const bool many = results.size() > 1;

  switch (cfg.format) {
    case Format::kText:
      for (const auto& m : results) out << m.text << "\n";
      if (many) out << verdict << "\n";
      break;
    case Format::kTsv:
      out << "method\tsymbol\n";
      for (const auto& m : results) out << m.method << "\t" << m.text << "\n";
      if (many) out << "verdict\t" << verdict << "\n";
      break;
    case Format::kJson: {
      json j;
      j["n"] = cfg.n;
      j["r"] = cfg.r;
      json methods = json::object();
      for (const auto& m : results) methods[m.method] = m.text;
      j["symbols"] = methods;
      j["verdict"] = verdict;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return exit_for(verdict);
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_sum < 2) throw UsageError("--max-sum must be at least 2");
  const JetConfig config = jet_config(cfg);
  const std::vector<std::string> methods = methods_for(cfg.method);
  const std::vector<std::string> columns{"closed", "structured", "oracle"};

  json rows = json::array();
  if (cfg.format != Format::kJson) out << "n\tr\tclosed\tstructured\toracle\tverdict\n";
  bool disagree = false;
  bool capped = false;
  for (std::size_t sum = 2; sum <= cfg.max_sum; ++sum) {
    for (std::size_t n = (sum + 1) / 2; n < sum; ++n) {
      const std::size_t r = sum - n;
      const MulMapContext ctx = build_context(n, r);
      std::vector<MethodResult> results;
      for (const auto& m : methods) results.push_back(run_method(m, ctx, config));
      for (const auto& m : results) {
        if (!m.reason.empty()) err << "(" << n << "," << r << ") " << m.method << ": " << m.reason << "\n";
      }
      const std::string verdict = row_verdict(results);
      disagree = disagree || verdict == "DISAGREE";
      capped = capped || verdict == "CAPPED";

      std::vector<std::string> cells;
      for (const auto& col : columns) {
        std::string cell = "-";
        for (const auto& m : results) {
          if (m.method == col) cell = m.text;
        }
        cells.push_back(cell);
      }
      if (cfg.format == Format::kJson) {
        json row;
        row["n"] = n;
        row["r"] = r;
        for (std::size_t k = 0; k < columns.size(); ++k) row[columns[k]] = cells[k];
        row["verdict"] = verdict;
        rows.push_back(row);
      } else {
        out << n << "\t" << r;
        for (const auto& c : cells) out << "\t" << c;
        out << "\t" << verdict << "\n";
      }
    }
  }
  if (cfg.format == Format::kJson) out << rows.dump(2) << "\n";
  if (disagree) return kExitDisagree;
  return capped ? kExitCapped : kExitOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot write " << cfg.out_path << "\n";
      return kExitUsage;
    }
  }
  const ExtensionCertificate cert = certify(cfg.n, cfg.r, jet_config(cfg));
  const std::string text = to_json(cert);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    file << text;
    file.close();
    if (!file) {
      err << "failed writing " << cfg.out_path << "\n";
      return kExitUsage;
    }
    out << to_string(cert.verdict) << "\n";
  }
  switch (cert.verdict) {
    case Verdict::kConfirmed:
      return kExitOk;
    case Verdict::kViolation:
      return kExitDisagree;
    case Verdict::kPartial:
      return kExitCapped;
  }
  return kExitDisagree;
}

int cmd_verify_lemmas(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::vector<IdentityCheck> checks = verify_identities(cfg.n, cfg.r, cfg.jet);
  bool failed = false;
  json arr = json::array();
  if (cfg.format == Format::kTsv) out << "check\tstatus\tdetail\n";
  for (const auto& c : checks) {
    failed = failed || c.status == "FAIL";
    switch (cfg.format) {
      case Format::kText:
        out << c.status << "  " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
        break;
      case Format::kTsv:
        out << c.name << "\t" << c.status << "\t" << c.detail << "\n";
        break;
      case Format::kJson:
        arr.push_back(json{{"check", c.name}, {"status", c.status}, {"detail", c.detail}});
        break;
    }
  }
  if (cfg.format == Format::kJson) out << arr.dump(2) << "\n";
  return failed ? kExitDisagree : kExitOk;
}

double env_time_budget(double fallback) {
  const char* raw = std::getenv("TB_TIME_BUDGET_SECS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0)) throw UsageError("TB_TIME_BUDGET_SECS must be a positive number");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Boardman symbol calculator for the map (a, b) -> a * b on monic polynomials"};
  app.name("tbsym");
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string format = "text";
  std::optional<double> budget_flag;
  const auto method_check = CLI::IsMember({"closed", "structured", "oracle", "all"});

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv", "json"}));
    sub->add_option("--max-minors", cfg.max_minors, "Cap on candidate minors per oracle step")
        ->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", budget_flag, "Per-run wall-clock budget in seconds")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--all-minors", cfg.all_minors, "Oracle enumerates every minor instead of bordered minors");
    sub->add_flag("--unsound-fast", cfg.unsound_fast, "Truncate adjoined minors at the jet degree");
    sub->add_option("--jet", cfg.jet, "Jet degree D for truncated comparisons")->check(CLI::Range(1, 64));
  };

  CLI::App* symbol = app.add_subcommand("symbol", "Compute the symbol of one pair");
  symbol->add_option("n", cfg.n, "Degree of the first factor")->required();
  symbol->add_option("r", cfg.r, "Degree of the second factor")->required();
  symbol->add_option("--method", cfg.method, "closed | structured | oracle | all")->check(method_check);
  add_common(symbol);

  CLI::App* table = app.add_subcommand("table", "Tabulate every pair with n + r <= S");
  table->add_option("--max-sum", cfg.max_sum, "Largest n + r")->required();
  table->add_option("--method", cfg.method, "closed | structured | oracle | all")->check(method_check);
  add_common(table);

  CLI::App* cert = app.add_subcommand("certify", "Write a JSON certificate for one pair");
  cert->add_option("n", cfg.n, "Degree of the first factor")->required();
  cert->add_option("r", cfg.r, "Degree of the second factor")->required();
  cert->add_option("--out", cfg.out_path, "Certificate path (stdout when omitted)");
  add_common(cert);

  CLI::App* lemmas = app.add_subcommand("verify-lemmas", "Check the symbolic identities for one pair");
  lemmas->add_option("n", cfg.n, "Degree of the first factor")->required();
  lemmas->add_option("r", cfg.r, "Degree of the second factor")->required();
  add_common(lemmas);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    cfg.format = format == "tsv" ? Format::kTsv : format == "json" ? Format::kJson : Format::kText;
    cfg.time_budget = budget_flag ? *budget_flag : env_time_budget(cfg.time_budget);
    if (table->parsed()) return cmd_table(cfg, out, err);
    validate_pair(cfg.n, cfg.r);
    if (symbol->parsed()) return cmd_symbol(cfg, out, err);
    if (cert->parsed()) return cmd_certify(cfg, out, err);
    return cmd_verify_lemmas(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    err << app.get_subcommands().front()->help();
    return kExitUsage;
  }
}

}  // namespace tbsym::cli
