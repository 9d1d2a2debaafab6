#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tbsym/errors.hpp"
#include "tbsym/ideal.hpp"

namespace tbsym {

enum class MinorMode {
  kReduced,    // eliminate solved coordinates, then bordered minors around a unit pivot
  kAllMinors,  // every (rank+1)-minor of the generator Jacobian
};

struct JetConfig {
  int degree = 3;
  std::size_t max_generators = 200000;
  std::size_t max_minors_per_step = 200000;
  double time_budget_secs = 600.0;
  MinorMode minor_mode = MinorMode::kReduced;
  /// Truncates every adjoined minor at `degree`. Not proven sound; results are
  /// labelled UNSOUND-FAST.
  bool truncate_minors = false;
  /// Structured engine: compose descent levels exactly, or at jet `degree`.
  bool exact_descent = true;
  /// Keep the canonical text of every adjoined generator in step records.
  bool record_generators = true;
};

std::string to_string(MinorMode mode);

/// Wall-clock cutoff shared by one run.
class Deadline {
 public:
  explicit Deadline(double seconds);
  bool expired() const;
  double elapsed_secs() const;

 private:
  std::chrono::steady_clock::time_point start_;
  double budget_;
};

struct MembershipRecord {
  std::string label;
  bool holds = false;
};

struct StepRecord {
  std::size_t step = 0;     // 1-based
  std::size_t corank = 0;   // i_s, measured before the extension
  std::size_t jacobian_rows = 0;
  std::size_t jacobian_cols = 0;
  std::size_t rank = 0;     // rank at the origin of the ideal being extended
  std::size_t eliminated = 0;  // coordinates solved away before taking minors
  std::size_t candidate_minors = 0;
  std::size_t adjoined = 0;
  std::vector<std::string> generators;  // canonical text of adjoined generators
  std::vector<MembershipRecord> jet_checks;
};

enum class RunStatus { kComplete, kCapped, kViolation };

std::string to_string(RunStatus status);

struct MethodRun {
  std::string method;  // "closed", "structured", "oracle"
  RunStatus status = RunStatus::kComplete;
  std::vector<std::size_t> coranks;  // measured sequence, final 0 excluded
  std::optional<TBSymbol> symbol;
  std::vector<StepRecord> steps;
  std::string note;
};

struct IdentityCheck {
  std::string name;
  std::string status;  // PASS, FAIL, SKIPPED
  std::string detail;
};

enum class Verdict { kConfirmed, kPartial, kViolation };

std::string to_string(Verdict verdict);

struct ExtensionCertificate {
  std::size_t n = 0;
  std::size_t r = 0;
  JetConfig config;
  TBSymbol closed;
  std::vector<MethodRun> runs;
  std::vector<MembershipRecord> chain_equality;  // oracle vs structured per step
  std::vector<IdentityCheck> identities;
  Verdict verdict = Verdict::kConfirmed;
  std::vector<std::string> flags;

  const MethodRun* find_run(const std::string& method) const;
};

/// A resource cap stopped a run; carries what was computed so far.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, ExtensionCertificate partial)
      : Error(what), partial_(std::move(partial)) {}
  const ExtensionCertificate& partial() const noexcept { return partial_; }

 private:
  ExtensionCertificate partial_;
};

/// The structured engine measured a corank that contradicts the prediction.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, ExtensionCertificate cert)
      : Error(what), cert_(std::move(cert)) {}
  const ExtensionCertificate& certificate() const noexcept { return cert_; }

 private:
  ExtensionCertificate cert_;
};

}  // namespace tbsym
