#include "tbsym/certificate.hpp"

namespace tbsym {

std::string to_string(MinorMode mode) {
  return mode == MinorMode::kReduced ? "reduced" : "all-minors";
}

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kComplete: return "complete";
    case RunStatus::kCapped: return "capped";
    case RunStatus::kViolation: return "violation";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kPartial: return "PARTIAL";
    case Verdict::kViolation: return "VIOLATION";
  }
  return "?";
}

Deadline::Deadline(double seconds) : start_(std::chrono::steady_clock::now()), budget_(seconds) {}

double Deadline::elapsed_secs() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

bool Deadline::expired() const { return budget_ > 0 && elapsed_secs() > budget_; }

const MethodRun* ExtensionCertificate::find_run(const std::string& method) const {
  for (const auto& run : runs) {
    if (run.method == method) return &run;
  }
  return nullptr;
}

}  // namespace tbsym
