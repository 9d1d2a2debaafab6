#pragma once

#include <cstddef>
#include <string>

#include "tbsym/certificate.hpp"

namespace tbsym {

std::string tool_version();

/// Runs the closed form, the structured engine and the oracle, compares the
/// chains at jet level, runs the identity checks, and folds everything into
/// one verdict. Never throws for valid (n, r).
ExtensionCertificate certify(std::size_t n, std::size_t r, const JetConfig& config);

/// Canonical JSON: fixed key order, two-space indent, trailing newline.
std::string to_json(const ExtensionCertificate& cert);

}  // namespace tbsym
