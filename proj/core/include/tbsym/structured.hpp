#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tbsym/certificate.hpp"
#include "tbsym/mulmap.hpp"
#include "tbsym/oracle.hpp"

namespace tbsym {

/// One adjunction of the explicit construction.
struct StructuredStep {
  std::size_t level = 0;
  std::vector<MultiPoly> generators;  // over the top table
  std::vector<std::string> labels;
};

/// The generator blocks in adjunction order: psi blocks of size r for the
/// first q1 steps and the r1 tail, then per descent level its own blocks and
/// tail, composed into the top variables.
std::vector<StructuredStep> structured_steps(const MulMapContext& ctx, const JetConfig& config);

/// Adjoins the blocks one step at a time, asserting after each step that the
/// corank equals the next entry of I(n, r). Throws TheoremViolation on the
/// first mismatch.
ChainResult tb_symbol_structured(std::size_t n, std::size_t r, const JetConfig& config = {});
ChainResult tb_symbol_structured(const MulMapContext& ctx, const JetConfig& config = {});

}  // namespace tbsym
