#pragma once

#include <cstddef>
#include <vector>

#include "tbsym/certificate.hpp"
#include "tbsym/ideal.hpp"
#include "tbsym/mulmap.hpp"

namespace tbsym {

/// The ideal generated by c_{n+r-1}, ..., c_0.
IdealPresentation c_ideal(const MulMapContext& ctx);

struct ExtensionResult {
  std::size_t corank = 0;
  IdealPresentation ideal;
  StepRecord record;
};

/// One critical extension: the ideal plus the (rank+1)-minors of its
/// generator Jacobian. Requires corank > 0. Throws CapExceeded (with an empty
/// partial certificate) when a cap or the deadline is hit.
ExtensionResult critical_extension(const IdealPresentation& ideal, const JetConfig& config,
                                   std::size_t step = 1, const Deadline* deadline = nullptr);

struct ChainResult {
  TBSymbol symbol;
  MethodRun run;
  std::vector<IdealPresentation> chain;  // J_0, J_1, ..., J_S
};

/// Iterates critical extensions from the c-ideal until the corank is 0.
/// Throws CapExceeded carrying the partial run.
ChainResult tb_symbol_oracle(std::size_t n, std::size_t r, const JetConfig& config);
ChainResult tb_symbol_oracle(const MulMapContext& ctx, const JetConfig& config);

}  // namespace tbsym
