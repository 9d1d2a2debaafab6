#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tbsym/certificate.hpp"
#include "tbsym/mulmap.hpp"

namespace tbsym {

/// n x n matrix of d^s d_i / d b_0^{s-1} d a_j, rows d_{n-1}..d_0, columns a_{n-1}..a_0.
PolyMatrix d_jacobian_a(const MulMapContext& ctx, std::size_t s);
/// n x r matrix of d^s d_i / d b_0^{s-1} d b_j, columns b_{r-1}..b_0.
PolyMatrix d_jacobian_b(const MulMapContext& ctx, std::size_t s);
/// n x r block of D_{n+r+1}: entry (k, l) is the coefficient of L^{k-l}.
PolyMatrix d_block(const MulMapContext& ctx);

/// VW = WV and V inv(V) = I for seeded random unitriangular series.
IdentityCheck check_toeplitz_algebra(const MulMapContext& ctx, std::size_t trials, std::uint32_t seed);
/// B (dd/da) = I_n and B (dd/db) + D = 0.
IdentityCheck check_d_jacobian(const MulMapContext& ctx);
/// (d^s d / d b_0^{s-1} d b) = -s (d^s d / d b_0^{s-1} d a) D.
IdentityCheck check_b0_derivative(const MulMapContext& ctx, std::size_t s);
/// (dd/db) equals the first r columns of -B^{-1} Dhat.
IdentityCheck check_d_jacobian_shape(const MulMapContext& ctx);
/// Gradient rows of the psi block s: grad_b psi = -(s+1) grad_a psi D.
IdentityCheck check_psi_gradient(const MulMapContext& ctx, std::size_t s);
/// Coefficients of L^i, n-sr < i <= n+r, in B^{-s} A lie in (psi_0..psi_{sr-1}) mod m^{D+1}.
IdentityCheck check_quotient_vanishing(const MulMapContext& ctx, std::size_t s, int degree);
/// (psi_0..psi_{q1 r-1}, gamma_{n-r1}..gamma_{n-1}, b) has invertible linear part.
IdentityCheck check_gamma_coordinates(const MulMapContext& ctx);
/// Level-1 generators phi_i agree with the psi tail modulo (psi_0..psi_{q1 r-1}).
IdentityCheck check_descent_tail(const MulMapContext& ctx, int degree);
/// c_i agrees with tau_i modulo (psi_0..psi_{q1 r-1}).
IdentityCheck check_product_congruence(const MulMapContext& ctx, int degree);

/// Every check in scope for (n, r), in a fixed order.
std::vector<IdentityCheck> verify_identities(std::size_t n, std::size_t r, int degree);

}  // namespace tbsym
