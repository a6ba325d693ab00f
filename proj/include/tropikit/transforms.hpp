#pragma once

#include "tropikit/sampled_function.hpp"

namespace tropikit {

// sup phi (max-plus) or inf phi (min-plus) over the grid.
ExtReal idempotent_integral(const SampledFunction& phi);

// sup_x (phi(x) (.) psi(x)), resp. inf for min-plus. Throws GridMismatch.
ExtReal integral_wrt_measure(const SampledFunction& phi, const SampledFunction& psi);

// (phi * psi)(g) = sup_x (phi(x) + psi(g - x)) over in-range indices, on the
// grid from start_phi + start_psi with the shared step. Throws GridMismatch
// for different steps or conventions.
SampledFunction convolution(const SampledFunction& phi, const SampledFunction& psi);

// phi~(xi) = sup_x (xi x + phi(x)) on the given xi grid. This is the
// classical Legendre-Fenchel conjugate of -phi. Requires max-plus.
SampledFunction legendre(const SampledFunction& phi, const Grid& xi);

// inf_xi (phi~(xi) - xi x) on the given x grid. Composed with `legendre` it
// returns the concave majorant of phi (up to grid resolution).
SampledFunction legendre_inverse(const SampledFunction& phi_tilde, const Grid& x);

struct EvolveParams {
    double t = 1.0;
    double mass = 1.0;
};

// Lax-Oleinik formula for the free particle:
// S(x, t) = min_y [S0(y) + m (x - y)^2 / (2t)] over S0's grid.
// Requires min-plus; throws DomainError for t <= 0 or m <= 0.
SampledFunction hopf_lax_evolve(const SampledFunction& s0, const EvolveParams& p);

} // namespace tropikit
