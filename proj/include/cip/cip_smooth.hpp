#pragma once
#include <vector>

#include "cip/characteristics.hpp"
#include "cip/grid.hpp"
#include "cip/hermite.hpp"

namespace cip {

// One step of the conservative scheme for u_t + (c(x) u)_x = 0:
//   u_k <- (c(y_k)/c(x_k)) H_j(y_k)
//   v_k <- (c(y_k)/c(x_k)) [(c'(y_k) - c'(x_k))/c(x_k)] H_j(y_k)
//         + (c(y_k)/c(x_k))^2 H_j'(y_k)
// All reads come from the input state (double-buffered); an in-place update
// would corrupt neighbors. No CFL restriction. Pass a precomputed feet table
// for fixed-step runs; results are identical to recomputing.
FieldState step_advection(const FieldState& state, const Grid& grid, const SmoothCoefficient& model,
                          double dt, const std::vector<FootPoint>* feet = nullptr,
                          const OdeOptions& opts = {});

// One step of the transport scheme for u_t + c(x) u_x = 0:
//   u_k <- H_j(y_k),  v_k <- (c(y_k)/c(x_k)) H_j'(y_k)
FieldState step_transport(const FieldState& state, const Grid& grid, const SmoothCoefficient& model,
                          double dt, const std::vector<FootPoint>* feet = nullptr,
                          const OdeOptions& opts = {});

// Constant speed: the foot is x_k - c dt for all k, so the integer shift and
// the fractional offset lambda are computed once and the two-moment stencil
// is applied directly.
FieldState step_constant(const FieldState& state, const Grid& grid, double c, double dt);

// Split-phase variants kept for comparison; both require CFL <= 1 and are
// excluded from the acceptance-order studies.
enum class LegacyVariant { sol1, sol2 };

FieldState step_legacy(const FieldState& state, const Grid& grid, const SmoothCoefficient& model,
                       double dt, LegacyVariant variant);

}  // namespace cip
