#pragma once
#include <array>
#include <functional>

#include "cip/coefficients.hpp"
#include "cip/grid.hpp"
#include "cip/hermite.hpp"
#include "cip/small_linalg.hpp"

namespace cip {

enum class JumpCondition { jump_u, jump_cu };

// Piecewise cubic pair H± on one irregular cell, coupled at alpha by the
// jump relations and interpolating the endpoint data.
//
// For [u] = 0 the shared coefficients a0..a3 expand as
//   H±(x) = sum_l (a_l / l!) ((x - alpha)/(c± dx))^l,
// which encodes [u] = [c u_x] = [c^2 u_xx] = [c^3 u_xxx] = 0 identically.
// For [cu] = 0 the expansion carries an extra 1/c± so that
// [cu] = [c^2 u_x] = [c^3 u_xx] = [c^4 u_xxx] = 0.
//
// The stored matrix A is normalized so that its determinant equals
//   (c- theta + c+ (1-theta))^4 / (12 (c+ c-)^4)
// for [u] = 0; the right-hand side f carries the matching c± factors.
struct IIMProfile {
    double alpha = 0.0;
    double theta = 0.0;  // (x_right - alpha)/dx in [0, 1]
    double c_minus = 1.0, c_plus = 1.0;
    double x_left = 0.0, x_right = 1.0;
    double dx = 1.0;
    JumpCondition condition = JumpCondition::jump_u;
    Vec4 a{};
    Mat4 A{};
    Vec4 f{};
    double det_a = 0.0;
};

IIMProfile build_interface_polynomial(const HermiteCell& cell, double alpha, double c_minus,
                                      double c_plus, JumpCondition condition);

enum class Side { minus_side, plus_side, auto_side };

// Evaluate H- or H+ with its one-sided derivative. auto_side selects by
// comparing x to alpha; exactly at alpha the derivative is ambiguous and an
// explicit side is required.
ProfileSample eval_interface_polynomial(const IIMProfile& profile, double x,
                                        Side side = Side::auto_side);

// One step of IIM-CIP for u_t + c(x) u_x = 0 with piecewise constant c.
// Regular nodes use the constant-speed stencil with the local side's speed;
// the irregular node x_j is updated from H+(x_j - c+ dt) regardless of
// whether the foot crosses alpha. Requires max(c-, c+) dt <= dx.
FieldState step_discontinuous(const FieldState& state, const Grid& grid,
                              const PiecewiseConstantCoefficient& model, double dt,
                              JumpCondition condition);

// Left-moving irregular update used by the Maxwell solver's leftward
// characteristic: samples H- at x_left + c- dt.
ProfileSample irregular_left_update(const IIMProfile& profile, double dt);

// Exact solution of the interface problem via the piecewise foot mapping:
//   y = x - c+ t              if x >= alpha and t <= (x - alpha)/c+
//   y = x - c- t              if x <= alpha
//   y = (c-/c+)(x - c+ t) + (1 - c-/c+) alpha   otherwise
// returning u0(y) for [u] = 0 and (c(y)/c(x)) u0(y) for [cu] = 0.
double exact_discontinuous_solution(const std::function<double(double)>& u0,
                                    const PiecewiseConstantCoefficient& model, double t, double x,
                                    JumpCondition condition);

// x-derivative of the exact solution (u0_prime is the analytic derivative of
// u0); used to seed high-order initial data and by the accuracy studies.
double exact_discontinuous_solution_dx(const std::function<double(double)>& u0,
                                       const std::function<double(double)>& u0_prime,
                                       const PiecewiseConstantCoefficient& model, double t,
                                       double x, JumpCondition condition);

// Index of the irregular cell [x_{j-1}, x_j] containing alpha, with
// theta = (x_j - alpha)/dx in (0, 1]. An interface on a node yields
// theta = 1; the cell is still treated as irregular.
int interface_cell(const Grid& grid, double alpha);

}  // namespace cip
