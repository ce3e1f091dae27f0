#include "cip/cip_smooth.hpp"

#include <cmath>
#include <string>

namespace cip {

namespace {

// Profile of the cell holding the foot, sampled at the foot (xi = 1 - lambda).
ProfileSample sample_at_foot(const FieldState& state, const Grid& grid, const FootPoint& foot) {
    int jm = grid.wrap(foot.cell_index - 1);
    int jp = grid.wrap(foot.cell_index);
    HermiteCell cell{grid.node(foot.cell_index - 1), grid.node(foot.cell_index),
                     state.u[jm],                    state.u[jp],
                     state.v[jm],                    state.v[jp]};
    return eval_profile_local(cell, 1.0 - foot.lambda);
}

void check_speed(double c, double x) {
    if (!(c > 0.0))
        throw numerical_error("smooth step: c(x) must be positive, got c(" + std::to_string(x) +
                              ") = " + std::to_string(c));
}

FieldState step_smooth(const FieldState& state, const Grid& grid, const SmoothCoefficient& model,
                       double dt, bool conservative, const std::vector<FootPoint>* feet,
                       const OdeOptions& opts) {
    FieldState next;
    next.time = state.time + dt;
    next.u.resize(grid.n_cells);
    next.v.resize(grid.n_cells);

    for (int k = 0; k < grid.n_cells; ++k) {
        double xk = grid.node(k);
        FootPoint foot = feet ? (*feet)[k] : locate_cell(grid, backtrack_foot(model, xk, dt, opts));
        double cx = model.c(xk);
        double cy = model.c(foot.y);
        check_speed(cx, xk);
        check_speed(cy, foot.y);

        ProfileSample s = sample_at_foot(state, grid, foot);
        double ratio = cy / cx;
        if (conservative) {
            double dc = (model.c_prime(foot.y) - model.c_prime(xk)) / cx;
            next.u[k] = ratio * s.value;
            next.v[k] = ratio * dc * s.value + ratio * ratio * s.derivative;
        } else {
            next.u[k] = s.value;
            next.v[k] = ratio * s.derivative;
        }
    }
    return next;
}

}  // namespace

FieldState step_advection(const FieldState& state, const Grid& grid, const SmoothCoefficient& model,
                          double dt, const std::vector<FootPoint>* feet, const OdeOptions& opts) {
    return step_smooth(state, grid, model, dt, true, feet, opts);
}

FieldState step_transport(const FieldState& state, const Grid& grid, const SmoothCoefficient& model,
                          double dt, const std::vector<FootPoint>* feet, const OdeOptions& opts) {
    return step_smooth(state, grid, model, dt, false, feet, opts);
}

FieldState step_constant(const FieldState& state, const Grid& grid, double c, double dt) {
    if (!(c > 0.0)) throw input_error("step_constant: c must be positive");

    // Foot x_k - c dt lies ell cells to the left with fractional offset lambda.
    double s = c * dt / grid.dx;
    int ell = static_cast<int>(std::floor(s));
    double lam = s - ell;

    HermiteBasis b = hermite_basis(1.0 - lam);
    HermiteBasis d = hermite_basis_derivative(1.0 - lam);

    FieldState next;
    next.time = state.time + dt;
    next.u.resize(grid.n_cells);
    next.v.resize(grid.n_cells);
    for (int k = 0; k < grid.n_cells; ++k) {
        int jm = grid.wrap(k - ell - 1);
        int jp = grid.wrap(k - ell);
        next.u[k] = state.u[jm] * b.p1 + state.u[jp] * b.p2 +
                    grid.dx * (state.v[jm] * b.q1 + state.v[jp] * b.q2);
        next.v[k] = (state.u[jm] * d.p1 + state.u[jp] * d.p2) / grid.dx + state.v[jm] * d.q1 +
                    state.v[jp] * d.q2;
    }
    return next;
}

FieldState step_legacy(const FieldState& state, const Grid& grid, const SmoothCoefficient& model,
                       double dt, LegacyVariant variant) {
    const int n = grid.n_cells;
    double cfl = 0.0;
    for (int k = 0; k < n; ++k) cfl = std::max(cfl, model.c(grid.node(k)) * dt / grid.dx);
    if (cfl > 1.0 + 1e-12)
        throw numerical_error(std::string("step_legacy(") +
                              (variant == LegacyVariant::sol1 ? "sol1" : "sol2") +
                              "): CFL = " + std::to_string(cfl) + " exceeds 1");
    if (variant == LegacyVariant::sol2 && !model.c_second)
        throw input_error("step_legacy(sol2): model.c_second is required");

    // Advection phase: sample the upwind profile at x* = x_k - c(x_k) dt.
    std::vector<double> us(n), vs(n);
    for (int k = 0; k < n; ++k) {
        double xs = grid.node(k) - model.c(grid.node(k)) * dt;
        FootPoint foot = locate_cell(grid, xs);
        ProfileSample s = sample_at_foot(state, grid, foot);
        us[k] = s.value;
        vs[k] = s.derivative;
    }

    FieldState next;
    next.time = state.time + dt;
    next.u.resize(n);
    next.v.resize(n);

    if (variant == LegacyVariant::sol1) {
        // Non-advection phase; the derivative picks up the centered difference
        // of the phase's change in u. Periodic wrap applies to both the
        // intermediate and the new values.
        std::vector<double> du(n);
        for (int k = 0; k < n; ++k) {
            next.u[k] = (1.0 - model.c_prime(grid.node(k)) * dt) * us[k];
            du[k] = next.u[k] - us[k];
        }
        for (int k = 0; k < n; ++k) {
            int kp = grid.wrap(k + 1), km = grid.wrap(k - 1);
            double c_diff = (model.c(grid.node(k) + grid.dx) - model.c(grid.node(k) - grid.dx)) /
                            (2.0 * grid.dx);
            next.v[k] = (1.0 - dt * c_diff) * vs[k] + (du[kp] - du[km]) / (2.0 * grid.dx);
        }
    } else {
        for (int k = 0; k < n; ++k) {
            double xk = grid.node(k);
            double decay = std::exp(-model.c_prime(xk) * dt);
            next.u[k] = decay * us[k];
            next.v[k] = -us[k] * model.c_second(xk) * dt + decay * vs[k];
        }
    }
    return next;
}

}  // namespace cip
