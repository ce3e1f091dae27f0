#include "cip/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cip {

namespace {

// One adaptive integration of dx/dt = sign * c(x) over [0, dt] with the
// Bogacki-Shampine 3(2) pair (FSAL).
double integrate(const SmoothCoefficient& model, double x0, double dt, double sign,
                 const OdeOptions& opts) {
    if (dt == 0.0) return x0;
    auto f = [&](double x) { return sign * model.c(x); };

    double t = 0.0;
    double x = x0;
    double h = dt / 10.0;
    double k1 = f(x);
    long steps = 0;

    while (t < dt) {
        h = std::min(h, dt - t);
        double k2 = f(x + 0.5 * h * k1);
        double k3 = f(x + 0.75 * h * k2);
        double x_new = x + h * (2.0 / 9.0 * k1 + 1.0 / 3.0 * k2 + 4.0 / 9.0 * k3);
        double k4 = f(x_new);
        double err = std::abs(h * (-5.0 / 72.0 * k1 + 1.0 / 12.0 * k2 + 1.0 / 9.0 * k3 -
                                   1.0 / 8.0 * k4));
        double tol = opts.abs_tol + opts.rel_tol * std::max(std::abs(x), std::abs(x_new));

        if (err <= tol) {
            t += h;
            x = x_new;
            k1 = k4;  // first-same-as-last
        }
        double factor = err > 0.0 ? 0.9 * std::cbrt(tol / err) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);

        if (h < 1e-14 * dt)
            throw numerical_error("characteristic integrator: step underflow at t = " +
                                  std::to_string(t) + ", x = " + std::to_string(x) +
                                  ", h = " + std::to_string(h));
        if (++steps > opts.max_steps)
            throw numerical_error("characteristic integrator: exceeded " +
                                  std::to_string(opts.max_steps) + " steps");
    }
    return x;
}

}  // namespace

double integrate_characteristic(const SmoothCoefficient& model, double x_start, double dt,
                                const OdeOptions& opts) {
    return integrate(model, x_start, dt, +1.0, opts);
}

double backtrack_foot(const SmoothCoefficient& model, double x_end, double dt,
                      const OdeOptions& opts) {
    // Reverse time: y solves dy/ds = -c(y) from x_end over [0, dt].
    return integrate(model, x_end, dt, -1.0, opts);
}

FootPoint locate_cell(const Grid& grid, double y) {
    double yw = grid.wrap_coord(y);
    double s = (yw - grid.a) / grid.dx;

    // Node coincidence within 1e-12*dx: take the cell on the right, lambda = 1.
    double r = std::round(s);
    if (std::abs(yw - (grid.a + r * grid.dx)) <= 1e-12 * grid.dx) {
        int m = static_cast<int>(r) % grid.n_cells;
        return {yw, m + 1, 1.0};
    }
    int j = static_cast<int>(std::ceil(s));
    j = std::clamp(j, 1, grid.n_cells);
    return {yw, j, static_cast<double>(j) - s};
}

std::vector<FootPoint> backtrack_feet(const Grid& grid, const SmoothCoefficient& model, double dt,
                                      const OdeOptions& opts) {
    std::vector<FootPoint> feet(grid.n_cells);
    for (int k = 0; k < grid.n_cells; ++k)
        feet[k] = locate_cell(grid, backtrack_foot(model, grid.node(k), dt, opts));
    return feet;
}

}  // namespace cip
