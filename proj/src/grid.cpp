#include "cip/grid.hpp"

#include <cmath>

#include "cip/coefficients.hpp"

namespace cip {

double Grid::wrap_coord(double x) const {
    double s = x - a;
    double l = length();
    double w = s - std::floor(s / l) * l;
    if (w >= l) w = 0.0;  // floor rounding can land exactly on l
    return a + w;
}

Grid build_grid(int n_cells, double a, double b) {
    if (n_cells < 4)
        throw input_error("build_grid: n_cells must be >= 4, got " + std::to_string(n_cells));
    if (!(b > a)) throw input_error("build_grid: empty domain [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "]");
    Grid g;
    g.n_cells = n_cells;
    g.a = a;
    g.b = b;
    g.dx = (b - a) / n_cells;
    return g;
}

FieldState init_state(const Grid& grid, const std::function<double(double)>& u0) {
    FieldState s;
    s.time = 0.0;
    s.u.resize(grid.n_cells);
    s.v.resize(grid.n_cells);
    for (int k = 0; k < grid.n_cells; ++k) {
        s.u[k] = u0(grid.node(k));
        if (!std::isfinite(s.u[k]))
            throw input_error("init_state: u0 not finite at x = " + std::to_string(grid.node(k)));
    }
    for (int k = 0; k < grid.n_cells; ++k) {
        int kp = grid.wrap(k + 1), km = grid.wrap(k - 1);
        s.v[k] = (s.u[kp] - s.u[km]) / (2.0 * grid.dx);
    }
    return s;
}

FieldState init_state(const Grid& grid, const std::function<double(double)>& u0,
                      const std::function<double(double)>& u0_prime) {
    FieldState s;
    s.time = 0.0;
    s.u.resize(grid.n_cells);
    s.v.resize(grid.n_cells);
    for (int k = 0; k < grid.n_cells; ++k) {
        double x = grid.node(k);
        s.u[k] = u0(x);
        s.v[k] = u0_prime(x);
        if (!std::isfinite(s.u[k]) || !std::isfinite(s.v[k]))
            throw input_error("init_state: initial data not finite at x = " + std::to_string(x));
    }
    return s;
}

void validate(const PiecewiseConstantCoefficient& model, double domain_a, double domain_b) {
    if (!(model.c_minus > 0.0) || !(model.c_plus > 0.0))
        throw input_error("piecewise coefficient: speeds must be positive");
    if (!(model.alpha > domain_a) || !(model.alpha < domain_b))
        throw input_error("piecewise coefficient: alpha must lie inside the domain interior");
}

}  // namespace cip
