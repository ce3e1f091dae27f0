#pragma once
#include <vector>

#include "cip/coefficients.hpp"
#include "cip/grid.hpp"

namespace cip {

// Controls for the adaptive embedded Runge-Kutta 2(3) pair
// (Bogacki-Shampine). The defaults keep the characteristic solve well below
// the schemes' truncation error.
struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    long max_steps = 10000000;
};

// Integrate dx/dt = c(x) forward from x_start over [0, dt].
double integrate_characteristic(const SmoothCoefficient& model, double x_start, double dt,
                                const OdeOptions& opts = {});

// Foot of the characteristic that reaches x_end after dt: returns x(0) of
// dx/dt = c(x(t)), x(dt) = x_end. dt is arbitrary; the foot may cross many
// cells.
double backtrack_foot(const SmoothCoefficient& model, double x_end, double dt,
                      const OdeOptions& opts = {});

struct FootPoint {
    double y = 0.0;      // upwind location, wrapped into [a, b)
    int cell_index = 1;  // j in 1..N with y in [x_{j-1}, x_j]
    double lambda = 0.0; // (x_j - y)/dx in [0, 1]
};

// Periodic wrap of y followed by cell location. If y coincides with a node
// within 1e-12*dx it is assigned to the cell on its right with lambda = 1;
// both adjacent profiles interpolate the same nodal data there, so the
// choice cannot change any update.
FootPoint locate_cell(const Grid& grid, double y);

// Feet for every node. For autonomous c and fixed dt the feet are
// time-independent, so computing them once per run is a pure optimization.
std::vector<FootPoint> backtrack_feet(const Grid& grid, const SmoothCoefficient& model, double dt,
                                      const OdeOptions& opts = {});

}  // namespace cip
