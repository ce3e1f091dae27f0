#pragma once
#include <functional>
#include <vector>

#include "cip/errors.hpp"

namespace cip {

// Uniform periodic mesh on [a,b]: nodes x_k = a + k*dx for k = 0..n_cells-1,
// with x_{n_cells} identified with x_0. Cell j (j = 1..n_cells) is
// [x_{j-1}, x_j] in unwrapped coordinates.
struct Grid {
    int n_cells = 0;
    double a = 0.0;
    double b = 1.0;
    double dx = 0.0;

    int wrap(int k) const {
        int m = k % n_cells;
        return m < 0 ? m + n_cells : m;
    }
    // Unwrapped coordinate of node k (k may be any integer).
    double node(int k) const { return a + k * dx; }
    double length() const { return b - a; }
    // Map x into [a, b).
    double wrap_coord(double x) const;
};

// n_cells >= 4: the cubic profiles need distinct neighbor cells.
Grid build_grid(int n_cells, double a, double b);

// Two-moment nodal state: solution values u and derivative values v at one
// time level.
struct FieldState {
    double time = 0.0;
    std::vector<double> u;
    std::vector<double> v;
};

enum class DerivativeInit { central_difference, analytic };

// v from the second-order periodic central difference of u.
FieldState init_state(const Grid& grid, const std::function<double(double)>& u0);

// v from the analytic derivative u0'.
FieldState init_state(const Grid& grid, const std::function<double(double)>& u0,
                      const std::function<double(double)>& u0_prime);

}  // namespace cip
