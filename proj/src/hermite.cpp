#include "cip/hermite.hpp"

#include <cmath>
#include <string>

namespace cip {

HermiteBasis hermite_basis(double xi) {
    double m = xi - 1.0;
    return {m * m * (2.0 * xi + 1.0), xi * xi * (3.0 - 2.0 * xi), m * m * xi, xi * xi * m};
}

HermiteBasis hermite_basis_derivative(double xi) {
    return {6.0 * xi * (xi - 1.0), 6.0 * xi * (1.0 - xi), (xi - 1.0) * (3.0 * xi - 1.0),
            xi * (3.0 * xi - 2.0)};
}

ProfileSample eval_profile_local(const HermiteCell& cell, double xi) {
    HermiteBasis b = hermite_basis(xi);
    HermiteBasis d = hermite_basis_derivative(xi);
    double h = cell.dx();
    double value = cell.u_left * b.p1 + cell.u_right * b.p2 +
                   h * (cell.v_left * b.q1 + cell.v_right * b.q2);
    double derivative = (cell.u_left * d.p1 + cell.u_right * d.p2) / h + cell.v_left * d.q1 +
                        cell.v_right * d.q2;
    return {value, derivative};
}

ProfileSample eval_profile(const HermiteCell& cell, double x) {
    double h = cell.dx();
    double tol = 1e-12 * h;
    if (x < cell.x_left - tol || x > cell.x_right + tol)
        throw input_error("eval_profile: x = " + std::to_string(x) + " outside cell [" +
                          std::to_string(cell.x_left) + ", " + std::to_string(cell.x_right) + "]");
    return eval_profile_local(cell, (x - cell.x_left) / h);
}

}  // namespace cip
