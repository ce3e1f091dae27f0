#pragma once
#include "cip/errors.hpp"

namespace cip {

// Values of the four cubic Hermite basis polynomials at local coordinate xi:
//   p1 = (xi-1)^2 (2 xi + 1),  p2 = xi^2 (3 - 2 xi),
//   q1 = (xi-1)^2 xi,          q2 = xi^2 (xi - 1).
struct HermiteBasis {
    double p1, p2, q1, q2;
};

HermiteBasis hermite_basis(double xi);
HermiteBasis hermite_basis_derivative(double xi);

// One cell of endpoint data. The cubic H interpolates u at both endpoints and
// H' interpolates v:
//   H(x) = u_left p1(xi) + u_right p2(xi) + dx [v_left q1(xi) + v_right q2(xi)],
// with xi = (x - x_left)/dx. Evaluation stays in the local coordinate; no
// monomial re-expansion (avoids cancellation for small dx).
struct HermiteCell {
    double x_left = 0.0, x_right = 1.0;
    double u_left = 0.0, u_right = 0.0;
    double v_left = 0.0, v_right = 0.0;

    double dx() const { return x_right - x_left; }
};

struct ProfileSample {
    double value;
    double derivative;
};

// Evaluate the cell's cubic and its analytic derivative at x. x may exceed
// the cell by at most 1e-12*dx; characteristic feet can land on a node
// boundary within rounding.
ProfileSample eval_profile(const HermiteCell& cell, double x);

// Same evaluation addressed by the local coordinate, no range check. The
// steppers use this with xi already reduced to [0,1].
ProfileSample eval_profile_local(const HermiteCell& cell, double xi);

}  // namespace cip
