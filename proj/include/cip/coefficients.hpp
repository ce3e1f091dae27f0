#pragma once
#include <functional>

#include "cip/errors.hpp"

namespace cip {

// Smooth positive wave speed. c_prime must be the analytic derivative: the
// update formulas evaluate it at both ends of the characteristic and an
// internal difference of c would silently degrade the order. c_second is
// optional; only the sol2 legacy variant needs it.
struct SmoothCoefficient {
    std::function<double(double)> c;
    std::function<double(double)> c_prime;
    std::function<double(double)> c_second;
};

// Piecewise constant speed with a single jump at alpha: c_minus on x < alpha,
// c_plus on x > alpha.
struct PiecewiseConstantCoefficient {
    double alpha = 0.5;
    double c_minus = 1.0;
    double c_plus = 1.0;

    // A node sitting exactly on alpha takes the minus side: its backward
    // characteristic immediately enters the minus region.
    double speed_at(double x) const { return x <= alpha ? c_minus : c_plus; }
};

void validate(const PiecewiseConstantCoefficient& model, double domain_a, double domain_b);

}  // namespace cip
