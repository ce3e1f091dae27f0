#pragma once
#include <array>
#include <complex>
#include <vector>

#include "cip/errors.hpp"

namespace cip {

using complexd = std::complex<double>;

// Dense complex 2x2, enough for the amplification analysis.
struct Mat2 {
    complexd m00, m01, m10, m11;

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
    complexd trace() const { return m00 + m11; }
    complexd det() const { return m00 * m11 - m01 * m10; }
};

// Largest singular value from the closed form for 2x2 matrices.
double spectral_norm(const Mat2& m);
// Spectral-norm condition number, sigma_max^2 / |det|.
double spectral_cond(const Mat2& m);

// The real one-step matrices acting on (u, dx*v):
//   A = [ (1-l)^2(1+2l)   -(1-l)^2 l  ]      B = [ l^2(3-2l)    l^2(1-l)  ]
//       [ 6l(1-l)         (1-l)(1-3l) ]          [ -6l(1-l)     (3l-2)l   ]
std::array<std::array<double, 2>, 2> stencil_matrix_a(double lam);
std::array<std::array<double, 2>, 2> stencil_matrix_b(double lam);

// Everything the eigenstructure of G(theta,lambda) = A + e^{-i theta} B
// exposes: characteristic-polynomial coefficients beta, gamma (p(z) =
// z^2 + beta z + gamma), eigenvalues ordered |rho1| <= |rho2|, the
// eigenvector matrix V with unit-2-norm columns, and the condition number
// M = ||V|| ||V^-1||.
struct AmplificationReport {
    double theta = 0.0;
    double lam = 0.0;
    std::array<std::array<double, 2>, 2> A{};
    std::array<std::array<double, 2>, 2> B{};
    Mat2 G{};
    complexd beta, gamma;
    complexd rho1, rho2;
    Mat2 V{};
    double M = 1.0;
};

AmplificationReport amplification(double theta, double lam);

// Closed forms used by the Schur test. kappa = lambda (1 - lambda).
double schur_q(double theta, double lam);  // |disc bracket|^2 form
double schur_f(double kappa, double theta);
double schur_g(double kappa, double theta);

struct SchurMargin {
    double kappa = 0.0;
    double q_value = 0.0;
    double f_value = 0.0;
    double g_value = 0.0;
    double gamma_abs = 0.0;
    double eta_abs = 0.0;
    bool stable = false;  // |gamma| < 1 and |eta| < 1
};

SchurMargin schur_margin(double theta, double lam);

struct ScanRow {
    double theta, lam, rho2_abs, M;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    double max_rho2 = 0.0;
    double max_m = 0.0;
    double argmax_m_theta = 0.0;
    double argmax_m_lambda = 0.0;
};

// Uniform (theta, lambda) grid over [0,2pi] x [0,1], endpoints included.
// Boundary points use the explicit factorizations (identity, pure phase,
// upper-triangular at theta = 0) instead of the generic eigendecomposition.
ScanResult condition_scan(int theta_samples, int lam_samples);

}  // namespace cip
