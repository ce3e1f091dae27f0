#include "cip/stability.hpp"

#include <cmath>
#include <limits>

namespace cip {

namespace {

double frobenius_sq(const Mat2& m) {
    return std::norm(m.m00) + std::norm(m.m01) + std::norm(m.m10) + std::norm(m.m11);
}

complexd unit_phase(double theta) { return {std::cos(theta), -std::sin(theta)}; }  // e^{-i theta}

// Unit eigenvector of G for eigenvalue rho, picking the better-conditioned of
// the two row candidates.
std::array<complexd, 2> eigenvector(const Mat2& g, complexd rho) {
    std::array<complexd, 2> v1 = {g.m01, rho - g.m00};
    std::array<complexd, 2> v2 = {rho - g.m11, g.m10};
    double n1 = std::sqrt(std::norm(v1[0]) + std::norm(v1[1]));
    double n2 = std::sqrt(std::norm(v2[0]) + std::norm(v2[1]));
    auto& v = n1 >= n2 ? v1 : v2;
    double n = std::max(n1, n2);
    return {v[0] / n, v[1] / n};
}

}  // namespace

double spectral_norm(const Mat2& m) {
    double f = frobenius_sq(m);
    double d = std::abs(m.det());
    double disc = f * f - 4.0 * d * d;
    if (disc < 0.0) disc = 0.0;  // rounding
    return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

double spectral_cond(const Mat2& m) {
    double d = std::abs(m.det());
    if (d == 0.0) return std::numeric_limits<double>::infinity();
    double smax = spectral_norm(m);
    return smax * smax / d;  // sigma_max * sigma_min = |det|
}

std::array<std::array<double, 2>, 2> stencil_matrix_a(double lam) {
    double om = 1.0 - lam;
    return {{{om * om * (1.0 + 2.0 * lam), -om * om * lam},
             {6.0 * lam * om, om * (1.0 - 3.0 * lam)}}};
}

std::array<std::array<double, 2>, 2> stencil_matrix_b(double lam) {
    double om = 1.0 - lam;
    return {{{lam * lam * (3.0 - 2.0 * lam), lam * lam * om},
             {-6.0 * lam * om, (3.0 * lam - 2.0) * lam}}};
}

AmplificationReport amplification(double theta, double lam) {
    AmplificationReport r;
    r.theta = theta;
    r.lam = lam;
    r.A = stencil_matrix_a(lam);
    r.B = stencil_matrix_b(lam);

    complexd e = unit_phase(theta);
    r.G = {r.A[0][0] + e * r.B[0][0], r.A[0][1] + e * r.B[0][1], r.A[1][0] + e * r.B[1][0],
           r.A[1][1] + e * r.B[1][1]};

    // Closed forms for p(z) = z^2 + beta z + gamma.
    double l = lam, l2 = lam * lam, l3 = l2 * lam, l4 = l2 * l2;
    double om = 1.0 - lam;
    r.beta = 2.0 * (e * (l * (1.0 - 3.0 * l + l2)) - (1.0 - 2.0 * l + l3));
    r.gamma = om * om * om * om + e * e * l4 - 2.0 * e * (l * (1.0 - 2.0 * l2 + l3));

    bool lam_boundary = lam <= 0.0 || lam >= 1.0;
    bool theta_boundary = std::abs(std::sin(theta)) < 1e-15 && std::cos(theta) > 0.0;

    if (lam_boundary) {
        // G is the identity (lam = 0) or a pure phase (lam = 1).
        complexd rho = lam >= 1.0 ? e : complexd{1.0, 0.0};
        r.rho1 = r.rho2 = rho;
        r.V = {1.0, 0.0, 0.0, 1.0};
        r.M = 1.0;
        return r;
    }

    if (theta_boundary) {
        // Explicit upper-triangular factorization at theta = 0 (mod 2pi):
        // eigenvalues 1 and 1 - 6 lam + 6 lam^2, eigenvectors (1,0) and
        // (-(1-2 lam)/6, 1), columns normalized.
        double rho_small = 1.0 - 6.0 * lam + 6.0 * l2;
        r.rho1 = complexd{rho_small, 0.0};
        r.rho2 = complexd{1.0, 0.0};
        if (std::abs(rho_small) > 1.0) std::swap(r.rho1, r.rho2);
        double w = (1.0 - 2.0 * lam) / 6.0;
        double nw = std::sqrt(1.0 + w * w);
        Mat2 v{1.0, -w / nw, 0.0, 1.0 / nw};
        // Column order follows the eigenvalue order.
        if (std::abs(rho_small) > 1.0) v = {-w / nw, 1.0, 1.0 / nw, 0.0};
        r.V = v;
        r.M = spectral_cond(v);
        return r;
    }

    complexd disc = std::sqrt(r.beta * r.beta - 4.0 * r.gamma);
    complexd ra = (-r.beta + disc) / 2.0;
    complexd rb = (-r.beta - disc) / 2.0;
    if (std::abs(ra) > std::abs(rb)) std::swap(ra, rb);
    r.rho1 = ra;
    r.rho2 = rb;

    auto v1 = eigenvector(r.G, r.rho1);
    auto v2 = eigenvector(r.G, r.rho2);
    r.V = {v1[0], v2[0], v1[1], v2[1]};
    r.M = spectral_cond(r.V);
    return r;
}

double schur_q(double theta, double lam) {
    double re = 2.0 * (5.0 + lam - lam * lam) + (-1.0 - 2.0 * lam + 2.0 * lam * lam) * std::cos(theta);
    double im = 3.0 * (-1.0 + 2.0 * lam) * std::sin(theta);
    return re * re + im * im;
}

double schur_f(double kappa, double theta) {
    double k = kappa, k2 = k * k, k3 = k2 * k;
    double ct = std::cos(theta);
    return 2.0 - 6.0 * k + 2.0 * k2 - k3 + (1.0 - 3.0 * k - 2.0 * k2 + 2.0 * k3) * ct -
           k3 * ct * ct;
}

double schur_g(double kappa, double theta) {
    double k = kappa, k2 = k * k, k3 = k2 * k, k4 = k2 * k2;
    double ct = std::cos(theta);
    return 3.0 - 12.0 * k + 11.0 * k2 - 2.0 * k3 + k4 - 2.0 * k2 * (1.0 - k + k2) * ct +
           2.0 * k4 * ct * ct;
}

SchurMargin schur_margin(double theta, double lam) {
    SchurMargin m;
    m.kappa = lam * (1.0 - lam);
    m.q_value = schur_q(theta, lam);
    m.f_value = schur_f(m.kappa, theta);
    m.g_value = schur_g(m.kappa, theta);

    AmplificationReport r = amplification(theta, lam);
    m.gamma_abs = std::abs(r.gamma);

    // Reduced polynomial p1(z) = (1 - |gamma|^2) z + (beta - gamma conj(beta)).
    double denom = 1.0 - m.gamma_abs * m.gamma_abs;
    complexd num = r.beta - r.gamma * std::conj(r.beta);
    m.eta_abs = denom != 0.0 ? std::abs(num) / std::abs(denom)
                             : std::numeric_limits<double>::infinity();
    m.stable = m.gamma_abs < 1.0 && m.eta_abs < 1.0;
    return m;
}

ScanResult condition_scan(int theta_samples, int lam_samples) {
    if (theta_samples < 8 || lam_samples < 8)
        throw input_error("condition_scan: sample counts must be >= 8");

    ScanResult out;
    out.rows.reserve(static_cast<size_t>(theta_samples) * lam_samples);
    const double two_pi = 2.0 * std::acos(-1.0);
    for (int i = 0; i < theta_samples; ++i) {
        double theta = two_pi * i / (theta_samples - 1);
        for (int j = 0; j < lam_samples; ++j) {
            double lam = static_cast<double>(j) / (lam_samples - 1);
            AmplificationReport r = amplification(theta, lam);
            double rho2 = std::abs(r.rho2);
            out.rows.push_back({theta, lam, rho2, r.M});
            out.max_rho2 = std::max(out.max_rho2, rho2);
            if (r.M > out.max_m) {
                out.max_m = r.M;
                out.argmax_m_theta = theta;
                out.argmax_m_lambda = lam;
            }
        }
    }
    return out;
}

}  // namespace cip
