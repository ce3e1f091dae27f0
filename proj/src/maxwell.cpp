#include "cip/maxwell.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "cip/iim.hpp"

namespace cip {

namespace {

// 5-point Gauss-Legendre abscissae/weights on [-1, 1].
constexpr double kGaussX[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
constexpr double kGaussW[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                               0.4786286704993665, 0.2369268850561891};

double cell_average(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += kGaussW[i] * f(mid + half * kGaussX[i]);
    return acc * half / (b - a);
}

struct SideMedia {
    double eps, mu;
};

// h(x) = a0 + eps a1 z + (mu eps) a2 z^2/2 + (mu eps^2) a3 z^3/6 on the given
// side, z = (x - alpha)/dx. The E polynomial is the same with eps and mu
// swapped.
ProfileSample eval_em_poly(const Vec4& a, double z, double dx, SideMedia s) {
    double me = s.mu * s.eps;
    double me2 = me * s.eps;
    double value = a[0] + s.eps * a[1] * z + me * a[2] * z * z / 2.0 + me2 * a[3] * z * z * z / 6.0;
    double deriv = (s.eps * a[1] + me * a[2] * z + me2 * a[3] * z * z / 2.0) / dx;
    return {value, deriv};
}

Vec4 em_rhs(const HermiteCell& cell) {
    double h = cell.dx();
    return {cell.u_right, h * cell.v_right, cell.u_left, h * cell.v_left};
}

void check_cfl(double c, double dt, double dx, const std::string& who) {
    if (c * dt > dx * (1.0 + 1e-12))
        throw numerical_error(who + ": CFL violation, c * dt = " + std::to_string(c * dt) +
                              " exceeds dx = " + std::to_string(dx));
}

HermiteCell field_cell(const Grid& grid, const std::vector<double>& f,
                       const std::vector<double>& df, int j) {
    // Cell [x_{j-1}, x_j] with periodic data.
    int jm = grid.wrap(j - 1), jp = grid.wrap(j);
    return {grid.node(j - 1), grid.node(j), f[jm], f[jp], df[jm], df[jp]};
}

}  // namespace

double ConstantMedia::speed() const { return 1.0 / std::sqrt(mu * eps); }
double ConstantMedia::impedance() const { return std::sqrt(mu / eps); }
double InterfaceMedia::speed_minus() const { return 1.0 / std::sqrt(mu_minus * eps_minus); }
double InterfaceMedia::speed_plus() const { return 1.0 / std::sqrt(mu_plus * eps_plus); }

EMState init_em_state(const Grid& grid, const std::function<double(double)>& H0,
                      const std::function<double(double)>& E0) {
    EMState s;
    s.time = 0.0;
    int n = grid.n_cells;
    s.H.resize(n);
    s.E.resize(n);
    s.DH.resize(n);
    s.DE.resize(n);
    for (int k = 0; k < n; ++k) {
        s.H[k] = H0(grid.node(k));
        s.E[k] = E0(grid.node(k));
        if (!std::isfinite(s.H[k]) || !std::isfinite(s.E[k]))
            throw input_error("init_em_state: initial data not finite");
    }
    for (int k = 0; k < n; ++k) {
        int kp = grid.wrap(k + 1), km = grid.wrap(k - 1);
        s.DH[k] = (s.H[kp] - s.H[km]) / (2.0 * grid.dx);
        s.DE[k] = (s.E[kp] - s.E[km]) / (2.0 * grid.dx);
    }
    return s;
}

EMState init_em_state(const Grid& grid, const std::function<double(double)>& H0,
                      const std::function<double(double)>& H0_prime,
                      const std::function<double(double)>& E0,
                      const std::function<double(double)>& E0_prime) {
    EMState s;
    s.time = 0.0;
    int n = grid.n_cells;
    s.H.resize(n);
    s.E.resize(n);
    s.DH.resize(n);
    s.DE.resize(n);
    for (int k = 0; k < n; ++k) {
        double x = grid.node(k);
        s.H[k] = H0(x);
        s.DH[k] = H0_prime(x);
        s.E[k] = E0(x);
        s.DE[k] = E0_prime(x);
        if (!std::isfinite(s.H[k]) || !std::isfinite(s.DH[k]) || !std::isfinite(s.E[k]) ||
            !std::isfinite(s.DE[k]))
            throw input_error("init_em_state: initial data not finite");
    }
    return s;
}

CellAveragedMedia cell_average_media(const std::function<double(double)>& eps_fn,
                                     const std::function<double(double)>& mu_fn,
                                     const Grid& grid) {
    CellAveragedMedia m;
    int n = grid.n_cells;
    m.eps_bar.resize(n);
    m.mu_bar.resize(n);
    m.c_bar.resize(n);
    for (int j = 0; j < n; ++j) {
        double lo = grid.node(j) - 0.5 * grid.dx;
        double hi = grid.node(j) + 0.5 * grid.dx;
        m.eps_bar[j] = cell_average(eps_fn, lo, hi);
        m.mu_bar[j] = cell_average(mu_fn, lo, hi);
        if (!(m.eps_bar[j] > 0.0) || !(m.mu_bar[j] > 0.0))
            throw input_error("cell_average_media: non-positive average in patch " +
                              std::to_string(j));
        m.c_bar[j] = 1.0 / std::sqrt(m.eps_bar[j] * m.mu_bar[j]);
    }
    return m;
}

EMState step_maxwell_constant(const EMState& state, const Grid& grid, const ConstantMedia& media,
                              double dt) {
    double c = media.speed();
    check_cfl(c, dt, grid.dx, "step_maxwell_constant");
    double lam = c * dt / grid.dx;

    int n = grid.n_cells;
    EMState next;
    next.time = state.time + dt;
    next.H.resize(n);
    next.E.resize(n);
    next.DH.resize(n);
    next.DE.resize(n);

    for (int k = 0; k < n; ++k) {
        // Backward foot in [x_{k-1}, x_k], forward foot in [x_k, x_{k+1}].
        ProfileSample hb = eval_profile_local(field_cell(grid, state.H, state.DH, k), 1.0 - lam);
        ProfileSample hf = eval_profile_local(field_cell(grid, state.H, state.DH, k + 1), lam);
        ProfileSample eb = eval_profile_local(field_cell(grid, state.E, state.DE, k), 1.0 - lam);
        ProfileSample ef = eval_profile_local(field_cell(grid, state.E, state.DE, k + 1), lam);

        next.H[k] = 0.5 * (hb.value + hf.value) - (eb.value - ef.value) / (2.0 * c * media.mu);
        next.E[k] = 0.5 * (eb.value + ef.value) - (hb.value - hf.value) / (2.0 * c * media.eps);
        next.DH[k] =
            0.5 * (hb.derivative + hf.derivative) - (eb.derivative - ef.derivative) / (2.0 * c * media.mu);
        next.DE[k] =
            0.5 * (eb.derivative + ef.derivative) - (hb.derivative - hf.derivative) / (2.0 * c * media.eps);
    }
    return next;
}

Mat4 em_interface_matrix(double theta, double eps_minus, double eps_plus, double mu_minus,
                         double mu_plus) {
    Mat4 A{};
    auto fill = [&A](int value_row, int deriv_row, double t, double e, double m) {
        double me = m * e, me2 = m * e * e;
        A[value_row] = {1.0, e * t, me * t * t / 2.0, me2 * t * t * t / 6.0};
        A[deriv_row] = {0.0, e, me * t, me2 * t * t / 2.0};
    };
    fill(0, 1, theta, eps_plus, mu_plus);
    fill(2, 3, theta - 1.0, eps_minus, mu_minus);
    return A;
}

EMInterfaceProfiles build_em_interface_polynomials(const HermiteCell& h_cell,
                                                   const HermiteCell& e_cell, double alpha,
                                                   double eps_minus, double eps_plus,
                                                   double mu_minus, double mu_plus) {
    if (!(eps_minus > 0.0) || !(eps_plus > 0.0) || !(mu_minus > 0.0) || !(mu_plus > 0.0))
        throw input_error("em interface polynomials: media must be positive");

    EMInterfaceProfiles p;
    p.alpha = alpha;
    p.dx = h_cell.dx();
    p.x_left = h_cell.x_left;
    p.x_right = h_cell.x_right;
    p.theta = (h_cell.x_right - alpha) / p.dx;
    p.eps_minus = eps_minus;
    p.eps_plus = eps_plus;
    p.mu_minus = mu_minus;
    p.mu_plus = mu_plus;

    Lu4 h_lu = lu_factor(em_interface_matrix(p.theta, eps_minus, eps_plus, mu_minus, mu_plus));
    Lu4 e_lu = lu_factor(em_interface_matrix(p.theta, mu_minus, mu_plus, eps_minus, eps_plus));
    if (!(std::abs(h_lu.det) > 1e-300) || !(std::abs(e_lu.det) > 1e-300))
        throw numerical_error("em interface polynomials: singular interpolation system");

    p.a = lu_solve(h_lu, em_rhs(h_cell));
    p.b = lu_solve(e_lu, em_rhs(e_cell));
    return p;
}

ProfileSample eval_em_h(const EMInterfaceProfiles& p, double x, bool plus_side) {
    SideMedia s = plus_side ? SideMedia{p.eps_plus, p.mu_plus} : SideMedia{p.eps_minus, p.mu_minus};
    return eval_em_poly(p.a, (x - p.alpha) / p.dx, p.dx, s);
}

ProfileSample eval_em_e(const EMInterfaceProfiles& p, double x, bool plus_side) {
    // Dual expansion: roles of eps and mu swapped.
    SideMedia s = plus_side ? SideMedia{p.mu_plus, p.eps_plus} : SideMedia{p.mu_minus, p.eps_minus};
    return eval_em_poly(p.b, (x - p.alpha) / p.dx, p.dx, s);
}

EMState step_maxwell_interface(const EMState& state, const Grid& grid, const InterfaceMedia& media,
                               double dt) {
    double cm = media.speed_minus(), cp = media.speed_plus();
    check_cfl(std::max(cm, cp), dt, grid.dx, "step_maxwell_interface");

    const int n = grid.n_cells;
    int j_int = interface_cell(grid, media.alpha);
    int irr_right = grid.wrap(j_int);
    int irr_left = grid.wrap(j_int - 1);

    EMInterfaceProfiles prof = build_em_interface_polynomials(
        field_cell(grid, state.H, state.DH, j_int), field_cell(grid, state.E, state.DE, j_int),
        media.alpha, media.eps_minus, media.eps_plus, media.mu_minus, media.mu_plus);

    EMState next;
    next.time = state.time + dt;
    next.H.resize(n);
    next.E.resize(n);
    next.DH.resize(n);
    next.DE.resize(n);

    for (int k = 0; k < n; ++k) {
        double xk = grid.node(k);
        double c, mu, eps;
        ProfileSample hb, hf, eb, ef;

        if (k == irr_right) {
            c = cp;
            mu = media.mu_plus;
            eps = media.eps_plus;
            double x_un = grid.node(j_int);
            hb = eval_em_h(prof, x_un - c * dt, true);
            eb = eval_em_e(prof, x_un - c * dt, true);
            hf = eval_profile_local(field_cell(grid, state.H, state.DH, j_int + 1), c * dt / grid.dx);
            ef = eval_profile_local(field_cell(grid, state.E, state.DE, j_int + 1), c * dt / grid.dx);
        } else if (k == irr_left) {
            c = cm;
            mu = media.mu_minus;
            eps = media.eps_minus;
            double x_un = grid.node(j_int - 1);
            hb = eval_profile_local(field_cell(grid, state.H, state.DH, j_int - 1),
                                    1.0 - c * dt / grid.dx);
            eb = eval_profile_local(field_cell(grid, state.E, state.DE, j_int - 1),
                                    1.0 - c * dt / grid.dx);
            hf = eval_em_h(prof, x_un + c * dt, false);
            ef = eval_em_e(prof, x_un + c * dt, false);
        } else {
            bool minus_side = xk < media.alpha;
            c = minus_side ? cm : cp;
            mu = minus_side ? media.mu_minus : media.mu_plus;
            eps = minus_side ? media.eps_minus : media.eps_plus;
            double lam = c * dt / grid.dx;
            hb = eval_profile_local(field_cell(grid, state.H, state.DH, k), 1.0 - lam);
            eb = eval_profile_local(field_cell(grid, state.E, state.DE, k), 1.0 - lam);
            hf = eval_profile_local(field_cell(grid, state.H, state.DH, k + 1), lam);
            ef = eval_profile_local(field_cell(grid, state.E, state.DE, k + 1), lam);
        }

        next.H[k] = 0.5 * (hb.value + hf.value) - (eb.value - ef.value) / (2.0 * c * mu);
        next.E[k] = 0.5 * (eb.value + ef.value) - (hb.value - hf.value) / (2.0 * c * eps);
        next.DH[k] = 0.5 * (hb.derivative + hf.derivative) -
                     (eb.derivative - ef.derivative) / (2.0 * c * mu);
        next.DE[k] = 0.5 * (eb.derivative + ef.derivative) -
                     (hb.derivative - hf.derivative) / (2.0 * c * eps);
    }
    return next;
}

VariableMediaWorkspace::VariableMediaWorkspace(const Grid& grid, const CellAveragedMedia& media)
    : media_(media) {
    int n = grid.n_cells;
    h_lu_.resize(n);
    e_lu_.resize(n);
    for (int j = 0; j < n; ++j) {
        // Cell [x_{j-1}, x_j]: minus side is patch j-1, plus side patch j,
        // jump at the cell midpoint (theta = 1/2).
        int jm = grid.wrap(j - 1);
        h_lu_[j] = lu_factor(em_interface_matrix(0.5, media.eps_bar[jm], media.eps_bar[j],
                                                 media.mu_bar[jm], media.mu_bar[j]));
        e_lu_[j] = lu_factor(em_interface_matrix(0.5, media.mu_bar[jm], media.mu_bar[j],
                                                 media.eps_bar[jm], media.eps_bar[j]));
        if (!(std::abs(h_lu_[j].det) > 1e-300) || !(std::abs(e_lu_[j].det) > 1e-300))
            throw numerical_error("variable media: singular interpolation system in cell " +
                                  std::to_string(j));
    }
}

EMState step_maxwell_variable(const EMState& state, const Grid& grid,
                              const CellAveragedMedia& media, double dt,
                              const VariableMediaWorkspace* workspace) {
    const int n = grid.n_cells;
    int fastest = 0;
    for (int j = 1; j < n; ++j)
        if (media.c_bar[j] > media.c_bar[fastest]) fastest = j;
    if (media.c_bar[fastest] * dt > grid.dx * (1.0 + 1e-12))
        throw numerical_error("step_maxwell_variable: CFL violation in patch " +
                              std::to_string(fastest) +
                              ", c * dt = " + std::to_string(media.c_bar[fastest] * dt));

    std::optional<VariableMediaWorkspace> local_ws;
    if (!workspace) local_ws.emplace(grid, media);
    const VariableMediaWorkspace& ws = workspace ? *workspace : *local_ws;

    // Per-cell coefficient vectors for this time level.
    std::vector<Vec4> ah(n), be(n);
    for (int j = 0; j < n; ++j) {
        ah[j] = lu_solve(ws.h_system(j), em_rhs(field_cell(grid, state.H, state.DH, j)));
        be[j] = lu_solve(ws.e_system(j), em_rhs(field_cell(grid, state.E, state.DE, j)));
    }

    EMState next;
    next.time = state.time + dt;
    next.H.resize(n);
    next.E.resize(n);
    next.DH.resize(n);
    next.DE.resize(n);

    for (int j = 0; j < n; ++j) {
        double c = media.c_bar[j];
        double mu = media.mu_bar[j];
        double eps = media.eps_bar[j];
        SideMedia own{eps, mu};
        SideMedia own_e{mu, eps};

        // Both feet stay inside patch j: plus side of the left cell, minus
        // side of the right cell, z measured from each cell's midpoint.
        double zb = 0.5 - c * dt / grid.dx;
        double zf = c * dt / grid.dx - 0.5;
        int jr = grid.wrap(j + 1);

        ProfileSample hb = eval_em_poly(ah[j], zb, grid.dx, own);
        ProfileSample eb = eval_em_poly(be[j], zb, grid.dx, own_e);
        ProfileSample hf = eval_em_poly(ah[jr], zf, grid.dx, own);
        ProfileSample ef = eval_em_poly(be[jr], zf, grid.dx, own_e);

        next.H[j] = 0.5 * (hb.value + hf.value) - (eb.value - ef.value) / (2.0 * c * mu);
        next.E[j] = 0.5 * (eb.value + ef.value) - (hb.value - hf.value) / (2.0 * c * eps);
        next.DH[j] = 0.5 * (hb.derivative + hf.derivative) -
                     (eb.derivative - ef.derivative) / (2.0 * c * mu);
        next.DE[j] = 0.5 * (eb.derivative + ef.derivative) -
                     (hb.derivative - hf.derivative) / (2.0 * c * eps);
    }
    return next;
}

}  // namespace cip
