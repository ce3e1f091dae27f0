#include "cip/iim.hpp"

#include <cmath>
#include <string>

namespace cip {

namespace {

// Rows of the interpolation system in the paper-normalized form: the value
// row is [1, t, t^2/2, t^3/6] and the derivative row [0, 1, t, t^2/2] with
// t = theta/c+ (plus side) or (theta-1)/c- (minus side). The right-hand side
// carries the matching c factors so the solution satisfies the raw
// interpolation conditions H(x) = u, H_x(x) = v.
void fill_rows(Mat4& A, int value_row, int deriv_row, double t) {
    A[value_row] = {1.0, t, t * t / 2.0, t * t * t / 6.0};
    A[deriv_row] = {0.0, 1.0, t, t * t / 2.0};
}

}  // namespace

int interface_cell(const Grid& grid, double alpha) {
    double s = (alpha - grid.a) / grid.dx;
    double r = std::round(s);
    if (std::abs(alpha - grid.node(static_cast<int>(r))) <= 1e-12 * grid.dx)
        return static_cast<int>(r) + 1;  // interface on a node: theta = 1
    return static_cast<int>(std::floor(s)) + 1;
}

IIMProfile build_interface_polynomial(const HermiteCell& cell, double alpha, double c_minus,
                                      double c_plus, JumpCondition condition) {
    if (!(c_minus > 0.0) || !(c_plus > 0.0))
        throw input_error("interface polynomial: speeds must be positive");
    if (alpha < cell.x_left - 1e-12 * cell.dx() || alpha > cell.x_right + 1e-12 * cell.dx())
        throw input_error("interface polynomial: alpha outside the cell");

    IIMProfile p;
    p.alpha = alpha;
    p.c_minus = c_minus;
    p.c_plus = c_plus;
    p.x_left = cell.x_left;
    p.x_right = cell.x_right;
    p.dx = cell.dx();
    p.theta = (cell.x_right - alpha) / p.dx;
    p.condition = condition;

    fill_rows(p.A, 0, 1, p.theta / c_plus);
    fill_rows(p.A, 2, 3, (p.theta - 1.0) / c_minus);

    double h = p.dx;
    if (condition == JumpCondition::jump_u) {
        p.f = {cell.u_right, c_plus * h * cell.v_right, cell.u_left, c_minus * h * cell.v_left};
    } else {
        p.f = {c_plus * cell.u_right, c_plus * c_plus * h * cell.v_right, c_minus * cell.u_left,
               c_minus * c_minus * h * cell.v_left};
    }

    Lu4 lu = lu_factor(p.A);
    p.det_a = lu.det;
    if (!(std::abs(lu.det) > 1e-300))
        throw numerical_error("interface polynomial: singular interpolation system, det = " +
                              std::to_string(lu.det));
    p.a = lu_solve(lu, p.f);
    return p;
}

ProfileSample eval_interface_polynomial(const IIMProfile& p, double x, Side side) {
    bool plus;
    switch (side) {
        case Side::plus_side: plus = true; break;
        case Side::minus_side: plus = false; break;
        default: {
            if (x == p.alpha)
                throw input_error("eval_interface_polynomial: x = alpha needs an explicit side");
            plus = x > p.alpha;
        }
    }
    double c = plus ? p.c_plus : p.c_minus;
    double z = (x - p.alpha) / (c * p.dx);
    double value = p.a[0] + p.a[1] * z + p.a[2] * z * z / 2.0 + p.a[3] * z * z * z / 6.0;
    double deriv = (p.a[1] + p.a[2] * z + p.a[3] * z * z / 2.0) / (c * p.dx);
    if (p.condition == JumpCondition::jump_cu) {
        value /= c;
        deriv /= c;
    }
    return {value, deriv};
}

ProfileSample irregular_left_update(const IIMProfile& p, double dt) {
    return eval_interface_polynomial(p, p.x_left + p.c_minus * dt, Side::minus_side);
}

FieldState step_discontinuous(const FieldState& state, const Grid& grid,
                              const PiecewiseConstantCoefficient& model, double dt,
                              JumpCondition condition) {
    validate(model, grid.a, grid.b);
    double c_max = std::max(model.c_minus, model.c_plus);
    if (c_max * dt > grid.dx * (1.0 + 1e-12))
        throw numerical_error("step_discontinuous: CFL violation, " +
                              std::string(model.c_plus >= model.c_minus ? "c_plus" : "c_minus") +
                              " * dt = " + std::to_string(c_max * dt) + " exceeds dx");

    const int n = grid.n_cells;
    int j_int = interface_cell(grid, model.alpha);
    int irregular = grid.wrap(j_int);

    int jm = grid.wrap(j_int - 1);
    HermiteCell icell{grid.node(j_int - 1), grid.node(j_int), state.u[jm], state.u[irregular],
                      state.v[jm],          state.v[irregular]};
    IIMProfile profile =
        build_interface_polynomial(icell, model.alpha, model.c_minus, model.c_plus, condition);

    FieldState next;
    next.time = state.time + dt;
    next.u.resize(n);
    next.v.resize(n);

    // The exchanged-basis identity makes H+(x_j - c+ dt) valid even when the
    // foot crosses alpha, so the irregular node needs no case split.
    ProfileSample irr = eval_interface_polynomial(
        profile, grid.node(j_int) - model.c_plus * dt, Side::plus_side);
    next.u[irregular] = irr.value;
    next.v[irregular] = irr.derivative;

    for (int k = 0; k < n; ++k) {
        if (k == irregular) continue;
        double xk = grid.node(k);
        double c = model.speed_at(xk);
        double lam = c * dt / grid.dx;
        HermiteCell cell{xk - grid.dx, xk,          state.u[grid.wrap(k - 1)],
                         state.u[k],   state.v[grid.wrap(k - 1)], state.v[k]};
        ProfileSample s = eval_profile_local(cell, 1.0 - lam);
        next.u[k] = s.value;
        next.v[k] = s.derivative;
    }
    return next;
}

namespace {

struct FootMap {
    double y;
    double dydx;
};

FootMap exact_foot(const PiecewiseConstantCoefficient& m, double t, double x) {
    if (x >= m.alpha && t <= (x - m.alpha) / m.c_plus) return {x - m.c_plus * t, 1.0};
    if (x <= m.alpha) return {x - m.c_minus * t, 1.0};
    double r = m.c_minus / m.c_plus;
    return {r * (x - m.c_plus * t) + (1.0 - r) * m.alpha, r};
}

}  // namespace

double exact_discontinuous_solution(const std::function<double(double)>& u0,
                                    const PiecewiseConstantCoefficient& model, double t, double x,
                                    JumpCondition condition) {
    FootMap f = exact_foot(model, t, x);
    if (condition == JumpCondition::jump_u) return u0(f.y);
    return model.speed_at(f.y) / model.speed_at(x) * u0(f.y);
}

double exact_discontinuous_solution_dx(const std::function<double(double)>& u0,
                                       const std::function<double(double)>& u0_prime,
                                       const PiecewiseConstantCoefficient& model, double t,
                                       double x, JumpCondition condition) {
    FootMap f = exact_foot(model, t, x);
    if (condition == JumpCondition::jump_u) return u0_prime(f.y) * f.dydx;
    return model.speed_at(f.y) / model.speed_at(x) * u0_prime(f.y) * f.dydx;
}

}  // namespace cip
