#include "cip/harness.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace cip {

namespace {

constexpr double kPi = 3.14159265358979323846;

double gaussian(double x, double center) {
    double d = (x - center) / 0.05;
    return std::exp(-d * d);
}

double gaussian_prime(double x, double center) {
    return gaussian(x, center) * (-2.0 * (x - center) / (0.05 * 0.05));
}

// The oscillatory speed used by the smooth studies, with its derivatives.
SmoothCoefficient cosine_speed() {
    SmoothCoefficient m;
    m.c = [](double x) { return 1.0 / (std::cos(4.0 * kPi * x) + 2.0); };
    m.c_prime = [](double x) {
        double d = std::cos(4.0 * kPi * x) + 2.0;
        return 4.0 * kPi * std::sin(4.0 * kPi * x) / (d * d);
    };
    m.c_second = [](double x) {
        double s = std::sin(4.0 * kPi * x);
        double d = std::cos(4.0 * kPi * x) + 2.0;
        double w = 4.0 * kPi;
        return w * w * (std::cos(4.0 * kPi * x) / (d * d) + 2.0 * s * s / (d * d * d));
    };
    return m;
}

std::vector<ReferenceProblem> make_catalog() {
    std::vector<ReferenceProblem> cat;

    auto u0 = [](double x) { return gaussian(x, 0.2); };
    auto u0p = [](double x) { return gaussian_prime(x, 0.2); };

    {
        // Variable-speed conservative advection; the solution returns to the
        // initial condition every two time units.
        ReferenceProblem p;
        p.name = "advection-smooth";
        p.kind = ProblemKind::smooth_advection;
        p.t_final = 2.0;
        p.dt_rule = [](int) { return 0.1; };
        p.smooth = cosine_speed();
        p.u0 = u0;
        p.u0_prime = u0p;
        p.exact = [u0](double /*t*/, double x) { return u0(x); };
        cat.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "transport-smooth";
        p.kind = ProblemKind::smooth_transport;
        p.t_final = 2.0;
        p.dt_rule = [](int) { return 0.1; };
        p.smooth = cosine_speed();
        p.u0 = u0;
        p.u0_prime = u0p;
        p.exact = [u0](double, double x) { return u0(x); };
        cat.push_back(std::move(p));
    }

    auto add_iim = [&](const std::string& name, JumpCondition cond) {
        // Fast-to-slow interface: the pulse slows and narrows after the
        // crossing, and the exact foot mapping stays valid on [0,1] up to
        // t = 0.4.
        ReferenceProblem p;
        p.name = name;
        p.kind = ProblemKind::iim_transport;
        p.t_final = 0.4;
        p.dt_rule = [](int n) { return 0.5 / n; };
        p.piecewise = {0.5, 2.0, 1.0};
        p.condition = cond;
        p.u0 = u0;
        p.u0_prime = u0p;
        PiecewiseConstantCoefficient pc = p.piecewise;
        p.exact = [u0, pc, cond](double t, double x) {
            return exact_discontinuous_solution(u0, pc, t, x, cond);
        };
        cat.push_back(std::move(p));
    };
    add_iim("transport-jump-u", JumpCondition::jump_u);
    add_iim("transport-jump-cu", JumpCondition::jump_cu);

    {
        // Right-moving pulse in vacuum-like media; period one.
        ReferenceProblem p;
        p.name = "maxwell-constant";
        p.kind = ProblemKind::maxwell_constant;
        p.t_final = 1.0;
        p.dt_rule = [](int n) { return 0.5 / n; };  // CFL 0.5 at c = 1
        p.constant_media = {1.0, 1.0};
        p.H0 = u0;
        p.H0_prime = u0p;
        p.E0 = [u0](double x) { return -u0(x); };
        p.E0_prime = [u0p](double x) { return -u0p(x); };
        p.exact_H = [u0](double, double x) { return u0(x); };
        cat.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "maxwell-interface";
        p.kind = ProblemKind::maxwell_interface;
        p.t_final = 0.5;
        p.dt_rule = [](int n) { return 0.5 / n; };  // CFL 0.5 at the fast side
        p.interface_media = {0.5, 1.0, 4.0 / 3.0, 1.0, 3.0};
        InterfaceMedia im = p.interface_media;
        auto impedance = [im](double x) {
            return x < im.alpha ? std::sqrt(im.mu_minus / im.eps_minus)
                                : std::sqrt(im.mu_plus / im.eps_plus);
        };
        p.H0 = u0;
        p.H0_prime = u0p;
        p.E0 = [u0, impedance](double x) { return -impedance(x) * u0(x); };
        p.E0_prime = [u0p, impedance](double x) { return -impedance(x) * u0p(x); };
        // No closed-form exact field; amplitude checks use the impedance
        // formulas instead.
        p.exact_H = {};
        cat.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "maxwell-variable";
        p.kind = ProblemKind::maxwell_variable;
        p.t_final = 1.0;
        // max c = 2, CFL 0.5: dt = 0.25 / N.
        p.dt_rule = [](int n) { return 0.25 / n; };
        p.eps_fn = [](double x) { return 0.5 * std::cos(4.0 * kPi * x) + 1.0; };
        p.mu_fn = p.eps_fn;
        p.H0 = [](double x) { return gaussian(x, 0.5); };
        p.H0_prime = [](double x) { return gaussian_prime(x, 0.5); };
        p.E0 = [](double) { return 0.0; };
        p.E0_prime = [](double) { return 0.0; };
        auto h0 = p.H0;
        p.exact_H = [h0](double, double x) { return h0(x); };
        cat.push_back(std::move(p));
    }
    return cat;
}

int steps_for(double t_final, double dt) {
    int n = static_cast<int>(std::llround(t_final / dt));
    if (std::abs(n * dt - t_final) > 1e-9 * std::max(1.0, t_final))
        throw input_error("time step does not divide the final time");
    return n;
}

bool wants_snapshot(std::span<const double> times, double t, double dt) {
    for (double s : times)
        if (std::abs(s - t) <= 0.5 * dt) return true;
    return false;
}

}  // namespace

ErrorReport error_norms(std::span<const double> numeric, std::span<const double> exact) {
    if (numeric.size() != exact.size())
        throw input_error("error_norms: length mismatch");
    double sum_abs = 0.0, sum_sq = 0.0, ref_abs = 0.0, ref_sq = 0.0, max_abs = 0.0;
    for (size_t k = 0; k < numeric.size(); ++k) {
        double d = numeric[k] - exact[k];
        sum_abs += std::abs(d);
        sum_sq += d * d;
        ref_abs += std::abs(exact[k]);
        ref_sq += exact[k] * exact[k];
        max_abs = std::max(max_abs, std::abs(d));
    }
    ErrorReport r;
    r.n_cells = static_cast<int>(numeric.size());
    r.eps_inf = max_abs;
    double nan = std::numeric_limits<double>::quiet_NaN();
    r.eps1 = ref_abs > 0.0 ? sum_abs / ref_abs : nan;
    r.eps2 = ref_sq > 0.0 ? std::sqrt(sum_sq / ref_sq) : nan;
    return r;
}

const std::vector<ReferenceProblem>& reference_problems() {
    static const std::vector<ReferenceProblem> cat = make_catalog();
    return cat;
}

const ReferenceProblem& find_problem(const std::string& name) {
    for (const auto& p : reference_problems())
        if (p.name == name) return p;
    throw input_error("unknown reference problem \"" + name + "\"");
}

ScalarRunResult run_scalar_problem(const ReferenceProblem& problem, int n_cells,
                                   DerivativeInit init, const OdeOptions& ode,
                                   std::span<const double> snapshot_times,
                                   const std::function<void(const FieldState&)>& on_snapshot) {
    Grid grid = build_grid(n_cells, 0.0, 1.0);
    double dt = problem.dt_rule(n_cells);
    int steps = steps_for(problem.t_final, dt);

    FieldState state = init == DerivativeInit::analytic
                           ? init_state(grid, problem.u0, problem.u0_prime)
                           : init_state(grid, problem.u0);

    std::vector<FootPoint> feet;
    if (problem.kind == ProblemKind::smooth_advection ||
        problem.kind == ProblemKind::smooth_transport)
        feet = backtrack_feet(grid, problem.smooth, dt, ode);

    auto snapshot = [&](const FieldState& s) {
        if (on_snapshot && wants_snapshot(snapshot_times, s.time, dt)) on_snapshot(s);
    };
    snapshot(state);

    for (int n = 0; n < steps; ++n) {
        switch (problem.kind) {
            case ProblemKind::smooth_advection:
                state = step_advection(state, grid, problem.smooth, dt, &feet, ode);
                break;
            case ProblemKind::smooth_transport:
                state = step_transport(state, grid, problem.smooth, dt, &feet, ode);
                break;
            case ProblemKind::iim_transport:
                state = step_discontinuous(state, grid, problem.piecewise, dt, problem.condition);
                break;
            default:
                throw input_error("run_scalar_problem: not a scalar problem");
        }
        snapshot(state);
    }

    ScalarRunResult out;
    std::vector<double> exact(n_cells);
    for (int k = 0; k < n_cells; ++k) exact[k] = problem.exact(problem.t_final, grid.node(k));
    out.error = error_norms(state.u, exact);
    out.error.dt = dt;
    out.error.final_time = problem.t_final;
    out.state = std::move(state);
    return out;
}

MaxwellRunResult run_maxwell_problem(const ReferenceProblem& problem, int n_cells,
                                     DerivativeInit init, std::span<const double> snapshot_times,
                                     const std::function<void(const EMState&)>& on_snapshot) {
    Grid grid = build_grid(n_cells, 0.0, 1.0);
    double dt = problem.dt_rule(n_cells);
    int steps = steps_for(problem.t_final, dt);

    EMState state = init == DerivativeInit::analytic
                        ? init_em_state(grid, problem.H0, problem.H0_prime, problem.E0,
                                        problem.E0_prime)
                        : init_em_state(grid, problem.H0, problem.E0);

    CellAveragedMedia media;
    std::optional<VariableMediaWorkspace> ws;
    if (problem.kind == ProblemKind::maxwell_variable) {
        media = cell_average_media(problem.eps_fn, problem.mu_fn, grid);
        ws.emplace(grid, media);
    }

    auto snapshot = [&](const EMState& s) {
        if (on_snapshot && wants_snapshot(snapshot_times, s.time, dt)) on_snapshot(s);
    };
    snapshot(state);

    for (int n = 0; n < steps; ++n) {
        switch (problem.kind) {
            case ProblemKind::maxwell_constant:
                state = step_maxwell_constant(state, grid, problem.constant_media, dt);
                break;
            case ProblemKind::maxwell_interface:
                state = step_maxwell_interface(state, grid, problem.interface_media, dt);
                break;
            case ProblemKind::maxwell_variable:
                state = step_maxwell_variable(state, grid, media, dt, &*ws);
                break;
            default:
                throw input_error("run_maxwell_problem: not a maxwell problem");
        }
        snapshot(state);
    }

    MaxwellRunResult out;
    if (problem.exact_H) {
        std::vector<double> exact(n_cells);
        for (int k = 0; k < n_cells; ++k) exact[k] = problem.exact_H(problem.t_final, grid.node(k));
        out.error_h = error_norms(state.H, exact);
        out.error_h.dt = dt;
        out.error_h.final_time = problem.t_final;
    }
    out.state = std::move(state);
    return out;
}

ConvergenceTable convergence_study(const ReferenceProblem& problem, const std::vector<int>& n_list,
                                   DerivativeInit init, const OdeOptions& ode) {
    if (n_list.empty()) throw input_error("convergence_study: empty n_list");
    for (size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw input_error("convergence_study: n_list must be ascending");

    ConvergenceTable table;
    table.problem = problem.name;
    double nan = std::numeric_limits<double>::quiet_NaN();

    for (int n : n_list) {
        ErrorReport err;
        try {
            if (problem.kind == ProblemKind::maxwell_constant ||
                problem.kind == ProblemKind::maxwell_variable) {
                err = run_maxwell_problem(problem, n, init).error_h;
            } else {
                err = run_scalar_problem(problem, n, init, ode).error;
            }
        } catch (const std::exception& e) {
            throw numerical_error("convergence_study at N = " + std::to_string(n) + ": " +
                                  e.what());
        }

        ConvergenceRow row;
        row.n = n;
        row.error = err;
        row.order1 = row.order2 = row.order_inf = nan;
        if (!table.rows.empty()) {
            const ErrorReport& prev = table.rows.back().error;
            row.order1 = std::log2(prev.eps1 / err.eps1);
            row.order2 = std::log2(prev.eps2 / err.eps2);
            row.order_inf = std::log2(prev.eps_inf / err.eps_inf);
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace cip
