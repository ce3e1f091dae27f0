#pragma once
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cip/characteristics.hpp"
#include "cip/cip_smooth.hpp"
#include "cip/iim.hpp"
#include "cip/maxwell.hpp"

namespace cip {

// eps_inf is the maximum absolute nodal error; eps1 and eps2 are relative:
// ||u - U||_i / ||U||_i. A zero-norm exact field makes the relative norms
// NaN; eps_inf is still valid.
struct ErrorReport {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double eps_inf = 0.0;
    int n_cells = 0;
    double dt = 0.0;
    double final_time = 0.0;
};

ErrorReport error_norms(std::span<const double> numeric, std::span<const double> exact);

struct ConvergenceRow {
    int n = 0;
    ErrorReport error;
    // Observed orders log2(e_N / e_2N) against the previous row; NaN on the
    // first row.
    double order1 = 0.0;
    double order2 = 0.0;
    double order_inf = 0.0;
};

struct ConvergenceTable {
    std::string problem;
    std::vector<ConvergenceRow> rows;
};

enum class ProblemKind {
    smooth_advection,
    smooth_transport,
    iim_transport,
    maxwell_constant,
    maxwell_interface,
    maxwell_variable,
};

// A named reference problem: coefficients, initial data, the time-step rule,
// final time, and an exact-solution callable at the final time.
struct ReferenceProblem {
    std::string name;
    ProblemKind kind = ProblemKind::smooth_advection;
    double t_final = 1.0;
    std::function<double(int)> dt_rule;  // N -> dt

    // Scalar problems.
    SmoothCoefficient smooth;
    PiecewiseConstantCoefficient piecewise;
    JumpCondition condition = JumpCondition::jump_u;
    std::function<double(double)> u0, u0_prime;
    std::function<double(double, double)> exact;  // (t, x) -> u

    // Maxwell problems.
    ConstantMedia constant_media;
    InterfaceMedia interface_media;
    std::function<double(double)> eps_fn, mu_fn;
    std::function<double(double)> H0, H0_prime, E0, E0_prime;
    std::function<double(double, double)> exact_H;  // (t, x) -> H
};

const std::vector<ReferenceProblem>& reference_problems();
const ReferenceProblem& find_problem(const std::string& name);

struct ScalarRunResult {
    FieldState state;
    ErrorReport error;
};

struct MaxwellRunResult {
    EMState state;
    ErrorReport error_h;
};

// Run a scalar problem on N cells to its final time. snapshot_times must be
// (near-)multiples of dt; each matching state is handed to on_snapshot.
ScalarRunResult run_scalar_problem(const ReferenceProblem& problem, int n_cells,
                                   DerivativeInit init = DerivativeInit::analytic,
                                   const OdeOptions& ode = {},
                                   std::span<const double> snapshot_times = {},
                                   const std::function<void(const FieldState&)>& on_snapshot = {});

MaxwellRunResult run_maxwell_problem(const ReferenceProblem& problem, int n_cells,
                                     DerivativeInit init = DerivativeInit::analytic,
                                     std::span<const double> snapshot_times = {},
                                     const std::function<void(const EMState&)>& on_snapshot = {});

// Grid-refinement study with the problem's dt rule. n_list must be ascending
// powers-of-two multiples.
ConvergenceTable convergence_study(const ReferenceProblem& problem, const std::vector<int>& n_list,
                                   DerivativeInit init = DerivativeInit::analytic,
                                   const OdeOptions& ode = {});

}  // namespace cip
