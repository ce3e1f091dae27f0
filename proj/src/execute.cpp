#include <cmath>
#include <filesystem>
#include <optional>
#include <vector>

#include "cip/csv.hpp"
#include "cip/run_config.hpp"

namespace cip {

namespace {

namespace fs = std::filesystem;

// Tracks files written by one run so a failure can remove partial outputs.
struct OutputTracker {
    std::vector<fs::path> written;
    bool committed = false;

    ~OutputTracker() {
        if (committed) return;
        for (const auto& p : written) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
    std::string track(const fs::path& p) {
        written.push_back(p);
        return p.string();
    }
};

std::string snapshot_name(const std::string& dir, double t) {
    return (fs::path(dir) / ("snap_t" + format_double(t) + ".csv")).string();
}

// Resolve the reference problem for a run command, applying inline overrides.
ReferenceProblem resolve_problem(const RunConfig& c) {
    std::string id = c.problem;
    if (id.empty()) {
        if (c.command == "run-advection") id = "advection-smooth";
        else if (c.command == "run-transport") id = "transport-smooth";
        else if (c.command == "run-iim") id = c.condition == "cu" ? "transport-jump-cu"
                                                                  : "transport-jump-u";
        else if (c.command == "run-maxwell") {
            if (c.media == "constant") id = "maxwell-constant";
            else if (c.media == "variable") id = "maxwell-variable";
            else id = "maxwell-interface";
        }
    }
    ReferenceProblem p = find_problem(id);

    if (c.command == "run-iim" && !c.condition.empty())
        p.condition = c.condition == "cu" ? JumpCondition::jump_cu : JumpCondition::jump_u;
    if (c.alpha) {
        p.piecewise.alpha = *c.alpha;
        p.interface_media.alpha = *c.alpha;
    }
    if (c.c_minus) p.piecewise.c_minus = *c.c_minus;
    if (c.c_plus) p.piecewise.c_plus = *c.c_plus;
    if (c.eps) p.constant_media.eps = *c.eps;
    if (c.mu) p.constant_media.mu = *c.mu;
    if (c.eps_minus) p.interface_media.eps_minus = *c.eps_minus;
    if (c.eps_plus) p.interface_media.eps_plus = *c.eps_plus;
    if (c.mu_minus) p.interface_media.mu_minus = *c.mu_minus;
    if (c.mu_plus) p.interface_media.mu_plus = *c.mu_plus;
    if (c.t_final) p.t_final = *c.t_final;
    if (c.dt) {
        double dt = *c.dt;
        p.dt_rule = [dt](int) { return dt; };
    }

    // Rebuild closures that captured overridden members.
    if (p.kind == ProblemKind::iim_transport) {
        auto u0 = p.u0;
        auto pc = p.piecewise;
        auto cond = p.condition;
        p.exact = [u0, pc, cond](double t, double x) {
            return exact_discontinuous_solution(u0, pc, t, x, cond);
        };
    }
    return p;
}

DerivativeInit init_of(const RunConfig& c) {
    return c.derivative_init == "central" ? DerivativeInit::central_difference
                                          : DerivativeInit::analytic;
}

void run_scalar(const RunConfig& c, std::ostream& log, OutputTracker& outputs) {
    ReferenceProblem p = resolve_problem(c);
    Grid grid = build_grid(*c.n, 0.0, 1.0);

    if (c.command != "run-iim" && c.variant != "exact") {
        // Legacy variants step without the feet table and have no convergence
        // harness; drive them directly.
        double dt = p.dt_rule(*c.n);
        int steps = static_cast<int>(std::llround(p.t_final / dt));
        FieldState state = init_of(c) == DerivativeInit::analytic
                               ? init_state(grid, p.u0, p.u0_prime)
                               : init_state(grid, p.u0);
        LegacyVariant variant =
            c.variant == "sol1" ? LegacyVariant::sol1 : LegacyVariant::sol2;
        auto maybe_snapshot = [&](const FieldState& s) {
            for (double t : c.snapshots)
                if (std::abs(t - s.time) <= 0.5 * dt)
                    write_scalar_snapshot_csv(outputs.track(snapshot_name(c.out_dir, t)), grid, s);
        };
        maybe_snapshot(state);
        for (int n = 0; n < steps; ++n) {
            state = step_legacy(state, grid, p.smooth, dt, variant);
            maybe_snapshot(state);
        }
        std::vector<double> exact(grid.n_cells);
        for (int k = 0; k < grid.n_cells; ++k) exact[k] = p.exact(state.time, grid.node(k));
        ErrorReport err = error_norms(state.u, exact);
        log << c.command << " " << p.name << " (" << c.variant << ") N=" << *c.n
            << " t=" << format_double(state.time) << " eps1=" << format_double(err.eps1)
            << " eps2=" << format_double(err.eps2) << " eps_inf=" << format_double(err.eps_inf)
            << "\n";
        return;
    }

    auto on_snapshot = [&](const FieldState& s) {
        write_scalar_snapshot_csv(outputs.track(snapshot_name(c.out_dir, s.time)), grid, s);
    };
    ScalarRunResult r = run_scalar_problem(p, *c.n, init_of(c), OdeOptions{}, c.snapshots,
                                           c.snapshots.empty()
                                               ? std::function<void(const FieldState&)>{}
                                               : on_snapshot);
    log << c.command << " " << p.name << " N=" << *c.n << " t=" << format_double(p.t_final)
        << " eps1=" << format_double(r.error.eps1) << " eps2=" << format_double(r.error.eps2)
        << " eps_inf=" << format_double(r.error.eps_inf) << "\n";
}

void run_maxwell(const RunConfig& c, std::ostream& log, OutputTracker& outputs) {
    ReferenceProblem p = resolve_problem(c);
    Grid grid = build_grid(*c.n, 0.0, 1.0);
    auto on_snapshot = [&](const EMState& s) {
        write_em_snapshot_csv(outputs.track(snapshot_name(c.out_dir, s.time)), grid, s);
    };
    MaxwellRunResult r = run_maxwell_problem(p, *c.n, init_of(c), c.snapshots,
                                             c.snapshots.empty()
                                                 ? std::function<void(const EMState&)>{}
                                                 : on_snapshot);
    log << "run-maxwell " << p.name << " N=" << *c.n << " t=" << format_double(p.t_final);
    if (p.exact_H)
        log << " eps1=" << format_double(r.error_h.eps1)
            << " eps2=" << format_double(r.error_h.eps2)
            << " eps_inf=" << format_double(r.error_h.eps_inf);
    double max_h = 0.0;
    for (double h : r.state.H) max_h = std::max(max_h, std::abs(h));
    log << " max|H|=" << format_double(max_h) << "\n";
}

void run_converge(const RunConfig& c, std::ostream& log, OutputTracker& outputs) {
    ReferenceProblem p = resolve_problem(c);
    ConvergenceTable table = convergence_study(p, c.n_list, init_of(c));
    std::string path = outputs.track(fs::path(c.out_dir) / ("converge_" + p.name + ".csv"));
    write_convergence_csv(path, table);
    const ConvergenceRow& last = table.rows.back();
    log << "converge " << p.name << " N_max=" << last.n
        << " eps1=" << format_double(last.error.eps1)
        << " eps2=" << format_double(last.error.eps2) << " order2="
        << format_double(last.order2) << " -> " << path << "\n";
}

void run_scan(const RunConfig& c, std::ostream& log, OutputTracker& outputs) {
    int nt = c.theta_samples.value_or(256);
    int nl = c.lambda_samples.value_or(256);
    ScanResult scan = condition_scan(nt, nl);
    std::string path = outputs.track(fs::path(c.out_dir) / "stability_scan.csv");
    write_scan_csv(path, scan);
    log << "stability-scan " << nt << "x" << nl << " max_rho2=" << format_double(scan.max_rho2)
        << " max_M=" << format_double(scan.max_m) << " at theta="
        << format_double(scan.argmax_m_theta) << " lambda="
        << format_double(scan.argmax_m_lambda) << " -> " << path << "\n";
}

}  // namespace

void execute(const RunConfig& c, std::ostream& log) {
    validate(c);
    fs::create_directories(c.out_dir);

    OutputTracker outputs;
    if (c.command == "run-advection" || c.command == "run-transport" || c.command == "run-iim")
        run_scalar(c, log, outputs);
    else if (c.command == "run-maxwell")
        run_maxwell(c, log, outputs);
    else if (c.command == "converge")
        run_converge(c, log, outputs);
    else
        run_scan(c, log, outputs);
    outputs.committed = true;
}

}  // namespace cip
