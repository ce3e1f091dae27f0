#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cip/run_config.hpp"

namespace {

// Flags override config-file values key by key.
struct FlagOverrides {
    std::vector<std::pair<std::string, std::string>> pairs;
    void add(const std::string& key, const std::string& value) { pairs.emplace_back(key, value); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-moment semi-Lagrangian solvers for 1D hyperbolic equations"};
    app.name("cip1d");

    std::string config_path, command, out_dir, problem, snapshots, n_list, condition, media,
        variant, derivative_init;
    int n = 0, theta_samples = 0, lambda_samples = 0;
    double dt = 0, t_final = 0, alpha = 0, c_minus = 0, c_plus = 0, eps = 0, mu = 0, eps_minus = 0,
           eps_plus = 0, mu_minus = 0, mu_plus = 0;

    app.add_option("--config", config_path, "Config file (flat key = value lines)");
    auto* o_command = app.add_option("--command", command, "Command to run");
    auto* o_out = app.add_option("--out", out_dir, "Output directory");
    auto* o_problem = app.add_option("--problem", problem, "Reference problem id");
    auto* o_n = app.add_option("--n", n, "Number of grid cells");
    auto* o_dt = app.add_option("--dt", dt, "Time step");
    auto* o_tf = app.add_option("--t-final", t_final, "Final time");
    auto* o_snap = app.add_option("--snapshots", snapshots, "Comma-separated snapshot times");
    auto* o_nlist = app.add_option("--n-list", n_list, "Comma-separated grid sizes (converge)");
    auto* o_cond = app.add_option("--condition", condition, "Jump condition: u | cu");
    auto* o_media = app.add_option("--media", media, "Maxwell media: constant | interface | variable");
    auto* o_var = app.add_option("--variant", variant, "Smooth stepper: exact | sol1 | sol2");
    auto* o_init = app.add_option("--derivative-init", derivative_init,
                                  "Initial derivative moment: analytic | central");
    auto* o_alpha = app.add_option("--alpha", alpha, "Interface location");
    auto* o_cm = app.add_option("--c-minus", c_minus, "Speed left of the interface");
    auto* o_cp = app.add_option("--c-plus", c_plus, "Speed right of the interface");
    auto* o_eps = app.add_option("--eps", eps, "Permittivity (constant media)");
    auto* o_mu = app.add_option("--mu", mu, "Permeability (constant media)");
    auto* o_epsm = app.add_option("--eps-minus", eps_minus, "Permittivity left of the interface");
    auto* o_epsp = app.add_option("--eps-plus", eps_plus, "Permittivity right of the interface");
    auto* o_mum = app.add_option("--mu-minus", mu_minus, "Permeability left of the interface");
    auto* o_mup = app.add_option("--mu-plus", mu_plus, "Permeability right of the interface");
    auto* o_ts = app.add_option("--theta-samples", theta_samples, "Scan resolution in theta");
    auto* o_ls = app.add_option("--lambda-samples", lambda_samples, "Scan resolution in lambda");

    CLI11_PARSE(app, argc, argv);

    auto fmt = [](double v) {
        std::ostringstream s;
        s.precision(17);
        s << v;
        return s.str();
    };

    try {
        cip::RunConfig config;
        if (!config_path.empty()) config = cip::parse_config_file(config_path);

        FlagOverrides flags;
        if (*o_command) flags.add("command", command);
        if (*o_out) flags.add("out", out_dir);
        if (*o_problem) flags.add("problem", problem);
        if (*o_n) flags.add("n", std::to_string(n));
        if (*o_dt) flags.add("dt", fmt(dt));
        if (*o_tf) flags.add("t_final", fmt(t_final));
        if (*o_snap) flags.add("snapshots", snapshots);
        if (*o_nlist) flags.add("n_list", n_list);
        if (*o_cond) flags.add("condition", condition);
        if (*o_media) flags.add("media", media);
        if (*o_var) flags.add("variant", variant);
        if (*o_init) flags.add("derivative_init", derivative_init);
        if (*o_alpha) flags.add("alpha", fmt(alpha));
        if (*o_cm) flags.add("c_minus", fmt(c_minus));
        if (*o_cp) flags.add("c_plus", fmt(c_plus));
        if (*o_eps) flags.add("eps", fmt(eps));
        if (*o_mu) flags.add("mu", fmt(mu));
        if (*o_epsm) flags.add("eps_minus", fmt(eps_minus));
        if (*o_epsp) flags.add("eps_plus", fmt(eps_plus));
        if (*o_mum) flags.add("mu_minus", fmt(mu_minus));
        if (*o_mup) flags.add("mu_plus", fmt(mu_plus));
        if (*o_ts) flags.add("theta_samples", std::to_string(theta_samples));
        if (*o_ls) flags.add("lambda_samples", std::to_string(lambda_samples));
        for (const auto& [key, value] : flags.pairs) cip::apply_key(config, key, value);

        cip::execute(config, std::cout);
        return 0;
    } catch (const cip::input_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const cip::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
