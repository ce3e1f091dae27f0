#include "cip/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cip {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size())
        throw input_error("config key \"" + key + "\": bad number \"" + value + "\"");
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    int out;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size())
        throw input_error("config key \"" + key + "\": bad integer \"" + value + "\"");
    return out;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse(key, item));
    }
    if (out.empty()) throw input_error("config key \"" + key + "\": empty list");
    return out;
}

void require_positive(const char* key, double v) {
    if (!(v > 0.0)) throw input_error(std::string("config key \"") + key + "\" must be positive");
}

}  // namespace

void apply_key(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "command") c.command = value;
    else if (key == "problem") c.problem = value;
    else if (key == "out") c.out_dir = value;
    else if (key == "n") c.n = parse_int(key, value);
    else if (key == "dt") c.dt = parse_double(key, value);
    else if (key == "t_final") c.t_final = parse_double(key, value);
    else if (key == "snapshots") c.snapshots = parse_list<double>(key, value, parse_double);
    else if (key == "n_list") c.n_list = parse_list<int>(key, value, parse_int);
    else if (key == "derivative_init") c.derivative_init = value;
    else if (key == "variant") c.variant = value;
    else if (key == "condition") c.condition = value;
    else if (key == "media") c.media = value;
    else if (key == "alpha") c.alpha = parse_double(key, value);
    else if (key == "c_minus") c.c_minus = parse_double(key, value);
    else if (key == "c_plus") c.c_plus = parse_double(key, value);
    else if (key == "eps") c.eps = parse_double(key, value);
    else if (key == "mu") c.mu = parse_double(key, value);
    else if (key == "eps_minus") c.eps_minus = parse_double(key, value);
    else if (key == "eps_plus") c.eps_plus = parse_double(key, value);
    else if (key == "mu_minus") c.mu_minus = parse_double(key, value);
    else if (key == "mu_plus") c.mu_plus = parse_double(key, value);
    else if (key == "theta_samples") c.theta_samples = parse_int(key, value);
    else if (key == "lambda_samples") c.lambda_samples = parse_int(key, value);
    else throw input_error("unknown config key \"" + key + "\"");
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read config file \"" + path + "\"");
    RunConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw input_error("config line " + std::to_string(lineno) + ": expected key = value");
        apply_key(c, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return c;
}

void validate(const RunConfig& c) {
    const std::string& cmd = c.command;
    bool scalar_run = cmd == "run-advection" || cmd == "run-transport" || cmd == "run-iim";
    bool known = scalar_run || cmd == "run-maxwell" || cmd == "converge" || cmd == "stability-scan";
    if (!known) throw input_error("unknown command \"" + cmd + "\"");

    if (c.dt) require_positive("dt", *c.dt);
    if (c.t_final) require_positive("t_final", *c.t_final);
    if (c.n && *c.n < 4) throw input_error("config key \"n\" must be >= 4");

    if (cmd == "converge") {
        if (c.problem.empty()) throw input_error("converge requires \"problem\"");
        if (c.n_list.empty()) throw input_error("converge requires \"n_list\"");
        for (int n : c.n_list)
            if (n < 4) throw input_error("config key \"n_list\" entries must be >= 4");
    } else if (cmd == "stability-scan") {
        if (c.theta_samples && *c.theta_samples < 8)
            throw input_error("config key \"theta_samples\" must be >= 8");
        if (c.lambda_samples && *c.lambda_samples < 8)
            throw input_error("config key \"lambda_samples\" must be >= 8");
    } else {
        if (!c.n) throw input_error(cmd + " requires \"n\"");
    }

    if (c.derivative_init != "analytic" && c.derivative_init != "central")
        throw input_error("config key \"derivative_init\" must be analytic or central");
    if (!c.condition.empty() && c.condition != "u" && c.condition != "cu")
        throw input_error("config key \"condition\" must be u or cu");
    if (c.variant != "exact" && c.variant != "sol1" && c.variant != "sol2")
        throw input_error("config key \"variant\" must be exact, sol1 or sol2");
    if (!c.media.empty() && c.media != "constant" && c.media != "interface" &&
        c.media != "variable")
        throw input_error("config key \"media\" must be constant, interface or variable");
    auto check_opt = [](const char* key, const std::optional<double>& v) {
        if (v) require_positive(key, *v);
    };
    check_opt("c_minus", c.c_minus);
    check_opt("c_plus", c.c_plus);
    check_opt("eps", c.eps);
    check_opt("mu", c.mu);
    check_opt("eps_minus", c.eps_minus);
    check_opt("eps_plus", c.eps_plus);
    check_opt("mu_minus", c.mu_minus);
    check_opt("mu_plus", c.mu_plus);
}

std::string serialize(const RunConfig& c) {
    std::ostringstream out;
    auto emit = [&out](const std::string& key, const std::string& value) {
        out << key << " = " << value << "\n";
    };
    auto num = [](double v) {
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        if (ec != std::errc{}) throw numerical_error("serialize: to_chars failed");
        return std::string(buf, end);
    };
    emit("command", c.command);
    if (!c.problem.empty()) emit("problem", c.problem);
    emit("out", c.out_dir);
    if (c.n) emit("n", std::to_string(*c.n));
    if (c.dt) emit("dt", num(*c.dt));
    if (c.t_final) emit("t_final", num(*c.t_final));
    if (!c.snapshots.empty()) {
        std::string v;
        for (size_t i = 0; i < c.snapshots.size(); ++i)
            v += (i ? "," : "") + num(c.snapshots[i]);
        emit("snapshots", v);
    }
    if (!c.n_list.empty()) {
        std::string v;
        for (size_t i = 0; i < c.n_list.size(); ++i)
            v += (i ? "," : "") + std::to_string(c.n_list[i]);
        emit("n_list", v);
    }
    emit("derivative_init", c.derivative_init);
    emit("variant", c.variant);
    if (!c.condition.empty()) emit("condition", c.condition);
    if (!c.media.empty()) emit("media", c.media);
    auto opt = [&](const char* key, const std::optional<double>& v) {
        if (v) emit(key, num(*v));
    };
    opt("alpha", c.alpha);
    opt("c_minus", c.c_minus);
    opt("c_plus", c.c_plus);
    opt("eps", c.eps);
    opt("mu", c.mu);
    opt("eps_minus", c.eps_minus);
    opt("eps_plus", c.eps_plus);
    opt("mu_minus", c.mu_minus);
    opt("mu_plus", c.mu_plus);
    if (c.theta_samples) emit("theta_samples", std::to_string(*c.theta_samples));
    if (c.lambda_samples) emit("lambda_samples", std::to_string(*c.lambda_samples));
    return out.str();
}

}  // namespace cip
