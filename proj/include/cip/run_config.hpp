#pragma once
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cip/errors.hpp"

namespace cip {

// Flat key = value configuration for one CLI run. File values are applied
// first, then flag overrides. Unknown keys are rejected by name.
struct RunConfig {
    std::string command;          // run-advection | run-transport | run-iim |
                                  // run-maxwell | converge | stability-scan
    std::string problem;          // reference-problem id (command-dependent default)
    std::string out_dir = ".";
    std::optional<int> n;
    std::optional<double> dt;
    std::optional<double> t_final;
    std::vector<double> snapshots;
    std::vector<int> n_list;
    std::string derivative_init = "analytic";  // analytic | central
    std::string variant = "exact";             // exact | sol1 | sol2
    std::string condition;                     // u | cu
    std::string media;                         // constant | interface | variable
    std::optional<double> alpha, c_minus, c_plus;
    std::optional<double> eps, mu, eps_minus, eps_plus, mu_minus, mu_plus;
    std::optional<int> theta_samples, lambda_samples;

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config_file(const std::string& path);

// Apply a single key = value pair; shared by the file parser and the flag
// overrides. Throws input_error for unknown keys or bad values, naming the
// key.
void apply_key(RunConfig& config, const std::string& key, const std::string& value);

// Command-specific validation: required fields present, numeric fields
// positive.
void validate(const RunConfig& config);

std::string serialize(const RunConfig& config);

// Runs the configured pipeline, writing CSV artifacts under out_dir and one
// summary line per run to log. Partial outputs are removed on failure.
void execute(const RunConfig& config, std::ostream& log);

}  // namespace cip
