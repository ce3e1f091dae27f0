#pragma once
#include <string>

#include "cip/harness.hpp"
#include "cip/stability.hpp"

namespace cip {

// Shortest round-trip decimal representation, locale-independent; identical
// inputs give byte-identical output.
std::string format_double(double x);

void write_scalar_snapshot_csv(const std::string& path, const Grid& grid, const FieldState& state);
void write_em_snapshot_csv(const std::string& path, const Grid& grid, const EMState& state);
void write_convergence_csv(const std::string& path, const ConvergenceTable& table);
// Rows "theta,lambda,rho2_abs,M" plus a trailing "# max_rho2=...,max_M=..."
// comment as the footer summary.
void write_scan_csv(const std::string& path, const ScanResult& scan);

}  // namespace cip
