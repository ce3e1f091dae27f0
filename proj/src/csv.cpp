#include "cip/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace cip {

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw numerical_error("format_double failed");
    return {buf, end};
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline translation
    if (!out) throw input_error("cannot open output file \"" + path + "\"");
    return out;
}

}  // namespace

void write_scalar_snapshot_csv(const std::string& path, const Grid& grid,
                               const FieldState& state) {
    auto out = open_out(path);
    out << "x,u,v\n";
    for (int k = 0; k < grid.n_cells; ++k)
        out << format_double(grid.node(k)) << ',' << format_double(state.u[k]) << ','
            << format_double(state.v[k]) << '\n';
}

void write_em_snapshot_csv(const std::string& path, const Grid& grid, const EMState& state) {
    auto out = open_out(path);
    out << "x,H,DH,E,DE\n";
    for (int k = 0; k < grid.n_cells; ++k)
        out << format_double(grid.node(k)) << ',' << format_double(state.H[k]) << ','
            << format_double(state.DH[k]) << ',' << format_double(state.E[k]) << ','
            << format_double(state.DE[k]) << '\n';
}

void write_convergence_csv(const std::string& path, const ConvergenceTable& table) {
    auto out = open_out(path);
    out << "N,eps1,eps2,eps_inf,order2\n";
    for (const auto& row : table.rows)
        out << row.n << ',' << format_double(row.error.eps1) << ',' << format_double(row.error.eps2)
            << ',' << format_double(row.error.eps_inf) << ','
            << (std::isnan(row.order2) ? std::string() : format_double(row.order2)) << '\n';
}

void write_scan_csv(const std::string& path, const ScanResult& scan) {
    auto out = open_out(path);
    out << "theta,lambda,rho2_abs,M\n";
    for (const auto& r : scan.rows)
        out << format_double(r.theta) << ',' << format_double(r.lam) << ','
            << format_double(r.rho2_abs) << ',' << format_double(r.M) << '\n';
    out << "# max_rho2=" << format_double(scan.max_rho2) << ",max_M=" << format_double(scan.max_m)
        << '\n';
}

}  // namespace cip
