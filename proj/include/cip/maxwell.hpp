#pragma once
#include <array>
#include <functional>
#include <vector>

#include "cip/grid.hpp"
#include "cip/hermite.hpp"
#include "cip/small_linalg.hpp"

namespace cip {

// Nodal two-moment state for the 1D Maxwell system eps E_t = H_x,
// mu H_t = E_x.
struct EMState {
    double time = 0.0;
    std::vector<double> H, DH, E, DE;
};

EMState init_em_state(const Grid& grid, const std::function<double(double)>& H0,
                      const std::function<double(double)>& E0);
EMState init_em_state(const Grid& grid, const std::function<double(double)>& H0,
                      const std::function<double(double)>& H0_prime,
                      const std::function<double(double)>& E0,
                      const std::function<double(double)>& E0_prime);

struct ConstantMedia {
    double eps = 1.0;
    double mu = 1.0;
    double speed() const;      // 1/sqrt(mu eps)
    double impedance() const;  // sqrt(mu/eps)
};

struct InterfaceMedia {
    double alpha = 0.5;
    double eps_minus = 1.0, eps_plus = 1.0;
    double mu_minus = 1.0, mu_plus = 1.0;
    double speed_minus() const;
    double speed_plus() const;
};

// Piecewise constant media patches (x_{j-1/2}, x_{j+1/2}) centered on the
// nodes; every cell [x_{j-1}, x_j] then carries a jump at its midpoint.
struct CellAveragedMedia {
    std::vector<double> eps_bar, mu_bar, c_bar;
};

// Cell averages by 5-point Gauss-Legendre per patch; well beyond the
// second-order media approximation, so quadrature never pollutes the
// convergence study.
CellAveragedMedia cell_average_media(const std::function<double(double)>& eps_fn,
                                     const std::function<double(double)>& mu_fn, const Grid& grid);

// d'Alembert CIP step for constant media: each field is rebuilt from the
// cell cubics sampled at x_k -+ c dt with impedance-weighted differences.
// Requires c dt <= dx.
EMState step_maxwell_constant(const EMState& state, const Grid& grid, const ConstantMedia& media,
                              double dt);

// Immersed interface cubic pair for H (coefficients a) and E (coefficients
// b) on the interface cell:
//   h±(x) = a0 + eps± a1 z + (mu eps)± a2 z^2/2 + (mu eps^2)± a3 z^3/6,
//   e±(x) = b0 + mu± b1 z  + (mu eps)± b2 z^2/2 + (mu^2 eps)± b3 z^3/6,
// with z = (x - alpha)/dx. These encode [H] = [(1/eps) H_x] =
// [(1/(mu eps)) H_xx] = [(1/(mu eps^2)) H_xxx] = 0 and the dual relations
// for E with mu and eps swapped.
struct EMInterfaceProfiles {
    double alpha = 0.0;
    double theta = 0.0;
    double dx = 1.0;
    double x_left = 0.0, x_right = 1.0;
    double eps_minus = 1.0, eps_plus = 1.0;
    double mu_minus = 1.0, mu_plus = 1.0;
    Vec4 a{};  // H coefficients
    Vec4 b{};  // E coefficients
};

EMInterfaceProfiles build_em_interface_polynomials(const HermiteCell& h_cell,
                                                   const HermiteCell& e_cell, double alpha,
                                                   double eps_minus, double eps_plus,
                                                   double mu_minus, double mu_plus);

ProfileSample eval_em_h(const EMInterfaceProfiles& p, double x, bool plus_side);
ProfileSample eval_em_e(const EMInterfaceProfiles& p, double x, bool plus_side);

// The interpolation matrix A(eps, mu) of the interface system; exposed for
// the dual solve A(mu, eps) b = E-data and for the oracle tests.
Mat4 em_interface_matrix(double theta, double eps_minus, double eps_plus, double mu_minus,
                         double mu_plus);

// Single material interface at media.alpha; the two irregular nodes are
// updated through the interface polynomials, all others through the
// constant-media stencil of their side. Requires max(c-, c+) dt <= dx.
EMState step_maxwell_interface(const EMState& state, const Grid& grid, const InterfaceMedia& media,
                               double dt);

// Cell-averaged variable media: every cell has a jump at its midpoint
// (theta = 1/2); node x_j is updated with its own patch's (c, mu, eps).
// The interpolation matrices are media-dependent only, so a prebuilt
// workspace makes repeated stepping cheap.
class VariableMediaWorkspace {
  public:
    VariableMediaWorkspace(const Grid& grid, const CellAveragedMedia& media);

    const CellAveragedMedia& media() const { return media_; }
    // Factorizations for cell [x_{j-1}, x_j], H system and E system.
    const Lu4& h_system(int cell) const { return h_lu_[cell]; }
    const Lu4& e_system(int cell) const { return e_lu_[cell]; }

  private:
    CellAveragedMedia media_;
    std::vector<Lu4> h_lu_, e_lu_;
};

EMState step_maxwell_variable(const EMState& state, const Grid& grid,
                              const CellAveragedMedia& media, double dt,
                              const VariableMediaWorkspace* workspace = nullptr);

}  // namespace cip
