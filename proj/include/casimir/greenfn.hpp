// casimir-wedge: Euclidean radial Green-function kernel of the wedge mode
// expansion, with structural checks (source jump, homogeneous ODE residual,
// Dirichlet boundary, symmetry).

#pragma once

#include "casimir/specfun.hpp"

namespace casimir::greenfn {

// One angular mode: order nu = m pi / beta at Euclidean radial momentum
// lambda_e = sqrt(omega^2/c^2 + k^2) (after frequency rotation).
struct SpectralMode {
    int m;
    double nu;
    double lambda_e;
};

// Builds the mode for a wedge of opening angle beta; nu = m pi / beta.
SpectralMode make_mode(int m, double beta, double lambda_e);

// Mode with the order given directly (for kernel-level checks).
SpectralMode make_mode_with_order(int m, specfun::BesselOrder order, double lambda_e);

// Radial kernel argument pair with the radii ordered: 0 < rho_lt <= rho_gt.
struct RadialKernel {
    SpectralMode mode;
    double rho_lt;
    double rho_gt;
};

RadialKernel make_radial_kernel(const SpectralMode& mode, double rho, double rho_prime);

// I_nu(lambda rho_<) K_nu(lambda rho_>); symmetric in (rho, rho') and positive.
double radial_green(const SpectralMode& mode, double rho, double rho_prime);

// One-sided derivative jump of the kernel across rho = rho', estimated by
// the centered second difference [g(r+h) - 2g(r) + g(r-h)]/h.  Approaches
// -1/rho' as h -> 0 (the Wronskian of I and K), confirming the delta-source
// normalization.  Throws std::domain_error if h >= rho'/10.
double jump_check(const SpectralMode& mode, double rho_prime, double h);

// Finite-difference residual of g'' + g'/rho - (lambda^2 + nu^2/rho^2) g at
// fixed rho', away from the source point; O(h^2) for the analytic kernel.
double ode_residual(const SpectralMode& mode, double rho, double rho_prime, double h);

// Dirichlet angular eigenfunction sin(m pi phi / beta); exactly zero on the
// wedge faces phi = 0 and phi = beta.
double angular_mode(int m, double beta, double phi);

struct GreenSum {
    double value;
    int terms;
    bool coincidence_warning;  // rho == rho' and phi == phi': log-divergent sum
};

// (2/beta) sum_{m=1}^{m_max} sin(m pi phi/beta) sin(m pi phi'/beta)
//   * I_nu(lambda rho_<) K_nu(lambda rho_>), accumulated in fixed m-order.
GreenSum green_partial_sum(double beta, double phi, double phi_prime, double rho,
                           double rho_prime, double lambda_e, int m_max);

}  // namespace casimir::greenfn
