// casimir-wedge: radial Green kernel and its structural verification.

#include "casimir/greenfn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir::greenfn {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_beta(double beta)
{
    if (!std::isfinite(beta) || !(beta > 0.0) || !(beta <= 2.0 * kPi))
        throw std::domain_error("beta must lie in (0, 2*pi] (got " + std::to_string(beta) +
                                ")");
}

void validate_radius(const char* name, double r)
{
    if (!std::isfinite(r) || !(r > 0.0))
        throw std::domain_error(std::string(name) + " must be > 0 (got " + std::to_string(r) +
                                ")");
}

}  // namespace

SpectralMode make_mode(int m, double beta, double lambda_e)
{
    if (m < 1) throw std::domain_error("m must be >= 1 (got " + std::to_string(m) + ")");
    validate_beta(beta);
    validate_radius("lambda_e", lambda_e);
    return {m, m * kPi / beta, lambda_e};
}

SpectralMode make_mode_with_order(int m, specfun::BesselOrder order, double lambda_e)
{
    if (m < 1) throw std::domain_error("m must be >= 1 (got " + std::to_string(m) + ")");
    validate_radius("lambda_e", lambda_e);
    return {m, order.value(), lambda_e};
}

RadialKernel make_radial_kernel(const SpectralMode& mode, double rho, double rho_prime)
{
    validate_radius("rho", rho);
    validate_radius("rho_prime", rho_prime);
    if (rho <= rho_prime) return {mode, rho, rho_prime};
    return {mode, rho_prime, rho};
}

double radial_green(const SpectralMode& mode, double rho, double rho_prime)
{
    const RadialKernel kernel = make_radial_kernel(mode, rho, rho_prime);
    const specfun::BesselOrder order(kernel.mode.nu);
    const double nu = kernel.mode.nu;
    const double a = kernel.mode.lambda_e * kernel.rho_lt;
    const double b = kernel.mode.lambda_e * kernel.rho_gt;
    // Large-order tail where K_nu alone exceeds double range: the product is
    // still finite and tends to (a/b)^nu/(2 nu); the O(b^2/nu) correction is
    // negligible under the (rho_lt/rho_gt)^nu suppression of such terms.
    if (nu > 0.0 && nu * std::log(2.0 / a) + std::lgamma(nu) > 690.0)
        return std::pow(kernel.rho_lt / kernel.rho_gt, nu) / (2.0 * nu);
    const auto lo = specfun::bessel_ik_scaled(order, a);
    const auto hi = specfun::bessel_ik_scaled(order, b);
    return lo.i_scaled * hi.k_scaled * std::exp(a - b);
}

double jump_check(const SpectralMode& mode, double rho_prime, double h)
{
    validate_radius("rho_prime", rho_prime);
    if (!(h > 0.0) || h >= rho_prime / 10.0)
        throw std::domain_error("jump_check: h must satisfy 0 < h < rho_prime/10 (got " +
                                std::to_string(h) + ")");
    const double gp = radial_green(mode, rho_prime + h, rho_prime);
    const double g0 = radial_green(mode, rho_prime, rho_prime);
    const double gm = radial_green(mode, rho_prime - h, rho_prime);
    return (gp - 2.0 * g0 + gm) / h;
}

double ode_residual(const SpectralMode& mode, double rho, double rho_prime, double h)
{
    validate_radius("rho", rho);
    validate_radius("rho_prime", rho_prime);
    if (!(h > 0.0) || h >= rho / 10.0)
        throw std::domain_error("ode_residual: h must satisfy 0 < h < rho/10 (got " +
                                std::to_string(h) + ")");
    if (std::fabs(rho - rho_prime) <= 2.0 * h)
        throw std::domain_error(
            "ode_residual: stencil must stay clear of the source point rho_prime");
    const double gp = radial_green(mode, rho + h, rho_prime);
    const double g0 = radial_green(mode, rho, rho_prime);
    const double gm = radial_green(mode, rho - h, rho_prime);
    const double d2 = (gp - 2.0 * g0 + gm) / (h * h);
    const double d1 = (gp - gm) / (2.0 * h);
    const double lam = mode.lambda_e;
    return d2 + d1 / rho - (lam * lam + mode.nu * mode.nu / (rho * rho)) * g0;
}

double angular_mode(int m, double beta, double phi)
{
    if (m < 1) throw std::domain_error("m must be >= 1 (got " + std::to_string(m) + ")");
    validate_beta(beta);
    if (!(phi >= 0.0) || !(phi <= beta))
        throw std::domain_error("phi must lie in [0, beta] (got " + std::to_string(phi) + ")");
    if (phi == 0.0 || phi == beta) return 0.0;  // walls are exact zeros of sin(m pi phi/beta)
    return std::sin(m * kPi * phi / beta);
}

GreenSum green_partial_sum(double beta, double phi, double phi_prime, double rho,
                           double rho_prime, double lambda_e, int m_max)
{
    validate_beta(beta);
    validate_radius("rho", rho);
    validate_radius("rho_prime", rho_prime);
    if (m_max < 1)
        throw std::domain_error("m_max must be >= 1 (got " + std::to_string(m_max) + ")");

    const bool coincident = (rho == rho_prime) && (phi == phi_prime);
    double sum = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        const double angular = angular_mode(m, beta, phi) * angular_mode(m, beta, phi_prime);
        if (angular == 0.0) continue;
        sum += angular * radial_green(make_mode(m, beta, lambda_e), rho, rho_prime);
    }
    return {(2.0 / beta) * sum, m_max, coincident};
}

}  // namespace casimir::greenfn
