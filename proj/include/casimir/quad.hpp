// casimir-wedge: adaptive double-exponential quadrature on [0, inf), plus the
// numerical check of the Bessel product integral against its closed form.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "casimir/specfun.hpp"

namespace casimir::quad {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // >= 0, bound on the achieved error
    long evaluations = 0;         // >= 1
};

// Thrown when the error estimate does not fall below tolerance within the
// evaluation budget, or when the integrand produces NaN/Inf.
struct QuadratureError : std::runtime_error {
    QuadratureResult partial;
    QuadratureError(const std::string& msg, QuadratureResult p)
        : std::runtime_error(msg), partial(p) {}
};

// Integrate f over [0, inf).  The integrand must be finite on (0, inf) and
// decay at least exponentially or like t^{-2}.  Transformation is exp-sinh
// (t = exp((pi/2) sinh u)) with level-doubling trapezoid refinement.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& integrand,
                                         double abs_tol, double rel_tol);

struct IntegralIdentity {
    double lhs;  // quadrature of int_0^inf t I_nu(t xi rho) K_nu(t rho) dt
    double rhs;  // xi^nu / (rho^2 (1 - xi^2))
};

// Evaluates both sides of the Bessel product integral
//   int_0^inf t I_nu(xi rho t) K_nu(rho t) dt = xi^nu / (rho^2 (1 - xi^2)),
// for 0 < xi < 1 (Gradshteyn & Ryzhik 6.521.3).  The integrand is assembled
// from scaled Bessel pairs so the exponential decay is applied analytically.
IntegralIdentity verify_integral_formula(specfun::BesselOrder order, double xi, double rho);

}  // namespace casimir::quad
