// casimir-wedge: renormalized vacuum stress <T^phiphi> and Casimir torque
// density for a perfectly conducting wedge of opening angle beta.
//
// Pipeline: point-split regulated mode sums, renormalization by subtracting
// the beta = pi (free-space) value at the same regulator, extrapolation of
// the regulator to zero, and the closed forms the limit reproduces:
//   <T^phiphi>_ren = -(hbar c / (480 pi^2 rho^4)) (pi^4/beta^4 - 1)
//   N = -(1/rho) d<T^phiphi>/dbeta = -pi^2 hbar c / (120 rho^5 beta^5)

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace casimir::wedge {

// Opening angle beta in (0, 2 pi] and radial distance rho > 0.
class WedgeGeometry {
public:
    WedgeGeometry(double beta, double rho);  // throws std::domain_error on violation
    double beta() const noexcept { return beta_; }
    double rho() const noexcept { return rho_; }

private:
    double beta_, rho_;
};

// Radial point-splitting regulator: rho_< = xi rho with xi = e^{-epsilon}.
class PointSplitting {
public:
    static PointSplitting from_epsilon(double epsilon);
    static PointSplitting from_xi(double xi);
    double xi() const noexcept { return xi_; }
    double epsilon() const noexcept { return epsilon_; }

private:
    PointSplitting(double xi, double epsilon) : xi_(xi), epsilon_(epsilon) {}
    double xi_, epsilon_;
};

struct PhysicalConstants {
    double hbar_c = 1.0;  // energy * length
    static PhysicalConstants natural() { return {1.0}; }
    // CODATA product hbar * c = 1.054571817e-34 J s * 2.99792458e8 m/s.
    static PhysicalConstants si() { return {3.16152677e-26}; }
};

enum class Method { closed_form, series_extrapolated };

const char* method_name(Method m);

struct StressResult {
    double value;           // units hbar_c * length^-4
    double error_estimate;  // >= 0
    Method method;
};

// Audit trail of the xi -> 1 (epsilon -> 0) limit.
struct ExtrapolationTrace {
    std::vector<double> epsilons;  // strictly decreasing
    std::vector<double> values;    // regulated sums, same length
    double extrapolant = 0.0;
    double error_estimate = 0.0;
};

struct TorqueResult {
    double value;  // units hbar_c * length^-5 per radian; < 0 (attraction)
    WedgeGeometry geometry;
};

struct ExtrapolationError : std::runtime_error {
    ExtrapolationTrace trace;
    ExtrapolationError(const std::string& msg, ExtrapolationTrace t)
        : std::runtime_error(msg), trace(std::move(t)) {}
};

struct AccuracyLossError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SumMode {
    regularized,  // cancellation-safe closed form (default)
    direct        // brute-force summation check, epsilon >= 1e-2 only
};

// m-th term of the regulated wedge sum at fixed xi, natural units:
//   (1/(2 pi^2 rho^4)) (pi/beta)^3 m^2 xi^{m pi/beta} / (1 - xi^2).
double tphiphi_mode_term(int m, const WedgeGeometry& geom, const PointSplitting& split);

// Wedge sum minus the beta = pi sum at the same regulator.  Both sums
// diverge like epsilon^-4 as xi -> 1; the difference is O(1) and is
// evaluated without catastrophic cancellation.
double regulated_sum(const WedgeGeometry& geom, const PointSplitting& split,
                     SumMode mode = SumMode::regularized);

// Extrapolates regulated_sum over epsilon_k = (1/16) 2^-k, k = 0..6, to
// epsilon = 0 by Neville's scheme.  Natural units.
std::pair<StressResult, ExtrapolationTrace> tphiphi_renormalized(const WedgeGeometry& geom,
                                                                 double tol);

// Closed form of the renormalized stress component.
StressResult tphiphi_closed(const WedgeGeometry& geom,
                            const PhysicalConstants& consts = PhysicalConstants::natural());

// Torque density per unit height about the wedge axis.
TorqueResult torque_density(const WedgeGeometry& geom,
                            const PhysicalConstants& consts = PhysicalConstants::natural());

// <T^phiphi> d^4 in hbar c units at rho = d/beta; tends to -pi^2/480 as
// beta -> 0 (the parallel-plate configuration at separation d).
double parallel_plate_limit(double d, double beta);

}  // namespace casimir::wedge
