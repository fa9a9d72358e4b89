// casimir-wedge: regulated mode sums, renormalization, and closed forms.

#include "casimir/wedge.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace casimir::wedge {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPiSq = 2.0 * kPi * kPi;

// S(a) = sum_{m>=1} m^2 e^{-m a} = 2/a^3 - a/120 + h(a), with h regular at 0.
// Closed form via the geometric series: S(a) = x(1+x)/(1-x)^3, x = e^{-a}.
double mode_sum_closed(double a)
{
    const double x = std::exp(-a);
    const double one_minus = -std::expm1(-a);  // 1 - x without cancellation
    return x * (1.0 + x) / (one_minus * one_minus * one_minus);
}

// Odd-series coefficients of h(a) = sum_j B_{2j+4}/((2j+4)(2j+1)!) a^{2j+1}:
// h(a) = a^3/1512 - a^5/28800 + ...
constexpr double kHCoeff[] = {
    6.61375661375661376e-4,    // a^3
    -3.47222222222222222e-5,   // a^5
    1.50312650312650313e-6,    // a^7
    -5.81260915255624250e-8,   // a^9
    2.08767569878680990e-9,    // a^11
    -7.11832862227742402e-11,  // a^13
    2.33540887930757372e-12,   // a^15
    -7.43805094906857161e-14,  // a^17
    2.31378118791129640e-15,   // a^19
    -7.06095913102113681e-17,  // a^21
    2.12082422377768048e-18,   // a^23
    -6.28536923378035789e-20,  // a^25
};

double h_regular(double a)
{
    if (a < 0.5) {
        const double a2 = a * a;
        double acc = 0.0;
        for (int j = static_cast<int>(sizeof(kHCoeff) / sizeof(double)) - 1; j >= 0; --j)
            acc = acc * a2 + kHCoeff[j];
        return acc * a2 * a;
    }
    return mode_sum_closed(a) - 2.0 / (a * a * a) + a / 120.0;
}

// Rounding contribution of one h evaluation (the direct branch subtracts
// quantities of size 2/a^3).
double h_round_error(double a)
{
    if (a < 0.5) return 0.0;
    return 3.0 * kEps * (2.0 / (a * a * a) + a / 120.0 + 1.0);
}

struct KahanAccumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x)
    {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// sum_{m>=1} m^2 e^{-m a} by direct compensated summation, truncated when
// e^{-m a} drops below 1e-18 of the accumulated total.
double mode_sum_direct(double a)
{
    KahanAccumulator acc;
    for (long m = 1; m < 100000000L; ++m) {
        const double term = static_cast<double>(m) * static_cast<double>(m) *
                            std::exp(-static_cast<double>(m) * a);
        acc.add(term);
        if (term < 1.0e-18 * acc.sum) break;
    }
    return acc.sum;
}

double one_minus_xi_sq(double epsilon) { return -std::expm1(-2.0 * epsilon); }

void validate_trivial_tol(double tol)
{
    if (!(tol > 0.0))
        throw std::domain_error("tol must be > 0 (got " + std::to_string(tol) + ")");
}

}  // namespace

WedgeGeometry::WedgeGeometry(double beta, double rho) : beta_(beta), rho_(rho)
{
    if (!std::isfinite(beta) || !(beta > 0.0) || !(beta <= 2.0 * kPi))
        throw std::domain_error("beta must lie in (0, 2*pi] (got " + std::to_string(beta) +
                                ")");
    if (!std::isfinite(rho) || !(rho > 0.0))
        throw std::domain_error("rho must be > 0 (got " + std::to_string(rho) + ")");
}

PointSplitting PointSplitting::from_epsilon(double epsilon)
{
    if (!std::isfinite(epsilon) || !(epsilon > 0.0))
        throw std::domain_error("epsilon must be > 0 (got " + std::to_string(epsilon) + ")");
    return PointSplitting(std::exp(-epsilon), epsilon);
}

PointSplitting PointSplitting::from_xi(double xi)
{
    if (!std::isfinite(xi) || !(xi > 0.0) || !(xi < 1.0))
        throw std::domain_error("xi must lie in (0, 1) (got " + std::to_string(xi) + ")");
    return PointSplitting(xi, -std::log(xi));
}

const char* method_name(Method m)
{
    return m == Method::closed_form ? "closed_form" : "series_extrapolated";
}

double tphiphi_mode_term(int m, const WedgeGeometry& geom, const PointSplitting& split)
{
    if (m < 1) throw std::domain_error("m must be >= 1 (got " + std::to_string(m) + ")");
    const double p = kPi / geom.beta();
    const double rho2 = geom.rho() * geom.rho();
    const double prefactor = p * p * p / (kTwoPiSq * rho2 * rho2);
    const double md = static_cast<double>(m);
    return prefactor * md * md * std::exp(-md * p * split.epsilon()) /
           one_minus_xi_sq(split.epsilon());
}

double regulated_sum(const WedgeGeometry& geom, const PointSplitting& split, SumMode mode)
{
    const double p = kPi / geom.beta();
    const double eps = split.epsilon();
    const double p3 = p * p * p;
    const double p4 = p3 * p;
    const double rho2 = geom.rho() * geom.rho();
    const double denom = kTwoPiSq * rho2 * rho2 * one_minus_xi_sq(eps);

    if (mode == SumMode::direct) {
        if (eps < 1.0e-2)
            throw std::domain_error(
                "direct summation mode requires epsilon >= 1e-2 (got " + std::to_string(eps) +
                "); use the regularized mode");
        return (p3 * mode_sum_direct(p * eps) - mode_sum_direct(eps)) / denom;
    }

    // p^3 S(p eps) - S(eps) with the common 2/eps^3 part cancelled exactly:
    const double hw = h_regular(p * eps);
    const double hf = h_regular(eps);
    const double linear = (p4 - 1.0) * eps / 120.0;
    const double bracket = p3 * hw - hf - linear;

    const double round_err =
        (kEps * (p3 * std::fabs(hw) + std::fabs(hf) + std::fabs(linear)) +
         p3 * h_round_error(p * eps) + h_round_error(eps)) /
        denom * 4.0;
    if (round_err > 1.0e-10)
        throw AccuracyLossError(
            "regulated_sum: cancellation-safe path cannot deliver 1e-10 absolute at epsilon=" +
            std::to_string(eps) + " for beta=" + std::to_string(geom.beta()));

    return bracket / denom;
}

std::pair<StressResult, ExtrapolationTrace> tphiphi_renormalized(const WedgeGeometry& geom,
                                                                 double tol)
{
    validate_trivial_tol(tol);

    constexpr int kPoints = 7;
    ExtrapolationTrace trace;
    trace.epsilons.reserve(kPoints);
    trace.values.reserve(kPoints);

    // Neville tableau in epsilon toward 0; diag[i] holds the degree-i column.
    std::array<double, kPoints> diag{};
    double previous_extrapolant = 0.0;

    double eps = 1.0 / 16.0;
    for (int k = 0; k < kPoints; ++k, eps *= 0.5) {
        const double value = regulated_sum(geom, PointSplitting::from_epsilon(eps));
        trace.epsilons.push_back(eps);
        trace.values.push_back(value);

        // diag[m] holds the polynomial through nodes m..k-1 evaluated at 0;
        // one sweep updates it to the row ending at node k.
        double current = value;
        for (int i = k - 1; i >= 0; --i) {
            const double xi_node = trace.epsilons[i];
            const double xk_node = trace.epsilons[k];
            const double updated =
                (xi_node * current - xk_node * diag[i]) / (xi_node - xk_node);
            diag[i + 1] = current;
            current = updated;
        }
        diag[0] = current;
        if (k > 0) previous_extrapolant = trace.extrapolant;
        trace.extrapolant = current;
    }
    trace.error_estimate = std::fabs(trace.extrapolant - previous_extrapolant);

    if (!std::isfinite(trace.extrapolant) || trace.error_estimate > tol)
        throw ExtrapolationError("extrapolation did not stabilize below tol=" +
                                     std::to_string(tol),
                                 trace);

    StressResult result{trace.extrapolant, trace.error_estimate, Method::series_extrapolated};
    return {result, trace};
}

StressResult tphiphi_closed(const WedgeGeometry& geom, const PhysicalConstants& consts)
{
    const double p = kPi / geom.beta();
    const double p4 = (p * p) * (p * p);
    const double rho2 = geom.rho() * geom.rho();
    const double value = -consts.hbar_c * (p4 - 1.0) / (480.0 * kPi * kPi * rho2 * rho2);
    return {value, 0.0, Method::closed_form};
}

TorqueResult torque_density(const WedgeGeometry& geom, const PhysicalConstants& consts)
{
    const double rho = geom.rho();
    const double beta = geom.beta();
    const double rho5 = rho * rho * rho * rho * rho;
    const double beta5 = beta * beta * beta * beta * beta;
    const double value = -kPi * kPi * consts.hbar_c / (120.0 * rho5 * beta5);
    return {value, geom};
}

double parallel_plate_limit(double d, double beta)
{
    if (!std::isfinite(d) || !(d > 0.0))
        throw std::domain_error("d must be > 0 (got " + std::to_string(d) + ")");
    const WedgeGeometry geom(beta, d / beta);
    const double d2 = d * d;
    return tphiphi_closed(geom).value * d2 * d2;
}

}  // namespace casimir::wedge
