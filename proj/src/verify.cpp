// casimir-wedge: verification suites (special functions, integral identity,
// stress/torque oracles, Green-kernel structure).

#include "casimir/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "casimir/greenfn.hpp"
#include "casimir/quad.hpp"
#include "casimir/specfun.hpp"
#include "casimir/wedge.hpp"

namespace casimir::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

using specfun::BesselOrder;
using specfun::bessel_i;
using specfun::bessel_ik_scaled;
using specfun::bessel_k;

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

CheckResult make_result(std::string suite, std::string name, double observed, double threshold,
                        std::string detail = {})
{
    return {std::move(suite), std::move(name), observed <= threshold, observed, threshold,
            std::move(detail)};
}

// I and K at possibly negative order, for the derivative recurrences at
// nu < 1: K is even in the order, and I_{-nu} = I_nu + (2/pi) sin(nu pi) K_nu.
double bessel_i_any(double nu, double x)
{
    if (nu >= 0.0) return bessel_i(BesselOrder(nu), x);
    const double pos = -nu;
    if (pos == std::floor(pos)) return bessel_i(BesselOrder(pos), x);
    return bessel_i(BesselOrder(pos), x) +
           (2.0 / kPi) * std::sin(pos * kPi) * bessel_k(BesselOrder(pos), x);
}

double bessel_k_any(double nu, double x) { return bessel_k(BesselOrder(std::fabs(nu)), x); }

// I'_nu and K'_nu from the three-term recurrences.
double i_prime(double nu, double x)
{
    return 0.5 * (bessel_i_any(nu - 1.0, x) + bessel_i(BesselOrder(nu + 1.0), x));
}

double k_prime(double nu, double x)
{
    return -0.5 * (bessel_k_any(nu - 1.0, x) + bessel_k(BesselOrder(nu + 1.0), x));
}

const double kNuGrid[] = {0.0, 0.5, 1.0, 1.7, kPi, 10.0, 50.0};
const double kXGrid[] = {0.1, 1.0, 2.0, 10.0, 100.0};

void specfun_suite(std::vector<CheckResult>& out)
{
    // Wronskian x (I K' - I' K) = -1 across the order/argument grid.
    double worst = 0.0;
    for (double nu : kNuGrid)
        for (double x : kXGrid) {
            const double w = x * (bessel_i(BesselOrder(nu), x) * k_prime(nu, x) -
                                  i_prime(nu, x) * bessel_k(BesselOrder(nu), x));
            worst = std::max(worst, std::fabs(w + 1.0));
        }
    out.push_back(make_result("specfun", "wronskian_identity", worst, 1.0e-10,
                              "max |x(IK'-I'K)+1| on the order/argument grid"));

    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}.
    worst = 0.0;
    for (double x : {0.5, 1.0, 5.0}) {
        const double exact = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        worst = std::max(worst, std::fabs(bessel_k(BesselOrder(0.5), x) / exact - 1.0));
    }
    out.push_back(make_result("specfun", "half_order_closed_form", worst, 1.0e-12,
                              "K_1/2 against sqrt(pi/2x) e^-x"));

    // Monotonicity in x and positivity.
    int violations = 0;
    for (double nu : kNuGrid) {
        double prev_i = -1.0, prev_k = -1.0;
        for (double x : kXGrid) {
            const double iv = bessel_i(BesselOrder(nu), x);
            const double kv = bessel_k(BesselOrder(nu), x);
            if (!(iv > 0.0) || !(kv > 0.0)) ++violations;
            if (prev_i >= 0.0 && !(iv > prev_i)) ++violations;
            if (prev_k >= 0.0 && !(kv < prev_k)) ++violations;
            prev_i = iv;
            prev_k = kv;
        }
    }
    out.push_back(make_result("specfun", "monotonic_positive", violations, 0.5,
                              "I increasing, K decreasing, both positive"));

    // e^{-x} bessel_i equals the scaled variant.
    worst = 0.0;
    for (double nu : kNuGrid)
        for (double x : {0.5, 1.0, 10.0, 100.0, 600.0}) {
            const auto pair = bessel_ik_scaled(BesselOrder(nu), x);
            const double unscaled = std::exp(-x) * bessel_i(BesselOrder(nu), x);
            worst = std::max(worst, std::fabs(unscaled / pair.i_scaled - 1.0));
        }
    out.push_back(make_result("specfun", "scaled_consistency", worst, 1.0e-13,
                              "e^-x I_nu vs i_scaled"));

    // Large-x product asymptotics and overflow safety of the scaled pair.
    const auto p700 = bessel_ik_scaled(BesselOrder(0.0), 700.0);
    const double asym_err = std::fabs(p700.product() * 2.0 * 700.0 - 1.0);
    violations = 0;
    for (double nu : {0.0, 5.5})
        for (double x : {1.0e3, 1.0e4, 1.0e5, 1.0e6}) {
            const auto p = bessel_ik_scaled(BesselOrder(nu), x);
            if (!std::isfinite(p.i_scaled) || !std::isfinite(p.k_scaled) ||
                !(p.i_scaled > 0.0) || !(p.k_scaled > 0.0))
                ++violations;
        }
    out.push_back(make_result("specfun", "scaled_large_x", asym_err + violations, 0.01,
                              "I K -> 1/(2x) at x=700; finite up to x=1e6"));
}

void quad_suite(std::vector<CheckResult>& out, double tol)
{
    const auto q1 =
        quad::integrate_semi_infinite([](double t) { return std::exp(-t); }, 1e-12, 1e-12);
    const auto q2 = quad::integrate_semi_infinite(
        [](double t) { return t * std::exp(-t * t); }, 1e-12, 1e-12);
    const double trivial_err =
        std::max(std::fabs(q1.value - 1.0), std::fabs(q2.value - 0.5));
    out.push_back(make_result("quad", "trivial_integrals", trivial_err, 1.0e-12,
                              "int e^-t dt and int t e^-t^2 dt"));

    const double nus[] = {0.5, 1.0, 2.0, kPi, 3.5, 2.0 * kPi};
    const double xis[] = {0.3, 0.5, 0.9, 0.99};
    double worst = 0.0;
    for (double nu : nus)
        for (double xi : xis)
            for (double rho : {1.0, 2.0}) {
                const auto id = quad::verify_integral_formula(BesselOrder(nu), xi, rho);
                worst = std::max(worst, std::fabs(id.lhs / id.rhs - 1.0));
            }
    out.push_back(make_result("quad", "integral_identity", worst, tol,
                              "quadrature vs xi^nu/(rho^2(1-xi^2)), 48 cases"));

    // lhs scales as rho^-2.
    worst = 0.0;
    double ref = 0.0;
    bool first = true;
    for (double rho : {0.5, 1.0, 2.0, 10.0}) {
        const auto id = quad::verify_integral_formula(BesselOrder(2.0), 0.5, rho);
        const double scaled = id.lhs * rho * rho;
        if (first) {
            ref = scaled;
            first = false;
        } else {
            worst = std::max(worst, std::fabs(scaled / ref - 1.0));
        }
    }
    out.push_back(make_result("quad", "rho_scaling", worst, 1.0e-8,
                              "lhs * rho^2 invariant over rho in {0.5,1,2,10}"));
}

void wedge_suite(std::vector<CheckResult>& out, double tol)
{
    using namespace casimir::wedge;

    const double betas[] = {kPi / 4.0, kPi / 2.0, 2.0 * kPi / 3.0, kPi, 1.5 * kPi, 2.0 * kPi};

    // Series+extrapolation route against the closed form.
    double worst = 0.0;
    for (double beta : betas)
        for (double rho : {0.5, 1.0, 3.0}) {
            const WedgeGeometry geom(beta, rho);
            const auto closed = tphiphi_closed(geom);
            const auto [series, trace] = tphiphi_renormalized(geom, tol);
            const double scale = std::max(1.0e-6, std::fabs(closed.value));
            worst = std::max(worst, std::fabs(series.value - closed.value) / scale);
        }
    out.push_back(make_result("wedge", "oracle_equivalence", worst, 1.0e-7,
                              "series-extrapolated vs closed form, 18 geometries"));

    // Torque against the centered finite difference of the closed form.
    worst = 0.0;
    const double h = 1.0e-4;
    for (double beta : {kPi / 4.0, kPi / 2.0, 2.0 * kPi / 3.0, kPi, 1.5 * kPi})
        for (double rho : {0.5, 1.0, 3.0}) {
            const double tp = tphiphi_closed(WedgeGeometry(beta + h, rho)).value;
            const double tm = tphiphi_closed(WedgeGeometry(beta - h, rho)).value;
            const double fd = -(tp - tm) / (2.0 * h * rho);
            const double analytic = torque_density(WedgeGeometry(beta, rho)).value;
            worst = std::max(worst, std::fabs(fd / analytic - 1.0));
        }
    out.push_back(make_result("wedge", "torque_consistency", worst, 1.0e-6,
                              "-(1/rho) dT/dbeta finite difference vs analytic"));

    // Sign structure of stress and torque.
    int violations = 0;
    for (double beta : betas) {
        const double t = tphiphi_closed(WedgeGeometry(beta, 1.0)).value;
        if (beta < kPi && !(t < 0.0)) ++violations;
        if (beta == kPi && t != 0.0) ++violations;
        if (beta > kPi && !(t > 0.0)) ++violations;
        if (!(torque_density(WedgeGeometry(beta, 1.0)).value < 0.0)) ++violations;
    }
    out.push_back(make_result("wedge", "sign_structure", violations, 0.5,
                              "stress sign flips at beta=pi; torque always < 0"));

    // T rho^4 and N rho^5 are rho-independent across two decades.
    worst = 0.0;
    for (double beta : {kPi / 2.0, 1.5 * kPi}) {
        const double t_ref = tphiphi_closed(WedgeGeometry(beta, 1.0)).value;
        const double n_ref = torque_density(WedgeGeometry(beta, 1.0)).value;
        for (double rho : {0.1, 0.3, 1.0, 4.0, 10.0}) {
            const double r2 = rho * rho;
            const double r4 = r2 * r2;
            const double t = tphiphi_closed(WedgeGeometry(beta, rho)).value * r4;
            const double n = torque_density(WedgeGeometry(beta, rho)).value * r4 * rho;
            worst = std::max(worst, std::fabs(t / t_ref - 1.0));
            worst = std::max(worst, std::fabs(n / n_ref - 1.0));
        }
    }
    out.push_back(make_result("wedge", "scaling_laws", worst, 1.0e-12,
                              "T rho^4 and N rho^5 invariant over two decades of rho"));

    // Parallel-plate limit and its O(beta^4) approach.
    const double plate = parallel_plate_limit(1.0, 1.0e-3);
    const double plate_err = std::fabs(plate - (-kPi * kPi / 480.0));
    out.push_back(make_result("wedge", "parallel_plate_value", plate_err, 1.0e-11,
                              "T d^4 at beta=1e-3 vs -pi^2/480"));

    const double d0 = std::fabs(parallel_plate_limit(1.0, 0.1) - (-kPi * kPi / 480.0));
    const double d1 = std::fabs(parallel_plate_limit(1.0, 0.05) - (-kPi * kPi / 480.0));
    const double d2 = std::fabs(parallel_plate_limit(1.0, 0.025) - (-kPi * kPi / 480.0));
    const double ratio_err =
        std::max(std::fabs(d0 / d1 - 16.0), std::fabs(d1 / d2 - 16.0));
    out.push_back(make_result("wedge", "parallel_plate_order", ratio_err, 1.0,
                              "deviation shrinks ~16x per beta halving"));

    // Mode terms against the closed geometric-series sum.
    {
        const WedgeGeometry geom(kPi / 2.0, 1.0);
        const auto split = PointSplitting::from_epsilon(1.0);
        double sum = 0.0;
        for (int m = 60; m >= 1; --m) sum += tphiphi_mode_term(m, geom, split);
        const double p = kPi / geom.beta();
        const double x = std::exp(-p * split.epsilon());
        const double closed_sum = p * p * p * x * (1.0 + x) /
                                  ((1.0 - x) * (1.0 - x) * (1.0 - x)) /
                                  (2.0 * kPi * kPi * (1.0 - split.xi() * split.xi()));
        out.push_back(make_result("wedge", "mode_term_series", std::fabs(sum / closed_sum - 1.0),
                                  1.0e-13, "sum of mode terms vs geometric closed form"));
    }

    // Direct compensated summation agrees with the regularized route.
    worst = 0.0;
    for (double beta : {kPi / 2.0, 1.5 * kPi})
        for (double eps : {0.1, 0.05}) {
            const WedgeGeometry geom(beta, 1.0);
            const auto split = PointSplitting::from_epsilon(eps);
            const double a = regulated_sum(geom, split, SumMode::regularized);
            const double b = regulated_sum(geom, split, SumMode::direct);
            worst = std::max(worst, std::fabs(b / a - 1.0));
        }
    out.push_back(make_result("wedge", "direct_summation_check", worst, 1.0e-6,
                              "brute-force route vs cancellation-safe route"));
}

void greenfn_suite(std::vector<CheckResult>& out)
{
    using namespace casimir::greenfn;

    const double nu_grid[] = {0.5, 1.0, 2.0, 5.0};
    const double lam_grid[] = {0.5, 1.0, 3.0};
    const double rp_grid[] = {0.5, 1.0, 2.0};

    // Source jump -1/rho' within 10 h / rho'^2.
    double worst = 0.0;
    for (double nu : nu_grid)
        for (double lam : lam_grid)
            for (double rp : rp_grid) {
                const auto mode = make_mode_with_order(1, BesselOrder(nu), lam);
                const double h = 1.0e-3 * rp;
                const double err = std::fabs(jump_check(mode, rp, h) + 1.0 / rp);
                worst = std::max(worst, err * rp * rp / (10.0 * h));
            }
    out.push_back(make_result("greenfn", "jump_condition", worst, 1.0,
                              "|jump + 1/rho'| <= 10 h / rho'^2 across the grid"));

    // Homogeneous ODE residual is second order in h.
    worst = 0.0;
    for (double nu : nu_grid)
        for (double lam : lam_grid)
            for (double rp : rp_grid) {
                const auto mode = make_mode_with_order(1, BesselOrder(nu), lam);
                const double rho = 1.7 * rp;
                const double h = 1.0e-2 * rho;
                const double r1 = ode_residual(mode, rho, rp, h);
                const double r2 = ode_residual(mode, rho, rp, h / 2.0);
                worst = std::max(worst, std::fabs(r2 / r1 - 0.25));
            }
    out.push_back(make_result("greenfn", "ode_second_order", worst, 0.05,
                              "residual(h/2)/residual(h) -> 1/4"));

    // Dirichlet walls.
    worst = 0.0;
    const double beta = kPi / 2.0;
    for (double phi : {0.0, beta}) {
        worst = std::max(worst,
                         std::fabs(green_partial_sum(beta, phi, 0.4, 0.5, 1.0, 1.0, 25).value));
        worst = std::max(worst,
                         std::fabs(green_partial_sum(beta, 0.4, phi, 0.5, 1.0, 1.0, 25).value));
    }
    out.push_back(make_result("greenfn", "dirichlet_boundary", worst, 1.0e-15,
                              "partial sum vanishes on the wedge faces"));

    // Kernel symmetry is exact.
    int violations = 0;
    for (double nu : nu_grid)
        for (double lam : lam_grid) {
            const auto mode = make_mode_with_order(1, BesselOrder(nu), lam);
            if (radial_green(mode, 0.7, 1.9) != radial_green(mode, 1.9, 0.7)) ++violations;
        }
    out.push_back(
        make_result("greenfn", "kernel_symmetry", violations, 0.5, "g(rho,rho') == g(rho',rho)"));

    // Geometric mode decay of the radial kernel.
    worst = 0.0;
    for (double ratio : {0.5, 0.9})
        for (double wedge_beta : {kPi / 2.0, kPi}) {
            const double decay = std::pow(ratio, kPi / wedge_beta);
            double prev = 0.0;
            for (int m = 1; m <= 10; ++m) {
                const auto mode = make_mode(m, wedge_beta, 1.0);
                const double g = radial_green(mode, ratio, 1.0);
                if (m > 1) worst = std::max(worst, (g / prev) / (decay * 1.1));
                prev = g;
            }
        }
    out.push_back(make_result("greenfn", "mode_decay", worst, 1.0,
                              "term ratio within (rho_</rho_>)^(pi/beta) (1+0.1)"));
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, double tol)
{
    if (!(tol > 0.0))
        throw std::domain_error("tol must be > 0 (got " + fmt(tol) + ")");
    const bool all = suite == "all";
    if (!all && suite != "specfun" && suite != "quad" && suite != "wedge" &&
        suite != "greenfn")
        throw std::domain_error("suite must be one of all|specfun|quad|wedge|greenfn (got " +
                                suite + ")");

    std::vector<CheckResult> results;
    if (all || suite == "specfun") specfun_suite(results);
    if (all || suite == "quad") quad_suite(results, tol);
    if (all || suite == "wedge") wedge_suite(results, tol);
    if (all || suite == "greenfn") greenfn_suite(results);
    return results;
}

bool all_passed(const std::vector<CheckResult>& results)
{
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace casimir::verify
