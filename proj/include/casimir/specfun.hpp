// casimir-wedge: modified Bessel functions I_nu, K_nu of real order nu >= 0,
// including overflow-safe exponentially scaled variants.

#pragma once

namespace casimir::specfun {

// Non-negative real order of a modified Bessel function.
class BesselOrder {
public:
    explicit BesselOrder(double nu);  // throws std::domain_error unless finite and >= 0
    double value() const noexcept { return nu_; }

private:
    double nu_;
};

// Overflow-safe pair e^{-x} I_nu(x), e^{x} K_nu(x) at a common argument x > 0.
// The scalings cancel in the product, so product() equals I_nu(x) K_nu(x).
struct ScaledPair {
    double i_scaled;  // e^{-x} I_nu(x), > 0
    double k_scaled;  // e^{+x} K_nu(x), > 0
    double x;
    double product() const noexcept { return i_scaled * k_scaled; }
};

// I_nu(x) for x >= 0.  Throws std::domain_error for x < 0 and
// std::overflow_error when the unscaled value exceeds double range
// (switch to bessel_ik_scaled in that regime).
double bessel_i(BesselOrder order, double x);

// K_nu(x) for x > 0.  Throws std::domain_error for x <= 0 and
// std::overflow_error when the value exceeds double range.
double bessel_k(BesselOrder order, double x);

// Both scaled functions at once; valid for x up to at least 1e6 without
// overflow for orders of moderate size.
ScaledPair bessel_ik_scaled(BesselOrder order, double x);

}  // namespace casimir::specfun
