#pragma once

#include <complex>

namespace eisenspec::special {

using Complex = std::complex<double>;

inline constexpr double kLogGammaPoleRadius = 1e-12;
inline constexpr double kZetaPoleRadius = 1e-10;
inline constexpr double kXiPoleRadius = 1e-8;

/// Principal branch of log Gamma(s) (analytic continuation of the real
/// log-gamma on s > 0, cut along the negative real axis). Recurrence shift to
/// Re s >= 15 followed by the Stirling series.
/// Throws PoleProximityError within kLogGammaPoleRadius of 0, -1, -2, ...
Complex log_gamma(Complex s);

/// Riemann zeta via Euler-Maclaurin summation; the reflection formula is used
/// for Re s < -10. Throws PoleProximityError within kZetaPoleRadius of s = 1.
Complex zeta(Complex s);

/// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s), satisfying xi(s) = xi(1 - s).
/// Evaluated directly for Re s >= 0 and through xi(1 - s) otherwise.
/// Throws PoleProximityError within kXiPoleRadius of 0 or 1.
Complex completed_zeta(Complex s);

struct BesselKResult {
    Complex value;
    bool underflow = false;  // true when |K| is below the double range; value is then 0
};

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt for x > 0, |Re nu| <= 10.
/// Trapezoidal rule on the doubly-exponentially decaying integrand, step
/// halved until converged, truncated where the integrand drops below 1e-18
/// of its peak.
BesselKResult bessel_k(Complex order, double x);

/// B_{2k} / (2k)! for k = 1..15, the Euler-Maclaurin coefficients.
double bernoulli_over_factorial(int k);

}  // namespace eisenspec::special
