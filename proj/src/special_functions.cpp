#include "eisenspec/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "eisenspec/errors.hpp"
#include "eisenspec/kernels/kernels.hpp"

namespace eisenspec::special {

namespace {

using std::numbers::pi;

// B_2, B_4, ..., B_30.
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex stirling_log_gamma(Complex z) {
    const double half_log_two_pi = 0.91893853320467274178;
    Complex result = (z - 0.5) * std::log(z) - z + half_log_two_pi;
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex power = inv;
    for (int k = 1; k <= 10; ++k) {
        const Complex term = kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
        result += term;
        if (std::abs(term) < 1e-18 * std::abs(result)) break;
        power *= inv2;
    }
    return result;
}

}  // namespace

double bernoulli_over_factorial(int k) {
    double factorial = 1.0;
    for (int i = 2; i <= 2 * k; ++i) factorial *= i;
    return kBernoulli.at(static_cast<std::size_t>(k - 1)) / factorial;
}

Complex log_gamma(Complex s) {
    if (!is_finite(s)) throw DomainError("log_gamma: argument must be finite");
    const double nearest = std::round(s.real());
    if (nearest <= 0.0 && std::abs(s - Complex(nearest, 0.0)) < kLogGammaPoleRadius) {
        throw PoleProximityError("log_gamma: argument within 1e-12 of a non-positive integer");
    }
    // log Gamma(s) = log Gamma(s + n) - sum_{k<n} log(s + k); the principal
    // logs add up to the principal branch off the negative real axis.
    Complex shift_sum = 0.0;
    Complex z = s;
    while (z.real() < 15.0) {
        shift_sum += std::log(z);
        z += 1.0;
    }
    return require_finite(stirling_log_gamma(z) - shift_sum, "log_gamma");
}

Complex zeta(Complex s) {
    if (!is_finite(s)) throw DomainError("zeta: argument must be finite");
    if (std::abs(s - 1.0) < kZetaPoleRadius) {
        throw PoleProximityError("zeta: argument within 1e-10 of the pole at s = 1");
    }
    // Left of Re s = -1 the partial sums cancel badly; reflect. Staying
    // off [-1, 0) keeps zeta(1 - s) away from its pole.
    if (s.real() < -1.0) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
        const Complex one_minus = 1.0 - s;
        const Complex log_factor =
            s * std::log(2.0) + (s - 1.0) * std::log(pi) + log_gamma(one_minus);
        return require_finite(std::exp(log_factor) * std::sin(pi * s / 2.0) * zeta(one_minus),
                              "zeta");
    }
    const int n_terms = 30 + static_cast<int>(std::ceil(std::abs(s)));
    const double N = n_terms;
    Complex sum = 0.0;
    for (int n = n_terms - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const Complex n_pow = std::exp(-s * std::log(N));  // N^{-s}
    sum += n_pow * N / (s - 1.0) + 0.5 * n_pow;

    // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Complex rising = s;
    Complex power = n_pow / N;
    for (int k = 1; k <= 15; ++k) {
        const Complex term = bernoulli_over_factorial(k) * rising * power;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        power /= N * N;
    }
    return require_finite(sum, "zeta");
}

Complex completed_zeta(Complex s) {
    if (!is_finite(s)) throw DomainError("completed_zeta: argument must be finite");
    if (std::abs(s) < kXiPoleRadius || std::abs(s - 1.0) < kXiPoleRadius) {
        throw PoleProximityError("completed_zeta: argument within 1e-8 of a pole (s = 0 or 1)");
    }
    if (s.real() < 0.0) return completed_zeta(1.0 - s);
    const Complex log_factor = -0.5 * s * std::log(pi) + log_gamma(0.5 * s);
    return require_finite(std::exp(log_factor) * zeta(s), "completed_zeta");
}

BesselKResult bessel_k(Complex order, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k: x must be > 0");
    if (!is_finite(order) || std::abs(order.real()) > 10.0) {
        throw DomainError("bessel_k: order must satisfy |Re nu| <= 10");
    }
    const double a = std::abs(order.real());
    // Peak of the envelope exp(-x cosh t + a t) and its log-height.
    const double t_peak = std::asinh(a / x);
    const double log_peak = -x * std::cosh(t_peak) + a * t_peak;
    const double log_cut = log_peak - std::log(1e18);
    double t_max = t_peak + 1.0;
    while (-x * std::cosh(t_max) + a * t_max > log_cut) t_max += 0.5;

    // The result is at most t_max * peak; below ~1e-300 report underflow.
    if (log_peak + std::log(t_max) < -705.0) return {Complex(0.0, 0.0), true};

    // Trapezoid over t in [0, t_max]; each refinement adds the midpoints.
    // The kernel sees cosh t - cosh t_peak, so the summands stay near 1 and
    // exp(-x cosh t_peak) is applied once at the end.
    const double c0 = std::cosh(t_peak);
    double h = 0.25;
    std::vector<double> t;
    std::vector<double> ch;
    for (int k = 1; k * h <= t_max; ++k) t.push_back(k * h);
    for (double tk : t) ch.push_back(std::cosh(tk) - c0);
    const double f0 = std::exp(-x * (1.0 - c0));  // integrand at t = 0
    auto acc = kernels::bessel_integrand_sum(t, ch, x, order);
    Complex node_sum = 0.5 * f0 + acc.sum;
    double magnitude = 0.5 * f0 + acc.magnitude;
    Complex estimate = h * node_sum;

    for (int level = 0; level < 12; ++level) {
        const double half = 0.5 * h;
        t.clear();
        ch.clear();
        for (int k = 0; (2 * k + 1) * half <= t_max; ++k) t.push_back((2 * k + 1) * half);
        for (double tk : t) ch.push_back(std::cosh(tk) - c0);
        acc = kernels::bessel_integrand_sum(t, ch, x, order);
        node_sum += acc.sum;
        magnitude += acc.magnitude;
        h = half;
        const Complex refined = h * node_sum;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        const double rounding_floor = 1e-15 * h * magnitude;
        // Convergence is geometric in the level, so a change of 1e-13 leaves
        // an error far below it; the summation noise alone sits near 1e-14.
        if (level >= 1 && (change <= 1e-13 * std::abs(refined) || change <= rounding_floor)) {
            const Complex value = refined * std::exp(-x * c0);
            if (std::abs(value) < std::numeric_limits<double>::min()) return {Complex(0.0, 0.0), true};
            return {require_finite(value, "bessel_k"), false};
        }
    }
    throw ConvergenceError("bessel_k: trapezoidal refinement did not converge");
}

}  // namespace eisenspec::special
