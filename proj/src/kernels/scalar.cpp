#include <cmath>

#include "variants.hpp"

namespace eisenspec::kernels::scalar {

std::complex<double> coset_row_sum(double cx, double cy2, std::span<const double> d, double sigma,
                                   double tau) {
    double re = 0.0;
    double im = 0.0;
    for (double dk : d) {
        const double u = cx + dk;
        const double logq = std::log(u * u + cy2);
        const double mag = std::exp(-sigma * logq);
        const double phase = tau * logq;
        re += mag * std::cos(phase);
        im -= mag * std::sin(phase);
    }
    return {re, im};
}

BesselSum bessel_integrand_sum(std::span<const double> t, std::span<const double> cosh_t, double x,
                               std::complex<double> nu) {
    const double a = nu.real();
    const double b = nu.imag();
    double re = 0.0;
    double im = 0.0;
    double mag = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double base = -x * cosh_t[k];
        const double up = std::exp(base + a * t[k]);
        const double down = std::exp(base - a * t[k]);
        const double c = std::cos(b * t[k]);
        const double s = std::sin(b * t[k]);
        re += 0.5 * (up + down) * c;
        im += 0.5 * (up - down) * s;
        mag += 0.5 * (up + down);
    }
    return {{re, im}, mag};
}

void exp_array(std::span<const double> in, std::span<double> out) {
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = std::exp(in[k]);
}

void log_array(std::span<const double> in, std::span<double> out) {
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = std::log(in[k]);
}

void sincos_array(std::span<const double> in, std::span<double> s, std::span<double> c) {
    for (std::size_t k = 0; k < in.size(); ++k) {
        s[k] = std::sin(in[k]);
        c[k] = std::cos(in[k]);
    }
}

}  // namespace eisenspec::kernels::scalar
