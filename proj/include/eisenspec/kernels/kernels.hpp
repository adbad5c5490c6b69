#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference built on
// <cmath> and, on x86-64, an AVX2+FMA variant. The variant is chosen once at
// runtime from CPUID; EISENSPEC_SIMD=scalar|avx2|auto overrides the choice.
// Equivalence of the variants is checked in tests/test_kernels.cpp.

#include <complex>
#include <span>
#include <string_view>

namespace eisenspec::kernels {

enum class Isa { Scalar, Avx2 };

[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;
[[nodiscard]] bool isa_available(Isa isa) noexcept;
/// The variant used by the Isa-less overloads.
[[nodiscard]] Isa active_isa() noexcept;

/// sum_k exp(-s * log q_k), q_k = (cx + d_k)^2 + cy2, with s = sigma + i*tau.
/// One row of the coset sum for fixed c (cx = c*x, cy2 = (c*y)^2).
std::complex<double> coset_row_sum(Isa isa, double cx, double cy2, std::span<const double> d,
                                   double sigma, double tau);

struct BesselSum {
    std::complex<double> sum;  // sum_k exp(-x cosh t_k) cosh(nu t_k)
    double magnitude;          // sum_k exp(-x cosh t_k) cosh(Re(nu) t_k), bounds |terms|
};

/// Trapezoid-node accumulation for the K-Bessel integral representation.
/// cosh_t[k] must equal cosh(t[k]).
BesselSum bessel_integrand_sum(Isa isa, std::span<const double> t, std::span<const double> cosh_t,
                               double x, std::complex<double> nu);

/// Elementwise maps, exposed so the vector math can be tested on its own.
void exp_array(Isa isa, std::span<const double> in, std::span<double> out);
void log_array(Isa isa, std::span<const double> in, std::span<double> out);
void sincos_array(Isa isa, std::span<const double> in, std::span<double> sin_out,
                  std::span<double> cos_out);

inline std::complex<double> coset_row_sum(double cx, double cy2, std::span<const double> d,
                                          double sigma, double tau) {
    return coset_row_sum(active_isa(), cx, cy2, d, sigma, tau);
}

inline BesselSum bessel_integrand_sum(std::span<const double> t, std::span<const double> cosh_t,
                                      double x, std::complex<double> nu) {
    return bessel_integrand_sum(active_isa(), t, cosh_t, x, nu);
}

}  // namespace eisenspec::kernels
