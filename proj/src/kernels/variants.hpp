#pragma once

// Internal: per-ISA entry points behind the dispatcher.

#include <complex>
#include <span>

#include "eisenspec/kernels/kernels.hpp"

namespace eisenspec::kernels::scalar {
std::complex<double> coset_row_sum(double cx, double cy2, std::span<const double> d, double sigma,
                                   double tau);
BesselSum bessel_integrand_sum(std::span<const double> t, std::span<const double> cosh_t, double x,
                               std::complex<double> nu);
void exp_array(std::span<const double> in, std::span<double> out);
void log_array(std::span<const double> in, std::span<double> out);
void sincos_array(std::span<const double> in, std::span<double> s, std::span<double> c);
}  // namespace eisenspec::kernels::scalar

#if defined(EISENSPEC_HAVE_AVX2_TU)
namespace eisenspec::kernels::avx2 {
std::complex<double> coset_row_sum(double cx, double cy2, std::span<const double> d, double sigma,
                                   double tau);
BesselSum bessel_integrand_sum(std::span<const double> t, std::span<const double> cosh_t, double x,
                               std::complex<double> nu);
void exp_array(std::span<const double> in, std::span<double> out);
void log_array(std::span<const double> in, std::span<double> out);
void sincos_array(std::span<const double> in, std::span<double> s, std::span<double> c);
}  // namespace eisenspec::kernels::avx2
#endif
