#include <cstdlib>
#include <stdexcept>
#include <string>

#include "variants.hpp"

namespace eisenspec::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(EISENSPEC_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa detect() noexcept {
    const char* env = std::getenv("EISENSPEC_SIMD");
    const std::string pref = env ? env : "auto";
    if (pref == "scalar") return Isa::Scalar;
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("kernel: array size mismatch");
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
    return isa == Isa::Scalar || cpu_has_avx2();
}

Isa active_isa() noexcept {
    static const Isa isa = detect();
    return isa;
}

#if defined(EISENSPEC_HAVE_AVX2_TU)
#define EISENSPEC_DISPATCH(isa, call) \
    ((isa) == Isa::Avx2 && cpu_has_avx2() ? avx2::call : scalar::call)
#else
#define EISENSPEC_DISPATCH(isa, call) scalar::call
#endif

std::complex<double> coset_row_sum(Isa isa, double cx, double cy2, std::span<const double> d,
                                   double sigma, double tau) {
    return EISENSPEC_DISPATCH(isa, coset_row_sum(cx, cy2, d, sigma, tau));
}

BesselSum bessel_integrand_sum(Isa isa, std::span<const double> t, std::span<const double> cosh_t,
                               double x, std::complex<double> nu) {
    check_sizes(t.size(), cosh_t.size());
    return EISENSPEC_DISPATCH(isa, bessel_integrand_sum(t, cosh_t, x, nu));
}

void exp_array(Isa isa, std::span<const double> in, std::span<double> out) {
    check_sizes(in.size(), out.size());
    EISENSPEC_DISPATCH(isa, exp_array(in, out));
}

void log_array(Isa isa, std::span<const double> in, std::span<double> out) {
    check_sizes(in.size(), out.size());
    EISENSPEC_DISPATCH(isa, log_array(in, out));
}

void sincos_array(Isa isa, std::span<const double> in, std::span<double> sin_out,
                  std::span<double> cos_out) {
    check_sizes(in.size(), sin_out.size());
    check_sizes(in.size(), cos_out.size());
    EISENSPEC_DISPATCH(isa, sincos_array(in, sin_out, cos_out));
}

#undef EISENSPEC_DISPATCH

}  // namespace eisenspec::kernels
