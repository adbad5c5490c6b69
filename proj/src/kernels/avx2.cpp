#include <algorithm>

#include "variants.hpp"
#include "vecmath_avx2.hpp"

namespace eisenspec::kernels::avx2 {

using namespace avx2_math;

namespace {

// Copies a short tail into a 4-lane buffer; unused lanes get `pad`.
inline __m256d load_tail(std::span<const double> src, std::size_t from, double pad) {
    alignas(32) double buf[4] = {pad, pad, pad, pad};
    std::copy(src.begin() + static_cast<std::ptrdiff_t>(from), src.end(), buf);
    return _mm256_load_pd(buf);
}

// All-ones lanes for the first `count` entries.
inline __m256d tail_mask(std::size_t count) {
    alignas(32) long long lanes[4];
    for (std::size_t i = 0; i < 4; ++i) lanes[i] = i < count ? -1 : 0;
    return _mm256_castsi256_pd(_mm256_load_si256(reinterpret_cast<const __m256i*>(lanes)));
}

}  // namespace

std::complex<double> coset_row_sum(double cx, double cy2, std::span<const double> d, double sigma,
                                   double tau) {
    const __m256d vcx = splat(cx);
    const __m256d vcy2 = splat(cy2);
    const __m256d vneg_sigma = splat(-sigma);
    const __m256d vtau = splat(tau);
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();

    auto step = [&](__m256d dv, __m256d active) {
        const __m256d u = _mm256_add_pd(vcx, dv);
        const __m256d q = _mm256_fmadd_pd(u, u, vcy2);
        const __m256d logq = log_pd(q);
        const __m256d mag = _mm256_and_pd(exp_pd(_mm256_mul_pd(vneg_sigma, logq)), active);
        if (tau == 0.0) {
            re = _mm256_add_pd(re, mag);
            return;
        }
        __m256d s, c;
        sincos_pd(_mm256_mul_pd(vtau, logq), s, c);
        re = _mm256_fmadd_pd(mag, c, re);
        im = _mm256_fnmadd_pd(mag, s, im);
    };

    const __m256d all = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    std::size_t k = 0;
    for (; k + 4 <= d.size(); k += 4) step(_mm256_loadu_pd(d.data() + k), all);
    if (k < d.size()) step(load_tail(d, k, 0.0), tail_mask(d.size() - k));
    return {hsum(re), hsum(im)};
}

BesselSum bessel_integrand_sum(std::span<const double> t, std::span<const double> cosh_t, double x,
                               std::complex<double> nu) {
    const __m256d vx = splat(-x);
    const __m256d va = splat(nu.real());
    const __m256d vb = splat(nu.imag());
    const __m256d half = splat(0.5);
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    __m256d mag = _mm256_setzero_pd();

    auto step = [&](__m256d tv, __m256d chv, __m256d active) {
        const __m256d base = _mm256_mul_pd(vx, chv);
        const __m256d at = _mm256_mul_pd(va, tv);
        const __m256d up = exp_pd(_mm256_add_pd(base, at));
        const __m256d down = exp_pd(_mm256_sub_pd(base, at));
        const __m256d even = _mm256_and_pd(_mm256_mul_pd(half, _mm256_add_pd(up, down)), active);
        const __m256d odd = _mm256_and_pd(_mm256_mul_pd(half, _mm256_sub_pd(up, down)), active);
        __m256d s, c;
        sincos_pd(_mm256_mul_pd(vb, tv), s, c);
        re = _mm256_fmadd_pd(even, c, re);
        im = _mm256_fmadd_pd(odd, s, im);
        mag = _mm256_add_pd(mag, even);
    };

    const __m256d all = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    std::size_t k = 0;
    for (; k + 4 <= t.size(); k += 4) {
        step(_mm256_loadu_pd(t.data() + k), _mm256_loadu_pd(cosh_t.data() + k), all);
    }
    if (k < t.size()) {
        const std::size_t rem = t.size() - k;
        step(load_tail(t, k, 0.0), load_tail(cosh_t, k, 1.0), tail_mask(rem));
    }
    return {{hsum(re), hsum(im)}, hsum(mag)};
}

void exp_array(std::span<const double> in, std::span<double> out) {
    std::size_t k = 0;
    for (; k + 4 <= in.size(); k += 4) {
        _mm256_storeu_pd(out.data() + k, exp_pd(_mm256_loadu_pd(in.data() + k)));
    }
    if (k < in.size()) {
        alignas(32) double buf[4];
        _mm256_store_pd(buf, exp_pd(load_tail(in, k, 0.0)));
        std::copy(buf, buf + (in.size() - k), out.begin() + static_cast<std::ptrdiff_t>(k));
    }
}

void log_array(std::span<const double> in, std::span<double> out) {
    std::size_t k = 0;
    for (; k + 4 <= in.size(); k += 4) {
        _mm256_storeu_pd(out.data() + k, log_pd(_mm256_loadu_pd(in.data() + k)));
    }
    if (k < in.size()) {
        alignas(32) double buf[4];
        _mm256_store_pd(buf, log_pd(load_tail(in, k, 1.0)));
        std::copy(buf, buf + (in.size() - k), out.begin() + static_cast<std::ptrdiff_t>(k));
    }
}

void sincos_array(std::span<const double> in, std::span<double> s, std::span<double> c) {
    std::size_t k = 0;
    __m256d sv, cv;
    for (; k + 4 <= in.size(); k += 4) {
        sincos_pd(_mm256_loadu_pd(in.data() + k), sv, cv);
        _mm256_storeu_pd(s.data() + k, sv);
        _mm256_storeu_pd(c.data() + k, cv);
    }
    if (k < in.size()) {
        alignas(32) double sb[4], cb[4];
        sincos_pd(load_tail(in, k, 0.0), sv, cv);
        _mm256_store_pd(sb, sv);
        _mm256_store_pd(cb, cv);
        const std::size_t rem = in.size() - k;
        std::copy(sb, sb + rem, s.begin() + static_cast<std::ptrdiff_t>(k));
        std::copy(cb, cb + rem, c.begin() + static_cast<std::ptrdiff_t>(k));
    }
}

}  // namespace eisenspec::kernels::avx2
