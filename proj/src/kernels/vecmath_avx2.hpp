#pragma once

// Four-lane double-precision exp/log/sincos for AVX2+FMA. Polynomial and
// rational approximations follow the Cephes library. Include only from
// translation units compiled with -mavx2 -mfma.
//
// Domains: exp_pd expects x <= 709 (results below e^-708.39 flush to 0);
// log_pd expects positive normal x; sincos_pd is accurate for |x| < 1e8.

#include <immintrin.h>

namespace eisenspec::kernels::avx2_math {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

template <int N>
inline __m256d horner(__m256d x, const double (&c)[N]) {
    __m256d acc = splat(c[0]);
    for (int i = 1; i < N; ++i) acc = _mm256_fmadd_pd(acc, x, splat(c[i]));
    return acc;
}

inline __m256d exp_pd(__m256d x) {
    static constexpr double P[] = {1.26177193074810590878E-4, 3.02994407707441961300E-2,
                                   9.99999999999999999910E-1};
    static constexpr double Q[] = {3.00198505138664455042E-6, 2.52448340349684104192E-3,
                                   2.27265548208155028766E-1, 2.00000000000000000009E0};
    const __m256d lo = splat(-708.39641853226408);
    const __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    x = _mm256_max_pd(_mm256_min_pd(x, splat(709.0)), lo);

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, splat(1.4426950408889634073599)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    x = _mm256_fnmadd_pd(n, splat(6.93145751953125E-1), x);
    x = _mm256_fnmadd_pd(n, splat(1.42860682030941723212E-6), x);

    const __m256d xx = _mm256_mul_pd(x, x);
    const __m256d px = _mm256_mul_pd(x, horner(xx, P));
    const __m256d qx = horner(xx, Q);
    __m256d r = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    r = _mm256_fmadd_pd(splat(2.0), r, splat(1.0));

    // Scale by 2^n through the exponent field; n is in [-1022, 1023].
    const __m256i n64 = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
    const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    r = _mm256_mul_pd(r, _mm256_castsi256_pd(bits));
    return _mm256_andnot_pd(under, r);
}

inline __m256d log_pd(__m256d x) {
    static constexpr double P[] = {1.01875663804580931796E-4, 4.97494994976747001425E-1,
                                   4.70579119878881725854E0,  1.44989225341610930846E1,
                                   1.79368678507819816313E1,  7.70838733755885391666E0};
    static constexpr double Q[] = {1.0,
                                   1.12873587189167450590E1,
                                   4.52279145837532221105E1,
                                   8.29875266912776603211E1,
                                   7.11544750618563894466E1,
                                   2.31251620126765340583E1};
    const __m256i bits = _mm256_castpd_si256(x);

    // Biased exponent to double via the 2^52 trick, then frexp convention.
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
    const __m256i ebits = _mm256_or_si256(_mm256_srli_epi64(bits, 52), magic);
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(ebits), splat(4503599627370496.0));
    e = _mm256_sub_pd(e, splat(1022.0));

    const __m256i mant = _mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
        _mm256_set1_epi64x(0x3FE0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mant);  // in [0.5, 1)

    const __m256d small = _mm256_cmp_pd(m, splat(0.70710678118654752440), _CMP_LT_OQ);
    e = _mm256_sub_pd(e, _mm256_and_pd(small, splat(1.0)));
    m = _mm256_add_pd(_mm256_sub_pd(m, splat(1.0)), _mm256_and_pd(small, m));

    const __m256d z = _mm256_mul_pd(m, m);
    __m256d y = _mm256_div_pd(_mm256_mul_pd(z, horner(m, P)), horner(m, Q));
    y = _mm256_mul_pd(m, y);
    y = _mm256_fnmadd_pd(e, splat(2.121944400546905827679E-4), y);
    y = _mm256_fnmadd_pd(splat(0.5), z, y);
    __m256d r = _mm256_add_pd(m, y);
    return _mm256_fmadd_pd(e, splat(0.693359375), r);
}

inline void sincos_pd(__m256d x, __m256d& sin_out, __m256d& cos_out) {
    static constexpr double S[] = {1.58962301576546568060E-10, -2.50507477628578072866E-8,
                                   2.75573136213857245213E-6,  -1.98412698295895385996E-4,
                                   8.33333333332211858878E-3,  -1.66666666666666307295E-1};
    static constexpr double C[] = {-1.13585365213876817300E-11, 2.08757008419747316778E-9,
                                   -2.75573141792967388112E-7,  2.48015872888517045348E-5,
                                   -1.38888888888730564116E-3,  4.16666666666665929218E-2};
    const __m256d sign_bit = splat(-0.0);
    const __m256d negative = _mm256_and_pd(x, sign_bit);
    const __m256d ax = _mm256_andnot_pd(sign_bit, x);

    // Octant index y = floor(|x| * 4/pi), rounded up to even.
    __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, splat(1.27323954473516268615)));
    const __m256d odd = _mm256_sub_pd(y, _mm256_mul_pd(splat(2.0), _mm256_floor_pd(
                                                                      _mm256_mul_pd(y, splat(0.5)))));
    y = _mm256_add_pd(y, odd);
    const __m256d j = _mm256_sub_pd(y, _mm256_mul_pd(splat(8.0), _mm256_floor_pd(
                                                                    _mm256_mul_pd(y, splat(0.125)))));

    __m256d z = _mm256_fnmadd_pd(y, splat(7.85398125648498535156E-1), ax);
    z = _mm256_fnmadd_pd(y, splat(3.77489470793079817668E-8), z);
    z = _mm256_fnmadd_pd(y, splat(2.69515142907905952645E-15), z);
    const __m256d zz = _mm256_mul_pd(z, z);

    const __m256d s = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), horner(zz, S), z);
    __m256d c = _mm256_fnmadd_pd(splat(0.5), zz, splat(1.0));
    c = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), horner(zz, C), c);

    // j in {0, 2, 4, 6} selects the quadrant k = j/2.
    const __m256d swap = _mm256_or_pd(_mm256_cmp_pd(j, splat(2.0), _CMP_EQ_OQ),
                                      _mm256_cmp_pd(j, splat(6.0), _CMP_EQ_OQ));
    const __m256d sin_neg = _mm256_cmp_pd(j, splat(4.0), _CMP_GE_OQ);
    const __m256d cos_neg = _mm256_or_pd(_mm256_cmp_pd(j, splat(2.0), _CMP_EQ_OQ),
                                         _mm256_cmp_pd(j, splat(4.0), _CMP_EQ_OQ));
    __m256d sv = _mm256_blendv_pd(s, c, swap);
    __m256d cv = _mm256_blendv_pd(c, s, swap);
    sv = _mm256_xor_pd(sv, _mm256_and_pd(sin_neg, sign_bit));
    cv = _mm256_xor_pd(cv, _mm256_and_pd(cos_neg, sign_bit));
    sin_out = _mm256_xor_pd(sv, negative);
    cos_out = cv;
}

inline double hsum(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace eisenspec::kernels::avx2_math
