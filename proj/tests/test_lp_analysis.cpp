#include <doctest.h>

#include <cmath>
#include <random>

#include "eisenspec/errors.hpp"
#include "eisenspec/lp_analysis.hpp"
#include "eisenspec/spectrum.hpp"

using namespace eisenspec;
using namespace eisenspec::lp;
using eisenstein::SpectralParameter;

TEST_CASE("tail integrals in closed form") {
    const auto t = tail_integral({1.2, 0.25, 0.5, 0.0, TailSign::Plus});
    CHECK(t.finite);
    CHECK(t.value == doctest::Approx(10.0).epsilon(1e-14));
    CHECK_FALSE(tail_integral({1.5, 0.25, 0.5, 0.0, TailSign::Plus}).finite);
    CHECK_FALSE(tail_integral({2.0, 0.0, 0.5, 0.0, TailSign::Plus}).finite);
    CHECK(tail_integral({1.5, 0.25, 0.5, 0.0, TailSign::Minus}).finite);
}

TEST_CASE("tail quadrature matches the closed form") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> up(1.0, 1.95), ur(0.0, 0.45), ut(-1.0, 4.0);
    int done = 0;
    while (done < 10) {
        TailIntegral ti{up(rng), ur(rng), 0.5, ut(rng), done % 2 ? TailSign::Plus : TailSign::Minus};
        if (ti.exponent() > -0.02) continue;
        const double cf = tail_integral(ti).value;
        CHECK(std::abs(tail_integral_numeric(ti) - cf) <= 1e-8 * cf);
        ++done;
    }
    CHECK_THROWS_AS(tail_integral_numeric({1.5, 0.25, 0.5, 0.0, TailSign::Plus}), DomainError);
}

TEST_CASE("membership verdicts") {
    const auto s = SpectralParameter::from_s({0.75, 5.0});
    CHECK(lp_membership_verdict(s, 1.3).verdict == Verdict::Member);
    CHECK(lp_membership_verdict(s, 4.0 / 3.0).verdict == Verdict::Boundary);
    CHECK(lp_membership_verdict(s, 1.5).verdict == Verdict::NotMember);
    CHECK(lp_membership_verdict(s, 1.0).informational);
    CHECK_FALSE(lp_membership_verdict(s, 1.3).informational);
    for (double p : {1.0, 1.5, 1.99}) {
        CHECK(lp_membership_verdict(SpectralParameter::from_s({0.5, 7.0}), p).verdict == Verdict::Member);
    }
    CHECK_THROWS_AS(lp_membership_verdict(s, 2.0), DomainError);
    CHECK_THROWS_AS(lp_membership_verdict(SpectralParameter::from_s(1.0), 1.5), PoleProximityError);
}

TEST_CASE("verdicts agree with tails and the critical exponent") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ure(0.5, 0.99), uim(-10.0, 10.0), up(1.0, 1.999);
    for (int k = 0; k < 300; ++k) {
        const auto s = SpectralParameter::from_s({ure(rng), uim(rng)});
        const double p = up(rng);
        const double re = std::abs(s.lambda_h0().real());
        const auto v = lp_membership_verdict(s, p).verdict;
        if (v == Verdict::Boundary) continue;
        const bool tails = tail_integral({p, re, 0.5, 0.0, TailSign::Plus}).finite &&
                           tail_integral({p, re, 0.5, 0.0, TailSign::Minus}).finite;
        CHECK((v == Verdict::Member) == tails);
        CHECK((v == Verdict::Member) == (p < spectrum::critical_exponent(s)));
    }
}

TEST_CASE("truncated norm grows with y_max and is positive on the compact part") {
    const auto s = SpectralParameter::from_s({0.75, 5.0});
    NormGrid coarse{32, 32, 2.0};
    const double a = lp_norm_truncated(s, 1.3, 2.0, coarse).norm;
    const double b = lp_norm_truncated(s, 1.3, 5.0, coarse).norm;
    const double c = lp_norm_truncated(s, 1.3, 10.0, coarse).norm;
    CHECK(a > 0.0);
    CHECK(a <= b);
    CHECK(b <= c);
    // |E|^p is only C^1 at zeros of E, so refinement converges algebraically
    const double normal = lp_norm_truncated(s, 1.3, 5.0).norm;
    const double fine = lp_norm_truncated(s, 1.3, 5.0, {128, 128, 2.0}).norm;
    CHECK(normal == doctest::Approx(fine).epsilon(1e-7));
    CHECK(b == doctest::Approx(fine).epsilon(1e-5));
    CHECK_THROWS_AS(lp_norm_truncated(s, 1.3, 0.9), DomainError);
}

TEST_CASE("non-constant part is negligible in the cusp") {
    const auto s = SpectralParameter::from_s({0.75, 5.0});
    CHECK(nonconstant_tail_integral(s, 1.3, 10.0, 40.0) < 1e-10);
    CHECK(nonconstant_tail_integral(s, 1.3, 1.0, 2.0) > 1e-6);
}
