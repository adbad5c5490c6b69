#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eisenspec/errors.hpp"
#include "eisenspec/spectrum.hpp"

using namespace eisenspec;
using namespace eisenspec::spectrum;
using C = std::complex<double>;

TEST_CASE("apex and boundary vertex") {
    CHECK(apex_cp(2.0, 0.5) == doctest::Approx(0.25));
    CHECK(std::abs(apex_cp(1.5, 0.5) - 2.0 / 9.0) < 1e-15);
    for (double p : {1.1, 1.5, 1.9, 3.0, 7.0}) {
        const double q = p / (p - 1.0);
        CHECK(apex_cp(p, 0.5) == doctest::Approx(apex_cp(q, 0.5)).epsilon(1e-14));
        const auto pts = region_boundary(ParabolicRegion{p, 0.5}, 101);
        const auto& mid = pts[50];
        CHECK(mid.tau == 0.0);
        CHECK(std::abs(mid.lambda - apex_cp(p, 0.5)) < 1e-15);
        double leftmost = 1e300;
        for (const auto& bp : pts) leftmost = std::min(leftmost, bp.lambda.real());
        CHECK(leftmost == doctest::Approx(apex_cp(p, 0.5)).epsilon(1e-14));
    }
}

TEST_CASE("boundary points are in the closure but not the interior") {
    for (double p : {1.2, 1.5, 2.0, 4.0}) {
        for (double mu : {0.0, 0.7}) {
            const ParabolicRegion reg{p, 0.5, mu, 0.3};
            const auto pts = region_boundary(reg, 200);
            for (std::size_t k = 0; k < pts.size(); ++k) {
                CHECK(region_contains(pts[k].lambda, reg, Membership::Closure));
                CHECK_FALSE(region_contains(pts[k].lambda, reg, Membership::Interior));
                const auto& mirror = pts[pts.size() - 1 - k];
                CHECK(mirror.lambda == std::conj(pts[k].lambda));
            }
        }
    }
    CHECK_THROWS_AS(region_boundary(ParabolicRegion{1.5, 0.5}, 1), DomainError);
    CHECK_THROWS_AS(region_contains(1.0, ParabolicRegion{1.0, 0.5}, Membership::Closure), DomainError);
}

TEST_CASE("region properties on random samples") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ure(-1.0, 5.0), uim(-4.0, 4.0);
    for (int k = 0; k < 2000; ++k) {
        const C l(ure(rng), uim(rng));
        // monotone in p up to 2
        if (region_contains(l, ParabolicRegion{1.8, 0.5}, Membership::Closure)) {
            CHECK(region_contains(l, ParabolicRegion{1.3, 0.5}, Membership::Closure));
        }
        // the region for b' >= b contains the one for b
        ParabolicRegion inner{1.4, 0.5}, outer{1.4, 0.5};
        outer.width_b = 0.8;
        if (region_contains(l, inner, Membership::Closure)) {
            CHECK(region_contains(l, outer, Membership::Closure));
        }
        ParabolicRegion same = inner;
        same.width_b = 0.5;
        CHECK(region_contains(l, inner, Membership::Closure) == region_contains(l, same, Membership::Closure));
    }
}

TEST_CASE("full spectrum") {
    const auto g = geometry::GroupDatum::modular_surface();
    for (double p : {1.1, 1.5, 2.0, 5.0}) {
        CHECK(full_spectrum_contains(0.0, p, g));
        CHECK(full_spectrum_contains(0.25, p, g));
    }
    CHECK_FALSE(full_spectrum_contains(0.125, 1.99, g));
}

TEST_CASE("eigenvalues and critical exponent") {
    using eisenstein::SpectralParameter;
    CHECK(eigenvalue_of_param(SpectralParameter(0.0), 0.0) == C(0.25, 0.0));
    CHECK(std::abs(eigenvalue_of_param(SpectralParameter::from_s({0.5, 3.0}), 0.0) - 9.25) < 1e-14);
    CHECK(std::abs(eigenvalue_of_param(SpectralParameter::from_s(1.0), 0.0)) < 1e-15);
    CHECK(critical_exponent(SpectralParameter(C(0.0, 4.0))) == 2.0);
    CHECK(critical_exponent(SpectralParameter::from_s({0.75, 1.0})) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(critical_exponent(SpectralParameter::from_s({0.999999, 1.0})) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("h map") {
    const C h = h_map({-0.05, -0.002}, 1.5, 0.3, 0.5);
    CHECK(h.real() == doctest::Approx(0.0632455532).epsilon(1e-9));
    CHECK(h.imag() == doctest::Approx(0.0632455532).epsilon(1e-9));
    CHECK(h.real() > 0.0);
    CHECK(h.real() < 1.0 / 3.0);
    CHECK(std::abs(h_map(0.25 - 0.3, 1.5, 0.3, 0.5)) == 0.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 100; ++k) {
        const C z(u(rng), u(rng));
        const C w = h_map(z, 1.5, 0.3, 0.5);
        CHECK(std::abs(0.25 * (1.0 - w * w) - 0.3 - z) < 1e-12);
    }
}

TEST_CASE("Omega") {
    CHECK(omega_contains({-0.05, -0.002}, 1.5, 0.3, 0.5));
    CHECK_FALSE(omega_contains({-0.05, 0.0}, 1.5, 0.3, 0.5));
    CHECK_FALSE(omega_contains({-0.05, 0.1}, 1.5, 0.3, 0.5));
    // strip points map into Omega
    for (double u : {0.05, 0.2, 0.3})
        for (double v : {0.01, 0.5, 3.0}) {
            const C w(u, v);
            const C z = 0.25 * (1.0 - w * w) - 0.3;
            CHECK(omega_contains(z, 1.5, 0.3, 0.5));
            CHECK(std::abs(h_map(z, 1.5, 0.3, 0.5) - w) < 1e-12);
        }
    CHECK(omega_meets_imaginary_axis(1.5, 0.3, 0.5));
    CHECK_FALSE(omega_meets_imaginary_axis(1.5, 0.2, 0.5));
    const double d = omega_boundary_distance({-0.05, -0.1}, 1.5, 0.5, 0.5);
    CHECK(d > 0.05);
    CHECK(d < 0.1);
}

TEST_CASE("sector angle") {
    CHECK(sector_angle(2.0) == 0.0);
    CHECK(sector_angle(4.0) == doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-15));
    for (double p : {1.1, 1.5, 3.0}) {
        CHECK(sector_angle(p) == doctest::Approx(sector_angle(p / (p - 1.0))).epsilon(1e-14));
        for (const auto& bp : region_boundary(ParabolicRegion{p, 0.5}, 301, 10.0)) {
            CHECK(std::abs(std::arg(bp.lambda)) <= sector_angle(p) + 1e-12);
        }
    }
}
