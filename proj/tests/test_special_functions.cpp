#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "eisenspec/errors.hpp"
#include "eisenspec/special_functions.hpp"

using namespace eisenspec;
using namespace eisenspec::special;
using C = std::complex<double>;

namespace {

double rel(C got, C want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

// Reference values computed with mpmath at 40 digits.

TEST_CASE("log_gamma") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(log_gamma(0.5).real() == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    CHECK(rel(log_gamma({0.3, 0.2}), {0.88940835057326674, -0.62026100688248293}) < 1e-13);
    CHECK(rel(log_gamma({-4.5, 3.0}), {-10.694354276574461, -10.712660703414735}) < 1e-13);
    CHECK(rel(log_gamma({12.0, -30.0}), {-6.8216171094237582, -87.948161277706036}) < 1e-13);
    CHECK(rel(log_gamma({1e-3, 40.0}), {-63.753665334263603, 106.76927990824423}) < 1e-13);
    CHECK_THROWS_AS(log_gamma(-3.0), PoleProximityError);
    CHECK_THROWS_AS(log_gamma(C(0.0, 1e-13)), PoleProximityError);
}

TEST_CASE("log_gamma recurrence") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ur(-30.0, 30.0), ui(-30.0, 30.0);
    for (int k = 0; k < 200; ++k) {
        const C s(ur(rng), ui(rng));
        C d = log_gamma(s + 1.0) - log_gamma(s) - std::log(s);
        d -= C(0.0, 2.0 * std::numbers::pi * std::round(d.imag() / (2.0 * std::numbers::pi)));
        CHECK(std::abs(d) < 1e-12 * std::max(1.0, std::abs(log_gamma(s))));
    }
}

TEST_CASE("zeta") {
    const double pi = std::numbers::pi;
    CHECK(rel(zeta(2.0), pi * pi / 6.0) < 1e-14);
    CHECK(rel(zeta(4.0), std::pow(pi, 4) / 90.0) < 1e-14);
    CHECK(rel(zeta(0.0), -0.5) < 1e-14);
    CHECK(rel(zeta({0.5, 14.0}), {0.022241142609993589, -0.10325812326645006}) < 1e-11);
    CHECK(rel(zeta({-3.5, 2.0}), {-0.0035609799649190723, 0.042622537314776407}) < 1e-11);
    CHECK(rel(zeta({0.3, -7.0}), {1.0171314988950937, -0.4394440068963406}) < 1e-11);
    CHECK(rel(zeta({30.0, 1.0}), {1.0000000007164118, -5.9508338726519604e-10}) < 1e-14);
    CHECK_THROWS_AS(zeta(C(1.0, 1e-11)), PoleProximityError);
}

TEST_CASE("even zeta values match the Bernoulli table") {
    // zeta(2k) = (-1)^{k+1} (2 pi)^{2k} B_{2k} / (2 (2k)!)
    for (int k = 1; k <= 10; ++k) {
        const double want = std::pow(-1.0, k + 1) * std::pow(2.0 * std::numbers::pi, 2 * k) *
                            bernoulli_over_factorial(k) / 2.0;
        CHECK(rel(zeta(2.0 * k), want) < 1e-13);
    }
}

TEST_CASE("completed zeta") {
    CHECK(rel(completed_zeta(4.0), 0.1096622711232151) < 1e-13);
    CHECK(rel(completed_zeta({0.3, 5.0}), {-0.021638054374374393, 0.0027724912790555103}) < 1e-11);
    CHECK(rel(completed_zeta({2.0, 1.0}), {0.12333027512591269, -0.29924564421217959}) < 1e-12);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ur(0.01, 0.99), ui(-20.0, 20.0);
    for (int k = 0; k < 100; ++k) {
        const C s(ur(rng), ui(rng));
        const C a = completed_zeta(s);
        CHECK(std::abs(a - completed_zeta(1.0 - s)) <= 1e-10 * std::max(std::abs(a), 1e-2));
        CHECK(std::abs(completed_zeta(std::conj(s)) - std::conj(a)) <= 1e-13 * std::abs(a));
    }
    CHECK_THROWS_AS(completed_zeta(C(1e-9, 0.0)), PoleProximityError);
    CHECK_THROWS_AS(completed_zeta(C(1.0, 5e-9)), PoleProximityError);
}

TEST_CASE("bessel_k against reference values") {
    CHECK(rel(bessel_k(0.5, 1.0).value, std::sqrt(std::numbers::pi / 2.0) * std::exp(-1.0)) < 1e-13);
    CHECK(rel(bessel_k({0.25, 5.0}, 1.0).value, {0.00045953538401574564, 5.6995369448647141e-5}) < 1e-10);
    CHECK(rel(bessel_k({0.2, 3.0}, 0.3).value, {0.0089966345994779715, -0.0046417821519658347}) < 1e-10);
    CHECK(rel(bessel_k({0.0, 10.0}, 2.0).value, 1.1735704221220612e-7) < 1e-10);
    CHECK(rel(bessel_k({3.0, -2.0}, 5.0).value, {0.0028397804488050328, -0.0052448426271587232}) < 1e-10);
    CHECK(rel(bessel_k(0.5, 40.0).value, 8.4188091949489054e-19) < 1e-12);
    const auto deep = bessel_k({0.1, 1.0}, 600.0);
    CHECK_FALSE(deep.underflow);
    CHECK(rel(deep.value, {1.3547113443933307e-262, 2.2559751357933854e-266}) < 1e-10);
}

TEST_CASE("bessel_k symmetries, underflow and domain") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ur(-5.0, 5.0), ux(0.1, 30.0);
    for (int k = 0; k < 50; ++k) {
        const C nu(ur(rng), ur(rng));
        const double x = ux(rng);
        const C a = bessel_k(nu, x).value;
        CHECK(std::abs(a - bessel_k(-nu, x).value) <= 1e-12 * std::abs(a));
        const C it = bessel_k(C(0.0, nu.imag()), x).value;
        CHECK(std::abs(it.imag()) <= 1e-14 * std::abs(it));
    }
    for (double nu : {0.0, 0.7, 3.0}) {
        double prev = bessel_k(nu, 1.0).value.real();
        for (double x = 1.25; x <= 20.0; x += 0.25) {
            const double v = bessel_k(nu, x).value.real();
            CHECK(v < prev);
            prev = v;
        }
    }
    const auto u = bessel_k(0.5, 900.0);
    CHECK(u.underflow);
    CHECK(u.value == C(0.0, 0.0));
    CHECK_THROWS_AS(bessel_k(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(C(10.5, 0.0), 1.0), DomainError);
}
