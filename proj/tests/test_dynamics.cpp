#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eisenspec/dynamics.hpp"
#include "eisenspec/errors.hpp"
#include "eisenspec/lp_analysis.hpp"
#include "eisenspec/spectrum.hpp"

using namespace eisenspec;
using namespace eisenspec::dynamics;
using C = std::complex<double>;

namespace {

ModeSpan random_span(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ModeSpan m;
    for (int k = 0; k < n; ++k) m.modes.push_back({{u(rng), u(rng)}, {u(rng), u(rng)}, std::nullopt});
    return m;
}

}  // namespace

TEST_CASE("evolution multipliers") {
    ModeSpan m;
    m.modes.push_back({C(1.5, 0.0), C(2.0, 0.0), std::nullopt});
    CHECK(evolve(m, 0.0, 0.5).modes[0].coefficient == C(2.0, 0.0));
    CHECK(std::abs(evolve(m, std::log(2.0), 0.5).modes[0].coefficient - 1.0) < 1e-15);
    CHECK_THROWS_AS(evolve(m, -1.0, 0.0), DomainError);

    std::mt19937_64 rng(3);
    const auto span = random_span(rng, 6);
    const auto two_step = evolve(evolve(span, 0.3, 0.2), 1.1, 0.2);
    const auto one_step = evolve(span, 1.4, 0.2);
    for (std::size_t k = 0; k < span.modes.size(); ++k) {
        const auto& a = two_step.modes[k].coefficient;
        CHECK(std::abs(a - one_step.modes[k].coefficient) <= 1e-14 * std::max(1.0, std::abs(a)));
        const double expect = std::abs(span.modes[k].coefficient) *
                              std::exp(-1.4 * (span.modes[k].lambda.real() - 0.2));
        CHECK(std::abs(one_step.modes[k].coefficient) == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("mode classification") {
    CHECK(classify_mode(0.3, 0.3) == ModeClass::Neutral);
    CHECK(classify_mode(1.3, 0.3) == ModeClass::Decaying);
    CHECK(classify_mode(-1.0, 0.3) == ModeClass::Growing);
    CHECK(classify_mode(C(0.3, 2.0), 0.3) == ModeClass::Neutral);
    ModeSpan m;
    m.modes.push_back({C(0.3, 2.0), C(1.0, 1.0), std::nullopt});
    CHECK(std::abs(evolve(m, 17.0, 0.3).modes[0].coefficient) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("periodic parameters") {
    const auto a = periodic_param(0.1, 1.5, 0.5, 0.5);
    CHECK(a.admissible);
    CHECK(a.param.lambda_h0().real() == doctest::Approx(0.0983).epsilon(1e-3));
    CHECK(a.period == doctest::Approx(62.83185307179586).epsilon(1e-14));
    CHECK(std::abs(a.param.eigenvalue() - 0.5 - C(0.0, 0.1)) < 1e-14);
    const auto span = periodic_span(a, C(0.4, -0.2));
    CHECK(span_distance(evolve(span, a.period, 0.5), span) < 1e-10);

    const auto r = periodic_param(1.0, 1.5, 0.3, 0.5);
    CHECK_FALSE(r.admissible);
    CHECK(r.param.lambda_h0().real() == doctest::Approx(0.689).epsilon(1e-3));
    CHECK_FALSE(r.reason.empty());

    for (double theta : {1e-2, 1e-4, -1e-6}) CHECK(periodic_param(theta, 1.5, 0.3, 0.5).admissible);
    CHECK_THROWS_AS(periodic_param(0.0, 1.5, 0.3, 0.5), DomainError);
    CHECK_THROWS_AS(periodic_param(0.1, 2.0, 0.3, 0.5), DomainError);
}

TEST_CASE("chaos verdicts") {
    CHECK(chaos_verdict(1.5, 0.3, 0.5).verdict == Chaos::SubspaceChaotic);
    CHECK(chaos_verdict(1.5, 0.1, 0.5).verdict == Chaos::Inconclusive);
    for (double c : {-3.0, 0.0, 0.3, 10.0}) {
        CHECK(chaos_verdict(2.0, c, 0.5).verdict == Chaos::NotSubspaceChaotic);
        CHECK(chaos_verdict(3.0, c, 0.5).verdict == Chaos::NotSubspaceChaotic);
    }
    CHECK_FALSE(chaos_verdict(1.5, 0.3, 0.5).witness.empty());
}

TEST_CASE("mode span JSON") {
    ModeSpan m;
    const auto p = eisenstein::SpectralParameter::from_s({0.6, 2.0});
    m.modes.push_back({p.eigenvalue(), C(1.0, -0.5), p.s()});
    m.modes.push_back({C(2.0, 1.0), C(0.0, 1.0), std::nullopt});
    const auto back = ModeSpan::from_json(m.to_json());
    REQUIRE(back.modes.size() == 2);
    CHECK(back.modes[0].lambda == m.modes[0].lambda);
    CHECK(back.modes[0].s.has_value());
    CHECK_FALSE(back.modes[1].s.has_value());
    CHECK_THROWS_AS(ModeSpan::from_json(R"([{"lambda":[1,0],"coeff":[1,0],"s":[0.6,2]}])"), DomainError);
    CHECK_THROWS_AS(ModeSpan::from_json(R"([{"lambda":[1,0]}])"), DomainError);
    CHECK_THROWS_AS(ModeSpan::from_json("{"), DomainError);
}

TEST_CASE("tensor products") {
    ModeSpan a, b;
    a.modes.push_back({C(0.5, 1.0), C(2.0, 0.0), std::nullopt});
    b.modes.push_back({C(0.25, -3.0), C(0.0, 1.0), std::nullopt});
    const auto t = tensor_modes(a, b);
    REQUIRE(t.modes.size() == 1);
    CHECK(t.modes[0].lambda == C(0.75, -2.0));
    CHECK(t.modes[0].coefficient == C(0.0, 2.0));

    std::mt19937_64 rng(31);
    const auto m1 = random_span(rng, 3), m2 = random_span(rng, 5);
    const auto lhs = evolve(tensor_modes(m1, m2), 0.7, 0.2 - 0.9);
    const auto rhs = tensor_modes(evolve(m1, 0.7, 0.2), evolve(m2, 0.7, -0.9));
    CHECK(span_distance(lhs, rhs) < 1e-14);

    // periodic x periodic with rationally related periods
    const auto p1 = periodic_param(0.1, 1.5, 0.5, 0.5), p2 = periodic_param(0.15, 1.5, 0.5, 0.5);
    const auto T = common_period(p1.period, p2.period);
    REQUIRE(T.has_value());
    CHECK(*T == doctest::Approx(2.0 * std::numbers::pi / 0.05).epsilon(1e-12));
    const auto prod = tensor_modes(periodic_span(p1), periodic_span(p2));
    CHECK(span_distance(evolve(prod, *T, 1.0), prod) < 1e-10);
    CHECK_FALSE(common_period(1.0, std::numbers::pi).has_value());
}

TEST_CASE("Omega samples and the eigenvalue identity") {
    const auto zs = omega_samples(1.5, 0.5, 0.5, 100);
    CHECK(zs.size() == 100);
    for (const auto& z : zs) {
        CHECK(spectrum::omega_contains(z, 1.5, 0.5, 0.5));
        const auto s = param_of_omega_point(z, 1.5, 0.5, 0.5);
        CHECK(std::abs(spectrum::eigenvalue_of_param(s, 0.0) - 0.5 - z) < 1e-12);
        CHECK(lp::lp_membership_verdict(s, 1.5).verdict == lp::Verdict::Member);
    }
}

TEST_CASE("analyticity probe") {
    ProbeSpec ps;
    ps.center = {-0.05, -0.1};
    const auto good = analyticity_probe(ps);
    CHECK(good.residual < 1e-6);
    ps.broken = true;
    const auto bad = analyticity_probe(ps);
    CHECK(bad.residual > 1e-2);
    // halving the radius shrinks the broken residual, the analytic one stays at rounding level
    ps.radius = 0.5 * bad.radius;
    CHECK(analyticity_probe(ps).residual < bad.residual);
    ps.broken = false;
    CHECK(analyticity_probe(ps).residual < 1e-12);

    ps.radius = 1.0;
    CHECK_THROWS_AS(analyticity_probe(ps), DomainError);
    ps.radius = 0.0;
    ps.center = {-0.05, 0.1};
    CHECK_THROWS_AS(analyticity_probe(ps), DomainError);
}

TEST_CASE("DSW report") {
    ProbeSpec ps;
    ps.center = {-0.05, -0.1};
    const auto rep = dsw_conditions_report(1.5, 0.5, 0.5, ps);
    CHECK(rep.meets_imaginary_axis);
    CHECK(rep.max_eigen_residual < 1e-3);
    CHECK(rep.max_eigenvalue_identity < 1e-12);
    CHECK(rep.probe.residual < 1e-6);
}

TEST_CASE("orbit trace") {
    const auto p = periodic_param(0.1, 1.5, 0.5, 0.5);
    auto span = periodic_span(p);
    span.modes.push_back({C(1.5, 0.0), C(1.0, 0.0), std::nullopt});
    const auto rows = orbit_trace(span, 0.5, 10.0, 20);
    CHECK(rows.size() == 21);
    CHECK(rows.front().t == 0.0);
    CHECK(rows.back().t == 10.0);
    for (const auto& r : rows) {
        CHECK(r.moduli[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(r.moduli[1] == doctest::Approx(std::exp(-r.t)).epsilon(1e-14));
    }
}
