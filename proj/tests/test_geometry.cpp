#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "eisenspec/errors.hpp"
#include "eisenspec/geometry.hpp"

using namespace eisenspec;
using namespace eisenspec::geometry;

TEST_CASE("UpperHalfPoint rejects the boundary and non-finite input") {
    CHECK_THROWS_AS(UpperHalfPoint(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(UpperHalfPoint(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(UpperHalfPoint(NAN, 1.0), DomainError);
    CHECK_NOTHROW(UpperHalfPoint(3.0, 1e-9));
}

TEST_CASE("Mobius transforms") {
    CHECK_THROWS_AS(MobiusTransform(1, 1, 1, 1), DomainError);
    const auto S = MobiusTransform::S();
    const auto T = MobiusTransform::T();
    CHECK(S * S == MobiusTransform::identity());  // -I acts trivially
    const auto ST = S * T;
    CHECK(ST * ST * ST == MobiusTransform::identity());
    CHECK(T * T.inverse() == MobiusTransform::identity());

    const UpperHalfPoint z(0.3, 1.2);
    const auto w = mobius_apply(S, z);
    const auto expected = -1.0 / z.as_complex();
    CHECK(w.x() == doctest::Approx(expected.real()).epsilon(1e-15));
    CHECK(w.y() == doctest::Approx(expected.imag()).epsilon(1e-15));
    // g and -g act identically
    const MobiusTransform g(2, 1, 3, 2);
    const auto a = mobius_apply(g, z), b = mobius_apply(g.negated(), z);
    CHECK(a.x() == b.x());
    CHECK(a.y() == b.y());
}

TEST_CASE("reduction lands in the fundamental domain and the transform maps back") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ux(-20.0, 20.0);
    std::uniform_real_distribution<double> ly(-6.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        const UpperHalfPoint z(ux(rng), std::pow(10.0, ly(rng)));
        const auto r = reduce_to_fundamental_domain(z);
        CHECK(in_fundamental_domain(r.point));
        if (z.y() < 1e-3) continue;  // the round trip below is ill-conditioned there
        const auto back = mobius_apply(r.transform, z);
        CHECK(back.x() == doctest::Approx(r.point.x()).epsilon(1e-8).scale(1.0));
        CHECK(back.y() == doctest::Approx(r.point.y()).epsilon(1e-9));
    }
    // i and rho are fixed
    const auto ri = reduce_to_fundamental_domain(UpperHalfPoint(0.0, 1.0));
    CHECK(ri.point.x() == 0.0);
    CHECK(ri.point.y() == 1.0);
}

TEST_CASE("coset representatives") {
    const auto reps = coset_representatives(5);
    std::set<std::pair<long, long>> seen;
    for (const auto& p : reps) {
        CHECK(std::gcd(p.c, p.d) == 1);
        CHECK(seen.insert({p.c, p.d}).second);
        // one of each +-(c, d) pair
        CHECK(seen.count({-p.c, -p.d}) == (p.c == 0 && p.d == 0 ? 1u : 0u));
    }
    CHECK(reps.front().c == 0);
    CHECK(reps.front().d == 1);
    // (0,1) plus c in 1..5 with coprime |d| <= 5
    int count = 1;
    for (int c = 1; c <= 5; ++c)
        for (int d = -5; d <= 5; ++d)
            if (std::gcd(c, d) == 1) ++count;
    CHECK(static_cast<int>(reps.size()) == count);
}

TEST_CASE("fundamental domain volume is pi/3") {
    CHECK(fundamental_volume_numeric(QuadratureSpec{4, 64}) ==
          doctest::Approx(std::numbers::pi / 3.0).epsilon(1e-12));
}

TEST_CASE("group datum JSON") {
    const auto g = GroupDatum::load("modular");
    CHECK(g.b == 0.5);
    CHECK(g.volume == doctest::Approx(std::numbers::pi / 3.0));
    const auto round = GroupDatum::from_json(g.to_json());
    CHECK(round.b == g.b);
    CHECK(round.discrete_eigenvalues == g.discrete_eigenvalues);
    CHECK_THROWS_AS(GroupDatum::from_json(R"({"b": -1})"), DomainError);
    CHECK_THROWS_AS(GroupDatum::from_json("not json"), DomainError);
}
