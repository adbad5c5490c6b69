#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "eisenspec/parallel.hpp"
#include "eisenspec/quadrature.hpp"

using namespace eisenspec;

TEST_CASE("Gauss-Legendre integrates polynomials up to degree 2n-1 exactly") {
    for (int n : {2, 5, 16, 64}) {
        const auto& rule = GaussLegendreRule::cached(n);
        for (int deg = 0; deg <= 2 * n - 1; deg += 3) {
            double q = 0.0;
            for (std::size_t k = 0; k < rule.size(); ++k) q += rule.weights()[k] * std::pow(rule.nodes()[k], deg);
            const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
            CHECK(q == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("composite and geometric rules") {
    const auto r = composite_rule(0.0, std::numbers::pi, QuadratureSpec{4, 16});
    double s = 0.0;
    for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * std::sin(r.nodes[k]);
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));

    // int_1^40 y^{-2} dy = 1 - 1/40
    const auto g = geometric_rule(1.0, 40.0, 2.0, 32);
    double t = 0.0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) t += g.weights[k] / (g.nodes[k] * g.nodes[k]);
    CHECK(t == doctest::Approx(1.0 - 1.0 / 40.0).epsilon(1e-14));
    for (double y : g.nodes) {
        CHECK(y > 1.0);
        CHECK(y < 40.0);
    }
}

TEST_CASE("pairwise_sum is exact on integers and independent of thread count") {
    std::vector<double> v(10001);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
    CHECK(pairwise_sum(v) == 10000.0 * 10001.0 / 2.0);

    std::vector<double> out(1000);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = std::sqrt(static_cast<double>(i)); });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == std::sqrt(static_cast<double>(i)));
}

TEST_CASE("parallel_for propagates exceptions") {
    CHECK_THROWS(parallel_for(100, [](std::size_t i) {
        if (i == 57) throw std::runtime_error("boom");
    }));
}
