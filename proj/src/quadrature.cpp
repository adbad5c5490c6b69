#include "eisenspec/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace eisenspec {

GaussLegendreRule::GaussLegendreRule(int n) {
    if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
    nodes_.resize(n);
    weights_.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            const double pn = (n == 1) ? x : p1;
            const double pnm1 = (n == 1) ? 1.0 : p0;
            dp = n * (x * pn - pnm1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        const double pn = (n == 1) ? x : p1;
        const double pnm1 = (n == 1) ? 1.0 : p0;
        dp = n * (x * pn - pnm1) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes_[i] = -x;
        nodes_[n - 1 - i] = x;
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

const GaussLegendreRule& GaussLegendreRule::cached(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(n);
    return *slot;
}

namespace {

void append_panel(WeightedNodes& out, const GaussLegendreRule& rule, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t k = 0; k < rule.size(); ++k) {
        out.nodes.push_back(mid + half * rule.nodes()[k]);
        out.weights.push_back(half * rule.weights()[k]);
    }
}

}  // namespace

WeightedNodes composite_rule(double a, double b, const QuadratureSpec& spec) {
    if (spec.panels < 1 || spec.points < 1) {
        throw std::invalid_argument("quadrature resolution must be positive");
    }
    const auto& rule = GaussLegendreRule::cached(spec.points);
    WeightedNodes out;
    out.nodes.reserve(static_cast<std::size_t>(spec.panels) * rule.size());
    out.weights.reserve(out.nodes.capacity());
    const double h = (b - a) / spec.panels;
    for (int k = 0; k < spec.panels; ++k) {
        const double lo = a + k * h;
        const double hi = (k + 1 == spec.panels) ? b : lo + h;
        append_panel(out, rule, lo, hi);
    }
    return out;
}

WeightedNodes geometric_rule(double a, double b, double ratio, int points) {
    if (!(a > 0.0) || !(b > a) || !(ratio > 1.0)) {
        throw std::invalid_argument("geometric rule needs 0 < a < b and ratio > 1");
    }
    const auto& rule = GaussLegendreRule::cached(points);
    WeightedNodes out;
    double lo = a;
    while (lo < b) {
        double hi = lo * ratio;
        // Avoid a sliver panel at the top.
        if (hi > b || (b - hi) < 0.25 * (hi - lo)) hi = b;
        append_panel(out, rule, lo, hi);
        lo = hi;
    }
    return out;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

}  // namespace eisenspec
