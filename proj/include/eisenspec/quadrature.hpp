#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eisenspec {

/// Composite quadrature resolution: the interval is split into `panels`
/// equal panels, each carrying a Gauss-Legendre rule with `points` nodes.
struct QuadratureSpec {
    int panels = 1;
    int points = 64;
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(int n);

    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

    /// Cached rule; rules are immutable once built so sharing is safe.
    static const GaussLegendreRule& cached(int n);

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct WeightedNodes {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Composite rule on [a, b] with equal panels.
WeightedNodes composite_rule(double a, double b, const QuadratureSpec& spec);

/// Composite rule on [a, b] with panel edges a, a*r, a*r^2, ... (a > 0),
/// the last panel clipped at b.
WeightedNodes geometric_rule(double a, double b, double ratio, int points);

/// Pairwise (cascade) summation; result independent of thread scheduling.
double pairwise_sum(std::span<const double> values);

}  // namespace eisenspec
