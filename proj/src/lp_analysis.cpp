#include "eisenspec/lp_analysis.hpp"

#include <cmath>

#include "eisenspec/errors.hpp"
#include "eisenspec/parallel.hpp"

namespace eisenspec::lp {

double TailIntegral::exponent() const {
    const double shifted = sign == TailSign::Plus ? b + re_lambda : b - re_lambda;
    return p * shifted - 2.0 * b;
}

TailValue tail_integral(const TailIntegral& ti) {
    if (!(ti.b > 0.0)) throw DomainError("tail_integral: b must be > 0");
    if (!(ti.p >= 1.0)) throw DomainError("tail_integral: p must be >= 1");
    const double e = ti.exponent();
    if (e >= 0.0) return {false, 0.0};
    return {true, std::exp(e * ti.t0) / -e};
}

double tail_integral_numeric(const TailIntegral& ti, int points) {
    const double e = ti.exponent();
    if (e >= 0.0) throw DomainError("tail_integral_numeric: the tail diverges");
    const double shifted = ti.sign == TailSign::Plus ? ti.b + ti.re_lambda : ti.b - ti.re_lambda;
    auto integrand = [&](double t) {
        return std::pow(std::exp(shifted * t), ti.p) * std::exp(-2.0 * ti.b * ti.t0) *
               std::exp(-2.0 * ti.b * (t - ti.t0));
    };
    const auto& rule = GaussLegendreRule::cached(points);
    // Panels [t0 + L_k, t0 + L_{k+1}] with L doubling from 1/|e|, until the
    // remaining closed-form mass is negligible.
    double lo = ti.t0;
    double width = 1.0 / -e;
    std::vector<double> pieces;
    for (int k = 0; k < 200; ++k) {
        const double hi = lo + width;
        double piece = 0.0;
        for (std::size_t j = 0; j < rule.size(); ++j) {
            const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes()[j];
            piece += 0.5 * (hi - lo) * rule.weights()[j] * integrand(t);
        }
        pieces.push_back(piece);
        lo = hi;
        if (std::exp(e * lo) / -e < 1e-17 * std::exp(e * ti.t0) / -e) break;
        width = std::min(2.0 * width, 8.0 / -e);
    }
    return pairwise_sum(pieces);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Member: return "Member";
        case Verdict::NotMember: return "NotMember";
        case Verdict::Boundary: return "Boundary";
    }
    return "?";
}

MembershipResult lp_membership_verdict(const SpectralParameter& param, double p) {
    if (!(p >= 1.0 && p < 2.0)) throw DomainError("lp_membership_verdict: p must lie in [1, 2)");
    if (std::abs(param.s() - 1.0) < eisenstein::kDefaultPoleExclusion) {
        throw PoleProximityError("lp_membership_verdict: s is at the pole s = 1");
    }
    const double re = std::abs(param.lambda_h0().real());
    const double threshold = (2.0 - p) * param.b() / p;
    Verdict v = Verdict::NotMember;
    if (std::abs(re - threshold) <= 1e-12) {
        v = Verdict::Boundary;
    } else if (re < threshold) {
        v = Verdict::Member;
    }
    return {v, p == 1.0};
}

namespace {

// Integrates g(x, y) dx dy / y^2 over |x| <= 1/2, y from y_floor(x) to y_top,
// sharing one Fourier row per y node. `rows_at(y)` returns the row.
template <typename ColumnIntegrand>
double integrate_columns(const NormGrid& grid, ColumnIntegrand&& column) {
    const auto xs = composite_rule(-0.5, 0.5, QuadratureSpec{1, grid.x_points});
    std::vector<double> cols(xs.nodes.size());
    parallel_for(xs.nodes.size(), [&](std::size_t i) { cols[i] = xs.weights[i] * column(xs.nodes[i]); });
    return pairwise_sum(cols);
}

}  // namespace

TruncatedNorm lp_norm_truncated(const SpectralParameter& s, double p, double y_max,
                                const NormGrid& grid) {
    if (!(y_max > 1.0)) throw DomainError("lp_norm_truncated: y_max must be > 1");
    if (!(p >= 1.0)) throw DomainError("lp_norm_truncated: p must be >= 1");
    const auto xs = composite_rule(-0.5, 0.5, QuadratureSpec{1, grid.x_points});
    // Each column x has its own lower limit sqrt(1 - x^2), so the y nodes
    // differ per column; rows are computed per (column, y node).
    std::vector<double> cols(xs.nodes.size());
    parallel_for(xs.nodes.size(), [&](std::size_t i) {
        const double x = xs.nodes[i];
        const double y_floor = std::sqrt(1.0 - x * x);
        const auto ys = geometric_rule(y_floor, y_max, grid.y_ratio, grid.y_points);
        std::vector<double> vals(ys.nodes.size());
        for (std::size_t k = 0; k < ys.nodes.size(); ++k) {
            const double y = ys.nodes[k];
            const int modes = eisenstein::auto_mode_count(y, 1e-16);
            const auto row = eisenstein::fourier_row(y, s, modes);
            vals[k] = ys.weights[k] * std::pow(std::abs(row.evaluate(x)), p) / (y * y);
        }
        cols[i] = xs.weights[i] * pairwise_sum(vals);
    });
    const double integral = pairwise_sum(cols);
    return {std::pow(integral, 1.0 / p), integral};
}

double nonconstant_tail_integral(const SpectralParameter& s, double p, double y_lo, double y_hi,
                                 const NormGrid& grid) {
    if (!(y_lo > 0.0 && y_hi > y_lo)) {
        throw DomainError("nonconstant_tail_integral: need 0 < y_lo < y_hi");
    }
    const auto ys = geometric_rule(y_lo, y_hi, grid.y_ratio, grid.y_points);
    std::vector<eisenstein::FourierRow> rows;
    rows.reserve(ys.nodes.size());
    for (double y : ys.nodes) {
        auto row = eisenstein::fourier_row(y, s, eisenstein::auto_mode_count(y, 1e-16));
        row.constant = 0.0;
        rows.push_back(std::move(row));
    }
    return integrate_columns(grid, [&](double x) {
        std::vector<double> vals(ys.nodes.size());
        for (std::size_t k = 0; k < ys.nodes.size(); ++k) {
            const double y = ys.nodes[k];
            vals[k] = ys.weights[k] * std::pow(std::abs(rows[k].evaluate(x)), p) / (y * y);
        }
        return pairwise_sum(vals);
    });
}

}  // namespace eisenspec::lp
