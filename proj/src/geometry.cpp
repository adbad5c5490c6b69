#include "eisenspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "eisenspec/errors.hpp"

namespace eisenspec::geometry {

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw DomainError("UpperHalfPoint: coordinates must be finite");
    }
    if (!(y > 0.0)) {
        throw DomainError("UpperHalfPoint: height y must be > 0");
    }
}

MobiusTransform::MobiusTransform(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (a * d - b * c != 1) {
        throw DomainError("MobiusTransform: determinant ad - bc must equal 1");
    }
}

MobiusTransform operator*(const MobiusTransform& g, const MobiusTransform& h) {
    return {g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
            g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_};
}

bool operator==(const MobiusTransform& g, const MobiusTransform& h) noexcept {
    const bool same = g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_ && g.d_ == h.d_;
    const bool opposite = g.a_ == -h.a_ && g.b_ == -h.b_ && g.c_ == -h.c_ && g.d_ == -h.d_;
    return same || opposite;
}

std::string MobiusTransform::to_string() const {
    std::ostringstream os;
    os << "[[" << a_ << ", " << b_ << "], [" << c_ << ", " << d_ << "]]";
    return os.str();
}

void GroupDatum::validate() const {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("GroupDatum: b must be > 0");
    if (!(volume > 0.0) || !std::isfinite(volume)) {
        throw DomainError("GroupDatum: volume must be > 0");
    }
    if (discrete_eigenvalues.empty() || discrete_eigenvalues.front() != 0.0) {
        throw DomainError("GroupDatum: discrete_eigenvalues must start with exactly 0");
    }
    if (!std::is_sorted(discrete_eigenvalues.begin(), discrete_eigenvalues.end())) {
        throw DomainError("GroupDatum: discrete_eigenvalues must be sorted");
    }
}

GroupDatum GroupDatum::modular_surface() {
    return GroupDatum{0.5, {0.0}, std::numbers::pi / 3.0};
}

std::string GroupDatum::to_json() const {
    nlohmann::json j;
    j["b"] = b;
    j["discrete_eigenvalues"] = discrete_eigenvalues;
    j["volume"] = volume;
    return j.dump(2);
}

GroupDatum GroupDatum::from_json(const std::string& text) {
    GroupDatum g;
    try {
        const auto j = nlohmann::json::parse(text);
        g.b = j.at("b").get<double>();
        g.discrete_eigenvalues = j.at("discrete_eigenvalues").get<std::vector<double>>();
        g.volume = j.at("volume").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("GroupDatum JSON: ") + e.what());
    }
    g.validate();
    return g;
}

GroupDatum GroupDatum::load(const std::string& name_or_path) {
    if (name_or_path == "modular") return modular_surface();
    std::ifstream in(name_or_path);
    if (!in) throw DomainError("GroupDatum: cannot open " + name_or_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

UpperHalfPoint mobius_apply(const MobiusTransform& g, const UpperHalfPoint& z) {
    const double a = static_cast<double>(g.a());
    const double b = static_cast<double>(g.b());
    const double c = static_cast<double>(g.c());
    const double d = static_cast<double>(g.d());
    // (az+b)/(cz+d) = ((az+b)(c zbar + d)) / |cz+d|^2; imaginary part is y/|cz+d|^2.
    const double re_den = c * z.x() + d;
    const double im_den = c * z.y();
    const double den = re_den * re_den + im_den * im_den;
    const double re_num = a * z.x() + b;
    const double x = (re_num * re_den + a * z.y() * im_den) / den;
    const double y = z.y() / den;
    return {x, y};
}

bool in_fundamental_domain(const UpperHalfPoint& z) noexcept {
    return std::abs(z.x()) <= 0.5 && z.x() * z.x() + z.y() * z.y() >= 1.0;
}

Reduction reduce_to_fundamental_domain(const UpperHalfPoint& z) {
    UpperHalfPoint w = z;
    MobiusTransform g = MobiusTransform::identity();
    for (int iter = 0; iter <= kReductionIterationCap; ++iter) {
        const double shift = std::round(w.x());
        // |x| == 1/2 is already in the closed domain.
        if (std::abs(w.x()) > 0.5 && shift != 0.0) {
            const auto n = static_cast<std::int64_t>(-shift);
            const auto t = MobiusTransform::translation(n);
            w = UpperHalfPoint(w.x() + static_cast<double>(n), w.y());
            g = t * g;
        }
        if (w.x() * w.x() + w.y() * w.y() >= 1.0) return {w, g};
        w = mobius_apply(MobiusTransform::S(), w);
        g = MobiusTransform::S() * g;
    }
    throw ConvergenceError("reduce_to_fundamental_domain: iteration cap exceeded "
                           "(input too close to the real axis)");
}

std::vector<CosetPair> coset_representatives(int bound) {
    if (bound < 1) throw DomainError("coset_representatives: bound must be >= 1");
    std::vector<CosetPair> out;
    out.push_back({0, 1});
    for (std::int64_t c = 1; c <= bound; ++c) {
        for (std::int64_t d = -bound; d <= bound; ++d) {
            if (std::gcd(c, d) == 1) out.push_back({c, d});
        }
    }
    return out;
}

double fundamental_volume_numeric(const QuadratureSpec& grid) {
    if (grid.panels < 1 || grid.points < 1) {
        throw DomainError("fundamental_volume_numeric: grid resolution must be positive");
    }
    // In u = 1/y the measure dx dy / y^2 becomes dx du on
    // {|x| <= 1/2, 0 < u <= 1/sqrt(1 - x^2)}.
    const auto xs = composite_rule(-0.5, 0.5, grid);
    const auto& inner = GaussLegendreRule::cached(grid.points);
    std::vector<double> columns(xs.nodes.size());
    for (std::size_t i = 0; i < xs.nodes.size(); ++i) {
        const double x = xs.nodes[i];
        const double u_top = 1.0 / std::sqrt(1.0 - x * x);
        double col = 0.0;
        for (std::size_t k = 0; k < inner.size(); ++k) {
            col += 0.5 * u_top * inner.weights()[k];  // integrand is 1 in (x, u)
        }
        columns[i] = xs.weights[i] * col;
    }
    return pairwise_sum(columns);
}

}  // namespace eisenspec::geometry
