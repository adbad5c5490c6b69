#include "eisenspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eisenspec/errors.hpp"

namespace eisenspec::spectrum {

namespace {

void check_p(double p, const char* what) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw DomainError(std::string(what) + ": p must lie in (1, inf)");
    }
}

void check_b(double b, const char* what) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError(std::string(what) + ": b must be > 0");
}

}  // namespace

void ParabolicRegion::validate() const {
    check_p(p, "ParabolicRegion");
    check_b(b, "ParabolicRegion");
    if (!(mu_shift >= 0.0)) throw DomainError("ParabolicRegion: mu_shift must be >= 0");
    if (!std::isfinite(c_shift)) throw DomainError("ParabolicRegion: c_shift must be finite");
    if (width_b < 0.0) throw DomainError("ParabolicRegion: width_b must be >= 0");
}

double ParabolicRegion::half_width() const {
    const double w = width_b > 0.0 ? width_b : b;
    return w * std::abs(2.0 / p - 1.0);
}

bool region_contains(Complex lambda, const ParabolicRegion& region, Membership mode) {
    region.validate();
    const Complex w = region.b * region.b - (lambda - region.mu_shift + region.c_shift);
    const double re_z = std::abs(std::sqrt(w).real());
    const double bound = region.half_width();
    const double slack = kBoundaryTolerance * std::max(1.0, region.b);
    if (mode == Membership::Closure) return re_z <= bound + slack;
    return re_z < bound - slack;
}

std::vector<BoundaryPoint> region_boundary(const ParabolicRegion& region, int samples,
                                           double tau_max) {
    region.validate();
    if (samples < 2) throw DomainError("region_boundary: samples must be >= 2");
    const double beta = region.half_width();
    std::vector<BoundaryPoint> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        // Symmetric grid: tau_k = -tau_{samples-1-k} exactly.
        const double frac = (2.0 * k - (samples - 1)) / (samples - 1);
        const double tau = tau_max * frac;
        const Complex z(beta, tau);
        out.push_back({tau, region.b * region.b - z * z + region.mu_shift - region.c_shift});
    }
    return out;
}

double apex_cp(double p, double b) {
    check_p(p, "apex_cp");
    check_b(b, "apex_cp");
    return 4.0 * b * b * (1.0 - 1.0 / p) / p;
}

bool full_spectrum_contains(Complex lambda, double p, const geometry::GroupDatum& group) {
    check_p(p, "full_spectrum_contains");
    group.validate();
    for (double ev : group.discrete_eigenvalues) {
        if (std::abs(lambda - ev) <= 1e-12) return true;
    }
    return region_contains(lambda, ParabolicRegion{p, group.b}, Membership::Closure);
}

Complex eigenvalue_of_param(const SpectralParameter& param, double mu) {
    return mu + param.eigenvalue();
}

double critical_exponent(const SpectralParameter& param) {
    const double re = std::abs(param.lambda_h0().real());
    if (re >= param.b()) return 1.0;
    return 2.0 * param.b() / (param.b() + re);
}

Complex h_map(Complex z, double p, double c, double b) {
    check_p(p, "h_map");
    check_b(b, "h_map");
    return Complex(0.0, 1.0 / b) * std::sqrt(z + c - b * b);
}

bool omega_contains(Complex z, double p, double c, double b) {
    check_p(p, "omega_contains");
    if (!(z.imag() < 0.0)) return false;
    return region_contains(z + c, ParabolicRegion{p, b}, Membership::Interior);
}

bool omega_meets_imaginary_axis(double p, double c, double b) {
    check_p(p, "omega_meets_imaginary_axis");
    for (int k = 0; k <= 220; ++k) {
        const double theta = std::pow(10.0, 1.0 - 0.05 * k);  // 10 down to 1e-10
        if (omega_contains(Complex(0.0, -theta), p, c, b)) return true;
    }
    return false;
}

double omega_boundary_distance(Complex z, double p, double c, double b) {
    check_p(p, "omega_boundary_distance");
    // Boundary of P - c: apex - c + tau^2 - 2 i beta tau.
    const double beta = b * std::abs(2.0 / p - 1.0);
    const double vertex = apex_cp(p, b) - c;
    auto dist = [&](double tau) {
        return std::abs(z - Complex(vertex + tau * tau, -2.0 * beta * tau));
    };
    // Coarse scan then golden-section refinement around the best sample.
    const double span = 2.0 + std::sqrt(std::abs(z - vertex));
    double best_tau = 0.0;
    double best = std::numeric_limits<double>::infinity();
    const int n = 4000;
    for (int k = 0; k <= n; ++k) {
        const double tau = -span + 2.0 * span * k / n;
        const double d = dist(tau);
        if (d < best) {
            best = d;
            best_tau = tau;
        }
    }
    double lo = best_tau - 2.0 * span / n;
    double hi = best_tau + 2.0 * span / n;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 100; ++it) {
        const double m1 = hi - g * (hi - lo);
        const double m2 = lo + g * (hi - lo);
        if (dist(m1) < dist(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    best = std::min(best, dist(0.5 * (lo + hi)));
    return std::min(best, std::abs(z.imag()));
}

double sector_angle(double p) {
    check_p(p, "sector_angle");
    return std::atan(std::abs(p - 2.0) / (2.0 * std::sqrt(p - 1.0)));
}

}  // namespace eisenspec::spectrum
