#include "eisenspec/eisenstein.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "eisenspec/errors.hpp"
#include "eisenspec/kernels/kernels.hpp"
#include "eisenspec/parallel.hpp"
#include "eisenspec/quadrature.hpp"
#include "eisenspec/special_functions.hpp"

namespace eisenspec::eisenstein {

namespace {

using std::numbers::pi;

void require_modular(const SpectralParameter& s, const char* what) {
    if (s.b() != 0.5) {
        throw DomainError(std::string(what) + ": the modular-surface evaluator needs b = 1/2");
    }
}

void check_poles(Complex s, double pole_exclusion, const char* what) {
    if (std::abs(s - 1.0) < pole_exclusion) {
        throw PoleProximityError(std::string(what) + ": s is inside the exclusion disc around 1");
    }
}

Complex power(double base, Complex exponent) { return std::exp(exponent * std::log(base)); }

// Continuum estimate of sum |cz + d|^{-2s} over the plane outside the box
// max(|c|, |d|) <= half_width, in polar coordinates (c, d) = r (cos t, sin t).
Complex exterior_integral(double x, double y, Complex s, double half_width) {
    const auto& rule = GaussLegendreRule::cached(40);
    Complex total = 0.0;
    for (int octant = 0; octant < 8; ++octant) {
        const double lo = octant * pi / 4.0;
        const double hi = (octant + 1) * pi / 4.0;
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const double t = mid + half * rule.nodes()[k];
            const double ct = std::cos(t);
            const double st = std::sin(t);
            const double q = (x * ct + st) * (x * ct + st) + y * y * ct * ct;
            const double radius = half_width / std::max(std::abs(ct), std::abs(st));
            total += half * rule.weights()[k] * power(q, -s) * power(radius, 2.0 - 2.0 * s);
        }
    }
    return total / (2.0 * s - 2.0);
}

Complex divisor_power_sum(int n, Complex exponent) {
    Complex sum = 0.0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += power(d, exponent);
        const int other = n / d;
        if (other != d) sum += power(other, exponent);
    }
    return sum;
}

}  // namespace

SpectralParameter::SpectralParameter(Complex lambda_h0, double b) : lambda_h0_(lambda_h0), b_(b) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("SpectralParameter: b must be > 0");
    if (!std::isfinite(lambda_h0.real()) || !std::isfinite(lambda_h0.imag())) {
        throw DomainError("SpectralParameter: Lambda(H0) must be finite");
    }
}

SpectralParameter SpectralParameter::from_s(Complex s, double b) {
    return SpectralParameter(s - b, b);
}

CosetResult eval_coset(const UpperHalfPoint& z, const SpectralParameter& param, int bound) {
    require_modular(param, "eval_coset");
    const Complex s = param.s();
    if (!(s.real() > 1.0)) {
        throw DomainError("eval_coset: the coset sum converges only for Re s > 1");
    }
    if (bound < 1) throw DomainError("eval_coset: bound must be >= 1");

    const double x = z.x();
    const double y = z.y();
    const double sigma = s.real();
    const double tau = s.imag();

    // Row c collects the d in [-bound, bound] coprime to c.
    std::vector<Complex> rows(static_cast<std::size_t>(bound));
    parallel_for(rows.size(), [&](std::size_t i) {
        const int c = static_cast<int>(i) + 1;
        std::vector<char> unit(static_cast<std::size_t>(c));
        for (int r = 0; r < c; ++r) unit[static_cast<std::size_t>(r)] = std::gcd(r, c) == 1;
        std::vector<double> ds;
        ds.reserve(2 * static_cast<std::size_t>(bound) + 1);
        for (int d = -bound; d <= bound; ++d) {
            const int r = ((d % c) + c) % c;
            if (unit[static_cast<std::size_t>(r)]) ds.push_back(d);
        }
        rows[i] = kernels::coset_row_sum(c * x, (c * y) * (c * y), ds, sigma, tau);
    });
    std::vector<double> re(rows.size());
    std::vector<double> im(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        re[i] = rows[i].real();
        im[i] = rows[i].imag();
    }
    const Complex y_pow = power(y, s);
    const Complex truncated = y_pow * (1.0 + Complex(pairwise_sum(re), pairwise_sum(im)));

    const double trace = x * x + y * y + 1.0;
    const double det = y * y;
    const double lambda_min = 2.0 * det / (trace + std::sqrt(trace * trace - 4.0 * det));
    const double tail_bound = 4.0 * std::pow(y, sigma) * std::pow(lambda_min, -sigma) *
                              std::pow(static_cast<double>(bound), 2.0 - 2.0 * sigma) /
                              (2.0 * sigma - 2.0);
    const double zeta_two = pi * pi / 6.0;
    const Complex tail = y_pow * exterior_integral(x, y, s, bound + 0.5) / (2.0 * zeta_two);

    return {require_finite(truncated + tail, "eval_coset"), truncated, tail, tail_bound};
}

int auto_mode_count(double y, double tolerance) {
    if (!(tolerance > 0.0 && tolerance < 1.0)) {
        throw DomainError("auto_mode_count: tolerance must lie in (0, 1)");
    }
    // exp(-2 pi (N + 1) y) < tol  <=>  N + 1 > -log(tol) / (2 pi y)
    const int n = static_cast<int>(std::floor(-std::log(tolerance) / (2.0 * pi * y)));
    return std::max(3, n);
}

Complex FourierRow::evaluate(double x) const {
    Complex sum = 0.0;
    // Highest modes first: they are the smallest.
    for (std::size_t n = cos_coefficients.size(); n >= 1; --n) {
        sum += cos_coefficients[n - 1] * std::cos(2.0 * pi * static_cast<double>(n) * x);
    }
    return constant + sum;
}

FourierRow fourier_row(double y, const SpectralParameter& param, int modes, double pole_exclusion) {
    require_modular(param, "fourier_row");
    const Complex s = param.s();
    check_poles(s, pole_exclusion, "eval_fourier");
    if (modes < 0) throw DomainError("eval_fourier: mode count must be >= 0");

    FourierRow row;
    row.constant = constant_term(y, param);
    row.cos_coefficients.resize(static_cast<std::size_t>(modes));
    const Complex prefactor = 4.0 * std::sqrt(y) / special::completed_zeta(2.0 * s);
    const Complex order = s - 0.5;
    for (int n = 1; n <= modes; ++n) {
        const auto k = special::bessel_k(order, 2.0 * pi * n * y);
        if (k.underflow) break;  // all later modes underflow too
        row.cos_coefficients[static_cast<std::size_t>(n - 1)] =
            prefactor * power(n, order) * divisor_power_sum(n, 1.0 - 2.0 * s) * k.value;
    }
    return row;
}

FourierResult eval_fourier(const UpperHalfPoint& z, const SpectralParameter& param,
                           const FourierOptions& options) {
    FourierResult result;
    result.precision_warning = z.y() < 0.05;
    result.evaluated_at = options.reduce ? geometry::reduce_to_fundamental_domain(z).point : z;
    const double y = result.evaluated_at.y();
    result.modes = options.modes > 0 ? options.modes : auto_mode_count(y, options.tolerance);
    result.truncation_bound = std::exp(-2.0 * pi * (result.modes + 1) * y);
    const auto row = fourier_row(y, param, result.modes, options.pole_exclusion);
    result.value = require_finite(row.evaluate(result.evaluated_at.x()), "eval_fourier");
    return result;
}

Complex scattering_phi(const SpectralParameter& param) {
    const Complex s = param.s();
    // The open disc of radius 1e-4 around 1/2; the slack keeps the rounded
    // boundary point 1/2 + 1e-4 admissible.
    if (std::abs(s - 0.5) < kHalfLimitExclusion * (1.0 - 1e-9)) {
        throw PoleProximityError("scattering_phi: s within 1e-4 of 1/2 (use the limit value -1)");
    }
    return require_finite(special::completed_zeta(2.0 * s - 1.0) / special::completed_zeta(2.0 * s),
                          "scattering_phi");
}

Complex constant_term(double y, const SpectralParameter& param) {
    if (!(y > 0.0)) throw DomainError("constant_term: y must be > 0");
    const Complex s = param.s();
    return power(y, s) + scattering_phi(param) * power(y, 1.0 - s);
}

double eigencheck_residual(const std::function<Complex(const UpperHalfPoint&)>& f,
                           Complex eigenvalue, const UpperHalfPoint& z, double step) {
    if (!(step > 0.0)) throw DomainError("eigencheck_residual: step must be > 0");
    if (z.y() - step <= 0.05) {
        throw DomainError("eigencheck_residual: stencil must stay in y > 0.05");
    }
    const double x = z.x();
    const double y = z.y();
    const Complex center = f(z);
    const Complex second_x = f({x + step, y}) + f({x - step, y}) - 2.0 * center;
    const Complex second_y = f({x, y + step}) + f({x, y - step}) - 2.0 * center;
    const Complex laplacian = -y * y * (second_x + second_y) / (step * step);
    const Complex defect = laplacian - eigenvalue * center;
    if (std::abs(center) == 0.0) return std::abs(defect);
    return std::abs(defect) / std::abs(center);
}

double eigencheck_residual(const UpperHalfPoint& z, const SpectralParameter& s, double step) {
    const auto e = [&s](const UpperHalfPoint& w) { return eval_fourier(w, s).value; };
    return eigencheck_residual(e, s.s() * (1.0 - s.s()), z, step);
}

Complex residue_at_one(const UpperHalfPoint& z, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.01)) {
        throw DomainError("residue_at_one: epsilon must lie in (0, 0.01]");
    }
    constexpr int kLevels = 5;
    FourierOptions options;
    options.pole_exclusion = 0.0;
    double eps[kLevels];
    Complex table[kLevels];
    for (int k = 0; k < kLevels; ++k) {
        eps[k] = epsilon * std::ldexp(1.0, -k);
        const auto s = SpectralParameter::from_s(1.0 + eps[k]);
        table[k] = eps[k] * eval_fourier(z, s, options).value;
    }
    // Neville's scheme evaluated at eps = 0; after pass m, table[k] holds the
    // interpolant through points k..k+m.
    Complex previous = table[0];
    for (int m = 1; m < kLevels; ++m) {
        previous = table[0];
        for (int k = 0; k + m < kLevels; ++k) {
            table[k] = (eps[k] * table[k + 1] - eps[k + m] * table[k]) / (eps[k] - eps[k + m]);
        }
    }
    const Complex result = table[0];
    // previous = extrapolant from the first four points.
    if (std::abs(result - previous) > 1e-6 * std::abs(result)) {
        throw ConvergenceError("residue_at_one: Richardson extrapolation did not settle");
    }
    return result;
}

EisensteinEvaluator::EisensteinEvaluator(GroupDatum group, EvaluatorConfig config)
    : group_(std::move(group)), config_(config) {
    group_.validate();
    if (group_.b != 0.5) {
        throw DomainError("EisensteinEvaluator: only the modular surface (b = 1/2) is supported");
    }
    if (config_.method == Method::CosetSum && config_.truncation < 1) {
        throw DomainError("EisensteinEvaluator: coset method needs a bound >= 1");
    }
}

Complex EisensteinEvaluator::operator()(const UpperHalfPoint& z, const SpectralParameter& s) const {
    if (config_.method == Method::CosetSum) {
        check_poles(s.s(), config_.pole_exclusion, "eval_coset");
        return eval_coset(z, s, config_.truncation).value;
    }
    FourierOptions options;
    options.modes = config_.truncation;
    options.pole_exclusion = config_.pole_exclusion;
    return eval_fourier(z, s, options).value;
}

}  // namespace eisenspec::eisenstein
