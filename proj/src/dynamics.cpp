#include "eisenspec/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "eisenspec/errors.hpp"
#include "eisenspec/parallel.hpp"
#include "eisenspec/quadrature.hpp"
#include "eisenspec/spectrum.hpp"

namespace eisenspec::dynamics {

using nlohmann::json;

void ModeSpan::validate() const {
    for (const auto& m : modes) {
        require_finite(m.lambda, "ModeSpan: lambda");
        require_finite(m.coefficient, "ModeSpan: coefficient");
        if (!m.s) continue;
        const Complex expected = SpectralParameter::from_s(*m.s, b).eigenvalue();
        if (std::abs(expected - m.lambda) > 1e-12) {
            throw DomainError("ModeSpan: lambda does not match the tagged spectral parameter");
        }
    }
}

namespace {

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex unpair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError(std::string("ModeSpan JSON: '") + what + "' must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string ModeSpan::to_json() const {
    json arr = json::array();
    for (const auto& m : modes) {
        json rec = {{"lambda", pair(m.lambda)}, {"coeff", pair(m.coefficient)}};
        if (m.s) rec["s"] = pair(*m.s);
        arr.push_back(std::move(rec));
    }
    return arr.dump(2);
}

ModeSpan ModeSpan::from_json(const std::string& text, double b) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("ModeSpan JSON: ") + e.what());
    }
    if (!arr.is_array()) throw DomainError("ModeSpan JSON: expected an array of modes");
    ModeSpan span;
    span.b = b;
    for (const auto& rec : arr) {
        if (!rec.is_object() || !rec.contains("lambda") || !rec.contains("coeff")) {
            throw DomainError("ModeSpan JSON: each mode needs 'lambda' and 'coeff'");
        }
        Mode m{unpair(rec["lambda"], "lambda"), unpair(rec["coeff"], "coeff"), std::nullopt};
        if (rec.contains("s")) m.s = unpair(rec["s"], "s");
        span.modes.push_back(m);
    }
    span.validate();
    return span;
}

ModeSpan evolve(const ModeSpan& span, double t, double c) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("evolve: t must be finite and >= 0");
    ModeSpan out = span;
    for (auto& m : out.modes) m.coefficient *= std::exp(-t * (m.lambda - c));
    return out;
}

const char* to_string(ModeClass m) {
    switch (m) {
        case ModeClass::Decaying: return "Decaying";
        case ModeClass::Growing: return "Growing";
        case ModeClass::Neutral: return "Neutral";
    }
    return "?";
}

ModeClass classify_mode(Complex lambda, double c) {
    const double re = lambda.real() - c;
    if (std::abs(re) <= 1e-14) return ModeClass::Neutral;
    return re > 0.0 ? ModeClass::Decaying : ModeClass::Growing;
}

double span_distance(const ModeSpan& a, const ModeSpan& b) {
    if (a.modes.size() != b.modes.size()) throw DomainError("span_distance: spans differ in size");
    double d = 0.0;
    for (std::size_t i = 0; i < a.modes.size(); ++i) {
        d = std::max(d, std::abs(a.modes[i].coefficient - b.modes[i].coefficient));
    }
    return d;
}

PeriodicParam periodic_param(double theta, double p, double c, double b) {
    if (!(p > 1.0 && p < 2.0)) throw DomainError("periodic_param: p must lie in (1, 2)");
    if (theta == 0.0 || !std::isfinite(theta)) {
        throw DomainError("periodic_param: theta must be finite and nonzero");
    }
    PeriodicParam out;
    const Complex lambda_h0 = std::sqrt(Complex(b * b - c, -theta));
    out.param = SpectralParameter(lambda_h0, b);
    out.period = 2.0 * std::numbers::pi / std::abs(theta);
    const double threshold = (2.0 - p) * b / p;
    const double re = std::abs(lambda_h0.real());
    const bool in_region = spectrum::region_contains(Complex(c, theta), spectrum::ParabolicRegion{p, b},
                                                     spectrum::Membership::Interior);
    if (re < threshold && in_region) {
        out.admissible = true;
    } else {
        std::ostringstream msg;
        msg << "|Re Lambda(H0)| = " << re << " is not below (2 - p) b / p = " << threshold;
        out.reason = msg.str();
    }
    return out;
}

ModeSpan periodic_span(const PeriodicParam& pp, Complex coefficient) {
    ModeSpan span;
    span.b = pp.param.b();
    span.modes.push_back({pp.param.eigenvalue(), coefficient, pp.param.s()});
    return span;
}

const char* to_string(Chaos c) {
    switch (c) {
        case Chaos::SubspaceChaotic: return "SubspaceChaotic";
        case Chaos::NotSubspaceChaotic: return "NotSubspaceChaotic";
        case Chaos::Inconclusive: return "Inconclusive";
    }
    return "?";
}

ChaosVerdict chaos_verdict(double p, double c, double b) {
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("chaos_verdict: p must lie in (1, inf)");
    if (!(b > 0.0)) throw DomainError("chaos_verdict: b must be > 0");
    if (!std::isfinite(c)) throw DomainError("chaos_verdict: c must be finite");
    std::ostringstream w;
    if (p >= 2.0) {
        w << "p >= 2: the point spectrum is a discrete set of reals, so it cannot meet "
             "the imaginary axis in infinitely many points";
        return {Chaos::NotSubspaceChaotic, w.str()};
    }
    const double cp = spectrum::apex_cp(p, b);
    if (c > cp) {
        w << "c = " << c << " > c_p = " << cp << ": Omega meets iR and h maps Omega onto the strip "
          << "0 < Re w < " << (2.0 / p - 1.0) << ", Im w > 0";
        return {Chaos::SubspaceChaotic, w.str()};
    }
    w << "c = " << c << " <= c_p = " << cp << ": no claim";
    return {Chaos::Inconclusive, w.str()};
}

SpectralParameter param_of_omega_point(Complex z, double p, double c, double b) {
    return SpectralParameter(b * spectrum::h_map(z, p, c, b), b);
}

namespace {

double cubic_bspline(double u) {
    const double a = std::abs(u);
    if (a < 1.0) return 2.0 / 3.0 - a * a + 0.5 * a * a * a;
    if (a < 2.0) return (2.0 - a) * (2.0 - a) * (2.0 - a) / 6.0;
    return 0.0;
}

constexpr int kBumpGrid = 32;
constexpr double kBumpX = 0.4;
constexpr double kBumpYLo = 1.2;
constexpr double kBumpYHi = 2.4;

}  // namespace

Complex bump_pairing(const SpectralParameter& s) {
    const double hx = 2.0 * kBumpX / kBumpGrid;
    const double hy = (kBumpYHi - kBumpYLo) / kBumpGrid;
    const double ymid = 0.5 * (kBumpYLo + kBumpYHi);
    const double yhalf = 0.5 * (kBumpYHi - kBumpYLo);
    std::vector<Complex> terms;
    terms.reserve(kBumpGrid * kBumpGrid);
    for (int j = 0; j < kBumpGrid; ++j) {
        const double y = kBumpYLo + (j + 0.5) * hy;
        const auto row = eisenstein::fourier_row(y, s, eisenstein::auto_mode_count(y, 1e-18));
        const double wy = cubic_bspline(2.0 * (y - ymid) / yhalf) / (y * y);
        for (int i = 0; i < kBumpGrid; ++i) {
            const double x = -kBumpX + (i + 0.5) * hx;
            const double wx = cubic_bspline(2.0 * x / kBumpX);
            terms.push_back(wx * wy * hx * hy * row.evaluate(x));
        }
    }
    std::vector<double> re(terms.size()), im(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        re[k] = terms[k].real();
        im[k] = terms[k].imag();
    }
    return {pairwise_sum(re), pairwise_sum(im)};
}

ProbeResult analyticity_probe(const ProbeSpec& spec) {
    if (spec.nodes < 64) throw DomainError("analyticity_probe: at least 64 contour nodes are required");
    if (!spectrum::omega_contains(spec.center, spec.p, spec.c, spec.b)) {
        throw DomainError("analyticity_probe: contour leaves Omega (center is outside)");
    }
    const double dist = spectrum::omega_boundary_distance(spec.center, spec.p, spec.c, spec.b);
    const double r = spec.radius > 0.0 ? spec.radius : 0.5 * dist;
    if (!(r < dist)) throw DomainError("analyticity_probe: contour leaves Omega");

    const auto n = static_cast<std::size_t>(spec.nodes);
    std::vector<Complex> vals(n);
    std::vector<Complex> dirs(n);
    parallel_for(n, [&](std::size_t k) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        dirs[k] = std::polar(1.0, phase);
        const Complex z = spec.center + r * dirs[k];
        Complex f = bump_pairing(param_of_omega_point(z, spec.p, spec.c, spec.b));
        if (spec.broken) f = std::abs(f);
        vals[k] = f;
    });
    // Trapezoid rule: oint F dz = sum F(z_k) i r e^{i phi_k} (2 pi / n).
    std::vector<double> re(n), im(n);
    double max_abs = 0.0;
    const double dphi = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex term = vals[k] * Complex(0.0, r) * dirs[k] * dphi;
        re[k] = term.real();
        im[k] = term.imag();
        max_abs = std::max(max_abs, std::abs(vals[k]));
    }
    const double integral = std::abs(Complex(pairwise_sum(re), pairwise_sum(im)));
    if (!(max_abs > 0.0)) throw NonFiniteError("analyticity_probe: pairing vanished on the contour");
    return {integral / (2.0 * std::numbers::pi * r * max_abs), r, max_abs};
}

std::vector<Complex> omega_samples(double p, double c, double b, int n, unsigned seed) {
    if (!(p > 1.0 && p < 2.0)) throw DomainError("omega_samples: p must lie in (1, 2)");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uu(0.1, 0.9);
    std::uniform_real_distribution<double> vv(0.05, 2.0);
    const double width = 2.0 / p - 1.0;
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(out.size()) < n) {
        const Complex w(width * uu(rng), vv(rng));
        const Complex z = b * b * (1.0 - w * w) - c;
        if (spectrum::omega_contains(z, p, c, b)) out.push_back(z);
    }
    return out;
}

DswReport dsw_conditions_report(double p, double c, double b, const ProbeSpec& probe, int samples,
                                double step) {
    if (!(p > 1.0 && p < 2.0)) throw DomainError("dsw_conditions_report: p must lie in (1, 2)");
    DswReport rep;
    rep.meets_imaginary_axis = spectrum::omega_meets_imaginary_axis(p, c, b);
    rep.samples = samples;
    const auto zs = omega_samples(p, c, b, samples);
    const geometry::UpperHalfPoint at(0.2, 1.4);
    std::vector<double> res(zs.size());
    std::vector<double> ident(zs.size());
    parallel_for(zs.size(), [&](std::size_t k) {
        const auto s = param_of_omega_point(zs[k], p, c, b);
        ident[k] = std::abs(spectrum::eigenvalue_of_param(s, 0.0) - c - zs[k]);
        res[k] = eisenstein::eigencheck_residual(at, s, step);
    });
    for (std::size_t k = 0; k < zs.size(); ++k) {
        rep.max_eigen_residual = std::max(rep.max_eigen_residual, res[k]);
        rep.max_eigenvalue_identity = std::max(rep.max_eigenvalue_identity, ident[k]);
    }
    ProbeSpec ps = probe;
    ps.p = p;
    ps.c = c;
    ps.b = b;
    rep.probe = analyticity_probe(ps);
    return rep;
}

ModeSpan tensor_modes(const ModeSpan& m1, const ModeSpan& m2) {
    ModeSpan out;
    out.b = m1.b;
    out.modes.reserve(m1.modes.size() * m2.modes.size());
    for (const auto& a : m1.modes) {
        for (const auto& bm : m2.modes) {
            out.modes.push_back({a.lambda + bm.lambda, a.coefficient * bm.coefficient, std::nullopt});
        }
    }
    return out;
}

std::optional<double> common_period(double t1, double t2, int max_den, double rel_tol) {
    if (!(t1 > 0.0 && t2 > 0.0)) throw DomainError("common_period: periods must be > 0");
    const double ratio = t1 / t2;  // = n2 / n1 with T = n1 t1 = n2 t2
    for (int n1 = 1; n1 <= max_den; ++n1) {
        const double n2 = std::round(ratio * n1);
        if (n2 < 1.0) continue;
        if (std::abs(ratio * n1 - n2) <= rel_tol * n2) return n1 * t1;
    }
    return std::nullopt;
}

std::vector<OrbitRow> orbit_trace(const ModeSpan& span, double c, double t_max, int steps) {
    if (steps < 1) throw DomainError("orbit_trace: steps must be >= 1");
    if (!(t_max >= 0.0)) throw DomainError("orbit_trace: t_max must be >= 0");
    std::vector<OrbitRow> rows;
    rows.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        const double t = t_max * k / steps;
        const auto ev = evolve(span, t, c);
        OrbitRow row{t, {}, 0.0};
        double sq = 0.0;
        for (const auto& m : ev.modes) {
            const double a = std::abs(m.coefficient);
            row.moduli.push_back(a);
            sq += a * a;
        }
        row.norm_proxy = std::sqrt(sq);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace eisenspec::dynamics
