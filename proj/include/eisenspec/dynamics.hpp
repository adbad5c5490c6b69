#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "eisenspec/eisenstein.hpp"

namespace eisenspec::dynamics {

using Complex = std::complex<double>;
using eisenstein::SpectralParameter;

struct Mode {
    Complex lambda;
    Complex coefficient;
    std::optional<Complex> s;  // tag: spectral parameter s = b + Lambda(H0)
};

/// Finite combination of eigenfunctions, evolved diagonally.
struct ModeSpan {
    std::vector<Mode> modes;
    double b = 0.5;  // used to check tagged modes

    /// Throws DomainError if a tagged mode's lambda differs from s(2b - s)
    /// (i.e. b^2 - Lambda^2) by more than 1e-12.
    void validate() const;

    [[nodiscard]] std::string to_json() const;
    static ModeSpan from_json(const std::string& text, double b = 0.5);
};

/// Coefficients multiplied by exp(-t (lambda - c)). Requires t >= 0.
ModeSpan evolve(const ModeSpan& span, double t, double c);

enum class ModeClass { Decaying, Growing, Neutral };
const char* to_string(ModeClass m);

/// Sign of Re(lambda - c), Neutral within 1e-14.
ModeClass classify_mode(Complex lambda, double c);

/// Max over modes of |coefficient difference|, for spans with equal layout.
double span_distance(const ModeSpan& a, const ModeSpan& b);

struct PeriodicParam {
    bool admissible = false;
    SpectralParameter param{0.0};
    double period = 0.0;
    std::string reason;  // set when not admissible
};

/// Solves lambda - c = i theta with Lambda(H0) = sqrt(b^2 - c - i theta)
/// (principal). Admissible iff |Re Lambda| < (2 - p) b / p; the mode then
/// returns to itself after 2 pi / |theta|.
PeriodicParam periodic_param(double theta, double p, double c, double b);

/// Single-mode span for an admissible periodic parameter.
ModeSpan periodic_span(const PeriodicParam& pp, Complex coefficient = 1.0);

enum class Chaos { SubspaceChaotic, NotSubspaceChaotic, Inconclusive };
const char* to_string(Chaos c);

struct ChaosVerdict {
    Chaos verdict;
    std::string witness;
};

ChaosVerdict chaos_verdict(double p, double c, double b);

/// Cubic B-spline bump on |x| <= 0.4, 1.2 <= y <= 2.4 paired against
/// E(., s(h(z))) with dx dy / y^2 on a 32 x 32 midpoint grid.
struct ProbeSpec {
    double p = 1.5;
    double c = 0.5;
    double b = 0.5;
    Complex center{1.0, -0.3};
    double radius = 0.0;  // 0: half the distance from center to the boundary of Omega
    int nodes = 64;
    bool broken = false;  // pair |F| instead of F (negative control)
};

struct ProbeResult {
    double residual = 0.0;  // |contour integral| / (2 pi r max |F|)
    double radius = 0.0;
    double max_abs = 0.0;
};

/// Spectral parameter of the eigenfunction F(z): Lambda(H0) = b h(z).
SpectralParameter param_of_omega_point(Complex z, double p, double c, double b);

/// Pairing of E(., s) with the fixed bump functional.
Complex bump_pairing(const SpectralParameter& s);

/// Throws DomainError when the contour disc leaves Omega.
ProbeResult analyticity_probe(const ProbeSpec& spec);

struct DswReport {
    bool meets_imaginary_axis = false;     // (i)
    double max_eigen_residual = 0.0;       // (ii)
    double max_eigenvalue_identity = 0.0;  // |lambda(F(z)) - c - z| over the samples
    int samples = 0;
    ProbeResult probe;                     // (iii)
};

/// Samples z in Omega are images of strip points; eigen residuals use the
/// stencil of width `step` at z_eval.
DswReport dsw_conditions_report(double p, double c, double b, const ProbeSpec& probe,
                                int samples = 3, double step = 1e-3);

/// n points of Omega obtained from the strip {0 < Re w < 2/p - 1, Im w > 0}
/// via z = b^2 (1 - w^2) - c, seeded deterministically.
std::vector<Complex> omega_samples(double p, double c, double b, int n, unsigned seed = 7);

ModeSpan tensor_modes(const ModeSpan& m1, const ModeSpan& m2);

/// Smallest T > 0 that is an integer multiple of both periods, if the ratio
/// is rational with denominator <= max_den (within rel_tol).
std::optional<double> common_period(double t1, double t2, int max_den = 1000,
                                    double rel_tol = 1e-12);

struct OrbitRow {
    double t;
    std::vector<double> moduli;
    double norm_proxy;  // l2 norm of the coefficient vector
};

std::vector<OrbitRow> orbit_trace(const ModeSpan& span, double c, double t_max, int steps);

}  // namespace eisenspec::dynamics
