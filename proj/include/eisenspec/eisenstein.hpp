#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "eisenspec/geometry.hpp"

namespace eisenspec::eisenstein {

using Complex = std::complex<double>;
using geometry::GroupDatum;
using geometry::UpperHalfPoint;

/// The spectral parameter Lambda(H0) together with the group norm b.
/// s = b + Lambda(H0); for the modular surface b = 1/2 and s = 1/2 + Lambda(H0).
class SpectralParameter {
public:
    explicit SpectralParameter(Complex lambda_h0, double b = 0.5);
    static SpectralParameter from_s(Complex s, double b = 0.5);

    [[nodiscard]] Complex lambda_h0() const noexcept { return lambda_h0_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] Complex s() const noexcept { return b_ + lambda_h0_; }
    /// b^2 - Lambda(H0)^2, which is s(1 - s) when b = 1/2.
    [[nodiscard]] Complex eigenvalue() const noexcept { return b_ * b_ - lambda_h0_ * lambda_h0_; }

private:
    Complex lambda_h0_;
    double b_;
};

inline constexpr double kDefaultPoleExclusion = 1e-3;
inline constexpr double kHalfLimitExclusion = 1e-4;
inline constexpr double kDefaultModeTolerance = 1e-18;

struct CosetResult {
    Complex value;          // truncated + tail_estimate
    Complex truncated;      // plain sum over coset_representatives(bound)
    Complex tail_estimate;  // continuum estimate of the omitted terms
    double tail_bound = 0;  // rigorous bound on |omitted terms|, ~ bound^{2 - 2 Re s}
};

/// Coset sum E(z, s) = sum over coprime (c, d) mod sign of y^s / |cz + d|^{2s},
/// truncated to max(c, |d|) <= bound. Requires Re s > 1.
///
/// The omitted terms are bounded by
///   4 y^sigma lambda_min^{-sigma} bound^{2 - 2 sigma} / (2 sigma - 2),
/// lambda_min the smaller eigenvalue of the form |cz + d|^2 in (c, d). The
/// value adds a leading-order estimate of the omitted terms: coprime pairs
/// have density 6/pi^2, so the tail is y^s / (2 zeta(2)) times the integral of
/// |cz + d|^{-2s} outside the box [-(bound + 1/2), bound + 1/2]^2.
CosetResult eval_coset(const UpperHalfPoint& z, const SpectralParameter& s, int bound);

struct FourierOptions {
    int modes = 0;  // 0 selects the count from `tolerance`
    double tolerance = kDefaultModeTolerance;
    double pole_exclusion = kDefaultPoleExclusion;
    bool reduce = true;  // evaluate at the reduced point (value-preserving)
};

struct FourierResult {
    Complex value;
    int modes = 0;
    double truncation_bound = 0;  // exp(-2 pi (modes + 1) y) at the evaluation height
    bool precision_warning = false;  // input height below 0.05
    UpperHalfPoint evaluated_at{0.0, 1.0};
};

/// Mode count: smallest N >= 3 with exp(-2 pi (N + 1) y) < tolerance.
int auto_mode_count(double y, double tolerance);

/// Coefficients of E(x + iy, s) at a fixed height: E = constant + sum a_n cos(2 pi n x) with
///   a_n = 4 sqrt(y) / xi(2s) * n^{s - 1/2} sigma_{1-2s}(n) K_{s-1/2}(2 pi n y).
struct FourierRow {
    Complex constant;
    std::vector<Complex> cos_coefficients;  // index n - 1

    [[nodiscard]] Complex evaluate(double x) const;
};

FourierRow fourier_row(double y, const SpectralParameter& s, int modes,
                       double pole_exclusion = kDefaultPoleExclusion);

/// Fourier-Whittaker evaluation, valid for every s outside the pole
/// exclusions. Throws PoleProximityError near s = 1 (radius pole_exclusion)
/// and near s = 1/2 (radius 1e-4).
FourierResult eval_fourier(const UpperHalfPoint& z, const SpectralParameter& s,
                           const FourierOptions& options = {});

/// phi(s) = xi(2s - 1) / xi(2s); phi(s) phi(1 - s) = 1.
Complex scattering_phi(const SpectralParameter& s);

/// y^s + phi(s) y^{1-s}.
Complex constant_term(double y, const SpectralParameter& s);

/// |(-y^2 (D_xx + D_yy) E - s(1 - s) E)| / |E| with the five-point central
/// stencil of width `step`.
double eigencheck_residual(const UpperHalfPoint& z, const SpectralParameter& s, double step);

/// Same stencil for an arbitrary function and eigenvalue.
double eigencheck_residual(const std::function<Complex(const UpperHalfPoint&)>& f,
                           Complex eigenvalue, const UpperHalfPoint& z, double step);

/// lim_{s -> 1} (s - 1) E(z, s) by Richardson (Neville) extrapolation over
/// s = 1 + epsilon 2^{-k}, k = 0..4. Equals 1 / vol = 3 / pi.
Complex residue_at_one(const UpperHalfPoint& z, double epsilon);

enum class Method { CosetSum, Fourier };

struct EvaluatorConfig {
    Method method = Method::Fourier;
    int truncation = 0;  // coset bound, or Fourier mode count (0 = auto)
    double pole_exclusion = kDefaultPoleExclusion;
};

/// Immutable front end that dispatches to one of the two evaluators.
class EisensteinEvaluator {
public:
    EisensteinEvaluator(GroupDatum group, EvaluatorConfig config);

    [[nodiscard]] Complex operator()(const UpperHalfPoint& z, const SpectralParameter& s) const;
    [[nodiscard]] const EvaluatorConfig& config() const noexcept { return config_; }

private:
    GroupDatum group_;
    EvaluatorConfig config_;
};

}  // namespace eisenspec::eisenstein
