#pragma once

#include <optional>
#include <vector>

#include "eisenspec/eisenstein.hpp"
#include "eisenspec/quadrature.hpp"

namespace eisenspec::lp {

using eisenstein::SpectralParameter;

enum class TailSign { Plus, Minus };

/// int_{t0}^inf |exp((b +- re_lambda) t)|^p exp(-2 b t) dt in the log-height
/// coordinate t of the cusp. The integrand is exp(e t) with exponent
/// e = p (b +- re_lambda) - 2 b; finite iff e < 0.
struct TailIntegral {
    double p = 1.5;
    double re_lambda = 0.0;  // |Re Lambda(H0)|
    double b = 0.5;
    double t0 = 0.0;
    TailSign sign = TailSign::Plus;

    [[nodiscard]] double exponent() const;
};

struct TailValue {
    bool finite = false;
    double value = 0.0;  // meaningful only when finite
};

/// Closed form: exp(e t0) / (-e) when e < 0, divergent otherwise.
TailValue tail_integral(const TailIntegral& ti);

/// Gauss-Legendre quadrature of the same integrand on doubling panels, used
/// to corroborate the closed form. Throws DomainError for divergent tails.
double tail_integral_numeric(const TailIntegral& ti, int points = 64);

enum class Verdict { Member, NotMember, Boundary };

const char* to_string(Verdict v);

struct MembershipResult {
    Verdict verdict;
    bool informational;  // p == 1: computed, outside the eigenfunction range (1, 2)
};

/// Member iff |Re Lambda(H0)| < (2 - p) b / p; Boundary within 1e-12 of
/// equality. Requires p in [1, 2) and s != 1.
MembershipResult lp_membership_verdict(const SpectralParameter& param, double p);

struct NormGrid {
    int x_points = 64;    // Gauss-Legendre points across |x| <= 1/2 (one panel)
    int y_points = 64;    // points per y panel
    double y_ratio = 2.0; // geometric panel grading in y
};

struct TruncatedNorm {
    double norm = 0.0;      // (integral)^{1/p}
    double integral = 0.0;  // integral of |E|^p dmu over F, y <= y_max
};

/// (int_{F, y <= y_max} |E(z, s)|^p dx dy / y^2)^{1/p} against the Fourier
/// evaluator. Columns in x are integrated from the arc y = sqrt(1 - x^2) up.
TruncatedNorm lp_norm_truncated(const SpectralParameter& s, double p, double y_max,
                                const NormGrid& grid = {});

/// Integral of |E - constant term|^p dmu over |x| <= 1/2, y in [y_lo, y_hi].
/// Quantifies the rapidly decaying non-constant part in the cusp.
double nonconstant_tail_integral(const SpectralParameter& s, double p, double y_lo, double y_hi,
                                 const NormGrid& grid = {});

}  // namespace eisenspec::lp
