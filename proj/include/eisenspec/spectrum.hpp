#pragma once

#include <complex>
#include <vector>

#include "eisenspec/eisenstein.hpp"
#include "eisenspec/geometry.hpp"

namespace eisenspec::spectrum {

using Complex = std::complex<double>;
using eisenstein::SpectralParameter;

/// {b^2 - z^2 : |Re z| <= width_b |2/p - 1|} + mu_shift - c_shift.
///
/// width_b defaults to b. Setting width_b = ||rho|| >= b gives the outer
/// region used as the upper bound for the spectrum; width_b = b is the
/// parabolic region itself.
struct ParabolicRegion {
    double p = 2.0;
    double b = 0.5;
    double mu_shift = 0.0;
    double c_shift = 0.0;
    double width_b = 0.0;  // 0 means "same as b"

    /// Throws DomainError unless p in (1, inf), b > 0, mu_shift >= 0.
    void validate() const;
    /// width_b |2/p - 1|, the bound on |Re z|.
    [[nodiscard]] double half_width() const;
};

enum class Membership { Closure, Interior };

/// Relative slack used to decide points on the boundary curve.
inline constexpr double kBoundaryTolerance = 1e-12;

bool region_contains(Complex lambda, const ParabolicRegion& region, Membership mode);

struct BoundaryPoint {
    double tau;
    Complex lambda;
};

/// Boundary lambda(tau) = b^2 - (half_width + i tau)^2 + mu_shift - c_shift on
/// a symmetric grid tau in [-tau_max, tau_max]; the grid is the same for every
/// region so outputs are comparable.
std::vector<BoundaryPoint> region_boundary(const ParabolicRegion& region, int samples,
                                           double tau_max = 2.0);

/// Apex 4 b^2 (1 - 1/p) / p, the leftmost real point of the region.
double apex_cp(double p, double b);

/// True iff lambda is (within 1e-12) a listed discrete eigenvalue or lies in
/// the closed parabolic region for (p, group.b).
bool full_spectrum_contains(Complex lambda, double p, const geometry::GroupDatum& group);

/// mu + b^2 - Lambda(H0)^2.
Complex eigenvalue_of_param(const SpectralParameter& param, double mu);

/// Largest p with L^p membership: 2b / (b + |Re Lambda(H0)|); 1 when
/// |Re Lambda(H0)| >= b.
double critical_exponent(const SpectralParameter& param);

/// h(z) = i b^{-1} sqrt(z + c - b^2), principal square root. Maps Omega onto
/// the strip {Im > 0, 0 < Re < 2/p - 1}; b^2 (1 - h^2) - c = z.
Complex h_map(Complex z, double p, double c, double b);

/// Im z < 0 and z + c in the interior of the parabolic region.
bool omega_contains(Complex z, double p, double c, double b);

/// True iff some i*theta (theta < 0) lies in Omega, decided on a logarithmic
/// theta grid down to 1e-10.
bool omega_meets_imaginary_axis(double p, double c, double b);

/// Distance from z to the boundary of Omega (real axis or parabola).
double omega_boundary_distance(Complex z, double p, double c, double b);

/// arctan(|p - 2| / (2 sqrt(p - 1))), half-angle of the sector around the
/// positive real axis that contains the L^p spectrum.
double sector_angle(double p);

}  // namespace eisenspec::spectrum
