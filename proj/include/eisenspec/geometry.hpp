#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eisenspec/quadrature.hpp"

namespace eisenspec::geometry {

/// A point x + iy of the upper half-plane. In the cusp coordinates x is the
/// horocyclic (N) coordinate and log y the A coordinate.
class UpperHalfPoint {
public:
    /// Throws DomainError unless y > 0 and both coordinates are finite.
    UpperHalfPoint(double x, double y);
    explicit UpperHalfPoint(std::complex<double> z) : UpperHalfPoint(z.real(), z.imag()) {}

    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double y() const noexcept { return y_; }
    [[nodiscard]] std::complex<double> as_complex() const noexcept { return {x_, y_}; }

    friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;

private:
    double x_;
    double y_;
};

/// Element of PSL(2, Z). The matrix and its negative are the same transform.
class MobiusTransform {
public:
    /// Throws DomainError unless ad - bc == 1.
    MobiusTransform(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static MobiusTransform identity() { return {1, 0, 0, 1}; }
    /// z -> z + 1
    static MobiusTransform T() { return {1, 1, 0, 1}; }
    /// z -> -1/z
    static MobiusTransform S() { return {0, -1, 1, 0}; }
    static MobiusTransform translation(std::int64_t n) { return {1, n, 0, 1}; }

    [[nodiscard]] std::int64_t a() const noexcept { return a_; }
    [[nodiscard]] std::int64_t b() const noexcept { return b_; }
    [[nodiscard]] std::int64_t c() const noexcept { return c_; }
    [[nodiscard]] std::int64_t d() const noexcept { return d_; }

    [[nodiscard]] MobiusTransform inverse() const { return {d_, -b_, -c_, a_}; }
    [[nodiscard]] MobiusTransform negated() const { return {-a_, -b_, -c_, -d_}; }

    /// Composition: (g * h)(z) = g(h(z)).
    friend MobiusTransform operator*(const MobiusTransform& g, const MobiusTransform& h);
    /// Projective equality: g == -g.
    friend bool operator==(const MobiusTransform& g, const MobiusTransform& h) noexcept;

    [[nodiscard]] std::string to_string() const;

private:
    std::int64_t a_, b_, c_, d_;
};

/// Rank-one group data: b = ||rho_P||, the discrete eigenvalues below the
/// continuous spectrum (first entry 0), and the co-volume.
struct GroupDatum {
    double b = 0.5;
    std::vector<double> discrete_eigenvalues{0.0};
    double volume = 0.0;

    /// Throws DomainError when b <= 0, volume <= 0, or the eigenvalue list is
    /// unsorted or does not start at exactly 0.
    void validate() const;

    /// PSL(2,Z)\H with curvature -1: b = 1/2, eigenvalues [0], volume pi/3.
    static GroupDatum modular_surface();

    /// {"b": ..., "discrete_eigenvalues": [...], "volume": ...}
    [[nodiscard]] std::string to_json() const;
    static GroupDatum from_json(const std::string& text);
    /// "modular" selects the built-in preset, anything else is read as a file.
    static GroupDatum load(const std::string& name_or_path);
};

UpperHalfPoint mobius_apply(const MobiusTransform& g, const UpperHalfPoint& z);

struct Reduction {
    UpperHalfPoint point;
    MobiusTransform transform;  // point == mobius_apply(transform, input)
};

inline constexpr int kReductionIterationCap = 10'000;

/// Gauss reduction into the closed standard fundamental domain
/// |Re z| <= 1/2, |z| >= 1. Throws ConvergenceError after
/// kReductionIterationCap inversions.
Reduction reduce_to_fundamental_domain(const UpperHalfPoint& z);

[[nodiscard]] bool in_fundamental_domain(const UpperHalfPoint& z) noexcept;

struct CosetPair {
    std::int64_t c;
    std::int64_t d;
    friend bool operator==(const CosetPair&, const CosetPair&) = default;
};

/// Representatives of Gamma_inf \ Gamma as bottom rows (c, d): (0, 1) plus
/// all coprime pairs with 1 <= c <= bound and |d| <= bound. Ordered by c,
/// then d ascending.
std::vector<CosetPair> coset_representatives(int bound);

/// Numeric integral of dx dy / y^2 over the standard fundamental domain,
/// tensor Gauss-Legendre in x and in u = 1/y. Converges to pi/3.
double fundamental_volume_numeric(const QuadratureSpec& grid);

}  // namespace eisenspec::geometry
