// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "conformal_ladder/report.hpp"

namespace conformal_ladder {

using cplx = std::complex<double>;

/// Point z = (z1, z2, z3, z4) of the complexified euclidean space.
struct CPoint4 {
    std::array<cplx, 4> z{};

    cplx& operator[](std::size_t i) { return z[i]; }
    const cplx& operator[](std::size_t i) const { return z[i]; }

    /// Complex bilinear square sum z_a^2.
    cplx square() const;
    /// Hermitian square sum z_a conj(z_a).
    double hermitian_square() const;
    CPoint4 conj() const;
    bool finite() const;

    friend CPoint4 operator-(const CPoint4& a, const CPoint4& b);
    friend CPoint4 operator*(cplx s, const CPoint4& a);
};

/// Complexified Minkowski point (x^0; x^1, x^2, x^3), upper indices.
struct MinkowskiPoint {
    cplx x0{};
    std::array<cplx, 3> x{};

    /// x.x - (x^0)^2
    cplx square() const;

    friend MinkowskiPoint operator-(const MinkowskiPoint& a, const MinkowskiPoint& b);
    friend MinkowskiPoint operator+(const MinkowskiPoint& a, const MinkowskiPoint& b);
};

/// Largest absolute difference of the components.
double distance(const CPoint4& a, const CPoint4& b);
double distance(const MinkowskiPoint& a, const MinkowskiPoint& b);

/// omega(x) = (1 + x^2)/2 - i x^0
cplx omega(const MinkowskiPoint& x);
/// omega(z) = (1 + z^2)/2 + z4
cplx omega(const CPoint4& z);

/// z = g_c(x). Throws DomainError when omega(x) vanishes (x lies on the
/// cone at infinity).
CPoint4 gc_map(const MinkowskiPoint& x);
/// x = g_c^{-1}(z) by the same formulas with x^0 = i x4.
MinkowskiPoint gc_inverse(const CPoint4& z);

/// Point of the quadric in the (xi^0, xi^1..3, xi_+, xi_-) chart, upper
/// spacetime indices.
struct QuadricPoint {
    std::array<double, 4> xi{}; ///< xi^mu
    double xi_plus = 0;
    double xi_minus = 0;

    double xi_m1_upper() const { return (xi_plus + xi_minus) / 2; } ///< xi^{-1}
    double xi_4() const { return (xi_plus - xi_minus) / 2; }
    /// Residual of xi.xi - (xi^0)^2 = xi_+ xi_-.
    double quadric_residual() const;
    /// Residual of (xi^{-1})^2 - xi_4^2 = xi_+ xi_-.
    double pseudo_orthogonal_residual() const;
    /// z_a = xi_a / (i xi_0 - xi_{-1}) with xi_0 = -xi^0, xi_{-1} = -xi^{-1}.
    CPoint4 z_chart() const;
};

/// xi^mu = xi_+ x^mu, xi_- = xi_+ x^2 for real x. Throws DomainError if
/// xi_plus == 0.
QuadricPoint embed_quadric(const std::array<double, 4>& x, double xi_plus);

/// <xi, eta> = xi.eta - xi^0 eta^0 - (xi_+ eta_- + xi_- eta_+)/2
double pairing(const QuadricPoint& a, const QuadricPoint& b);

enum class TubeClass { forward_tube, backward_tube, compact_minkowski, outside };

std::string to_string(TubeClass c);

inline constexpr double kBoundaryBand = 1e-9;

/// Forward tube: |z^2| < 1 and 2 z.zbar < 1 + |z^2|^2. Backward tube: the
/// star image is forward. Compactified Minkowski space: |z^2| = 1 and
/// z.zbar = 1 within `band`. The boundary test runs first.
TubeClass tube_classify(const CPoint4& z, double band = kBoundaryBand);

/// z* = conj(z) / conj(z)^2. Throws DomainError when conj(z)^2 vanishes.
CPoint4 star_involution(const CPoint4& z);

struct ScaledPoint {
    CPoint4 z;           ///< z(x, R), with z4 = R + z4_minus_r
    cplx z4_minus_r;     ///< evaluated directly, without cancellation
};

/// The radius-R chart: z = x/(2 omega(x/2R)), z4 - R = (i x^0 - x^2/2R) /
/// (2 omega(x/2R)). Throws DomainError for R <= 0 or a singular
/// denominator.
ScaledPoint scaled_map(const MinkowskiPoint& x, double radius);

/// (g_c(x) - g_c(y))^2 omega(x) omega(y) / (x - y)^2
cplx interval_ratio(const MinkowskiPoint& x, const MinkowskiPoint& y);

/// The sampled geometry checks, seeded.
Report geometry_checks(std::uint64_t seed);

} // namespace conformal_ladder
