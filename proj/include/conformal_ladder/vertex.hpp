// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "conformal_ladder/fock.hpp"
#include "conformal_ladder/geometry.hpp"
#include "conformal_ladder/poly4.hpp"
#include "conformal_ladder/report.hpp"

namespace conformal_ladder {

/// 2x2 complex matrix, row-major.
using CMat2 = std::array<cplx, 4>;

/// qz = sum_a q_a z_a
CMat2 quaternion_slash(const CPoint4& z);
/// q*w = sum_a q_a* w_a with q_a* the quaternion conjugate (adjoint) of q_a.
/// w itself is not conjugated.
CMat2 quaternion_slash_conj(const CPoint4& w);

/// Component table of sum_a q_a^{A1 B1} q_a^{A2 B2} = 2 eps^{A1 A2} eps^{B1 B2},
/// the trace relation tr(q_a* q_b) = 2 delta_ab and det(qz) = z^2, exactly.
Report quaternion_identity_check();

/// T_a = a* q_a b* = sum_{A,B} (q_a)_{AB} a_A* b_B*
std::array<FockOp, 4> translation_generators(const FockBasis& basis);

/// T^2 = 0, [T_a, T_b] = 0 and [H, T_a] = T_a on guarded states.
Report translation_checks(const FockBasis& basis);

enum class HarmonicMode { closed_form, recurrence, fock };

std::string to_string(HarmonicMode m);

/// Coefficients c_j of h_k = sum_j c_j z4^{k-2j} (zvec^2)^j, where
/// c_j = (-1)^j C(k+1, 2j+1).
std::vector<Rational> harmonic_h_coefficients(int k);

/// "3 z4^2 - zvec^2" style rendering of the two-variable form.
std::string harmonic_h_string(int k);

/// h_k as a polynomial in (z1, z2, z3, z4). The fock mode evaluates
/// (1/(k!)^2) <0|(b a)^k (a* qz b*)^k|0> exactly and throws DomainError
/// unless basis->e_max() >= k + 1.
Poly4 harmonic_h(int k, HarmonicMode mode, const FockBasis* basis = nullptr);

/// Dimension of the H = n eigenspace in the zero-helicity sector, read off
/// the operator.
std::size_t eigenspace_dimension(int n, const FockBasis& basis);
/// Number of independent harmonic polynomials of degree d in four
/// variables: monomials of degree d minus the rank of the Laplacian on them.
std::size_t harmonic_polynomial_count(int degree);

/// a*(qz)b* as a numeric operator.
NumericOp raising_operator(const CPoint4& z, const FockBasis& basis);
/// scale * b(q* w)a = scale * sum_{A,B} (q* w)_{AB} b_A a_B.
NumericOp lowering_operator(const CPoint4& w, cplx scale, const FockBasis& basis);

/// Terms (a*(qz)b*)^k |0> / k! for k = 0 .. e_max - 1, i.e. exp(a* qz b*)|0>
/// order by order.
std::vector<NumericVector> raising_series(const CPoint4& z, const FockBasis& basis);

struct NormResult {
    double series = 0;       ///< sum_k ||(a* qz b*)^k |0>||^2 / (k!)^2
    double closed_form = 0;  ///< 1 / (1 - 2 z.zbar + z^2 zbar^2)
    double last_term = 0;
    double relative_error = 0;
    std::vector<double> terms;
};

/// Throws DomainError outside the forward tube and ConvergenceError when
/// the last retained term exceeds `tolerance` relative to the sum.
NormResult vertex_norm_sq(const CPoint4& z, const FockBasis& basis, double tolerance = 1e-8);

/// How the lowering exponential is normalized.
enum class LoweringNormalization {
    printed,      ///< exp((1/z^2) b q* zcheck a), zcheck = z / z^2
    unnormalized, ///< exp(b q* zcheck a)
};

struct TwoPointResult {
    cplx series;
    cplx closed_form; ///< 1 / (z1 - z2)^2
    double relative_error = 0;
    double last_term = 0;
    std::vector<cplx> partial_sums; ///< after k = 0, 1, ...
};

/// <0| B(z1) A(z2) |0> as a series in k, truncated by the basis cutoff.
/// No precondition on z1 beyond z1^2 != 0; used to probe normalizations.
TwoPointResult two_point_series(const CPoint4& z1, const CPoint4& z2, const FockBasis& basis,
                                LoweringNormalization norm = LoweringNormalization::printed);

/// The paper's setting z1^2 = 1 (within 1e-12). Throws DomainError
/// otherwise and ConvergenceError when the last term exceeds `tolerance`
/// relative to the sum.
TwoPointResult two_point_vev(const CPoint4& z1, const CPoint4& z2, const FockBasis& basis,
                             double tolerance = 1e-8);

/// conj(w(z1, z2)) = w(z2*, z1*) / (zbar1^2 zbar2^2) for w = 1/(z1 - z2)^2.
double two_point_conjugation_residual(const CPoint4& z1, const CPoint4& z2);

/// h_k by all three routes for k <= max_k, harmonicity, and the eigenspace
/// dimension count.
Report harmonic_checks(int max_k);
/// Norm series against its closed form at fixed points of the forward tube.
Report norm_checks(const FockBasis& basis);
/// Two-point series on a grid, its convergence in the cutoff, the
/// normalization away from z1^2 = 1, and the conjugation law on seeded
/// pairs to relative residual `roundoff`.
Report two_point_checks(const FockBasis& basis, std::uint64_t seed, double roundoff = 1e-10);

} // namespace conformal_ladder
