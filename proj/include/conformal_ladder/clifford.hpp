// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "conformal_ladder/mat4.hpp"
#include "conformal_ladder/report.hpp"

namespace conformal_ladder {

/// Dirac picture: beta diagonal. Chiral picture: gamma5 diagonal.
enum class Picture { dirac, chiral };

std::string to_string(Picture p);

/// Gamma matrices of Cl(4,1) in one picture. `gamma[mu]` carries a lower
/// index; the metric is diag(-1, 1, 1, 1). gamma_0 = i beta in both
/// pictures (so gamma^0 = -i beta).
struct GammaSet {
    Picture picture = Picture::dirac;
    std::array<Mat4, 4> gamma;
    Mat4 gamma5;
    Mat4 beta;

    static constexpr std::array<int, 4> metric{-1, 1, 1, 1};

    /// gamma_{mu nu} = [gamma_mu, gamma_nu] / 2
    Mat4 gamma_mn(int mu, int nu) const;
    Mat4 pi_plus() const;  ///< (1 + gamma5) / 2
    Mat4 pi_minus() const; ///< (1 - gamma5) / 2
};

GammaSet build_gammas(Picture picture);

/// Checks the anticommutator, hermiticity, beta and gamma5 relations of a
/// GammaSet. Ids are prefixed with `prefix`.
Report gamma_invariants(const GammaSet& g, const std::string& prefix);

/// W = (sigma_1 + sigma_3) (x) 1, i.e. sqrt(2) times the involutive
/// similarity V relating the two pictures. Kept rational: V X V = W X W / 2.
Mat4 similarity_w();

/// Chiral -> Dirac: V X V.
Mat4 chiral_to_dirac(const Mat4& x);
/// Dirac -> Chiral: V X V (V is an involution).
Mat4 dirac_to_chiral(const Mat4& x);

/// Identities satisfied by V: V^2 = 1, tr V = 0, V gamma^Ch V = gamma^D for
/// all mu, gamma5 and beta, and the sign flip of gamma_1 gamma_2 gamma_3.
Report similarity_identities();

/// True iff X* beta + beta X = 0.
bool in_u22(const Mat4& x, const Mat4& beta);

struct LabeledMatrix {
    std::string label;
    Mat4 matrix;
};

/// The 16 generators of u(2,2): gamma_mu, gamma_{mu nu}, gamma5 gamma_mu,
/// gamma5 and i*1. Throws ConstructionError if any fails X* beta + beta X = 0.
struct U22Basis {
    std::vector<LabeledMatrix> elements;
};

U22Basis u22_basis(const GammaSet& g);

/// Dimension of the real solution space of X* beta + beta X = 0, computed
/// as an exact nullspace over the 32 real parameters of X.
std::size_t u22_solution_dimension(const Mat4& beta);

/// Real coordinates of `x` in the basis, or nullopt if `x` is not in the
/// real span.
std::optional<std::vector<Rational>> u22_coordinates(const Mat4& x, const U22Basis& basis);

/// Real rank of the 16 basis elements (16 means independent).
std::size_t u22_real_rank(const U22Basis& basis);

/// Clifford conjugation X -> X^+: the anti-automorphism with gamma_a^+ =
/// -gamma_a on the five generators. It is real-linear and sends the central
/// element i*1 (a product of all five generators) to its negative, so
/// complex coefficients are conjugated. Computed by expanding X over the
/// 16 monomials {1, gamma_a, gamma_a gamma_b} through the trace pairing.
/// Throws ConstructionError if the expansion does not reproduce X.
Mat4 clifford_conjugate(const Mat4& x, const GammaSet& g);

/// Pi_+ Pi_- = 0, Pi_+ + Pi_- = 1, gamma_mu Pi_+ gamma_nu Pi_+ = 0,
/// [gamma_mu Pi_+, gamma_nu Pi_+] = 0, gamma5 gamma_mu Pi_+ = -gamma_mu Pi_+
/// and gamma_mu Pi_+ = Pi_- gamma_mu.
Report projector_identities(const GammaSet& g);

/// The eleven Poincare-plus-dilation generators: gamma_{mu nu}, gamma5 and
/// gamma_mu Pi_+.
std::vector<LabeledMatrix> poincare_dilation_generators(const GammaSet& g);

/// Every Clifford-level check in both pictures, plus the similarity.
Report clifford_checks();

} // namespace conformal_ladder
