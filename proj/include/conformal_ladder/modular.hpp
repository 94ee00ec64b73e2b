// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "conformal_ladder/exact.hpp"
#include "conformal_ladder/qseries.hpp"
#include "conformal_ladder/report.hpp"

namespace conformal_ladder {

/// Z = prod_{n=1}^{N} (1 - q^n)^{-n^2}, exact to order N.
QSeries partition_Z(std::size_t order);

/// Number of multisets of one-particle states of total energy m, where
/// level n holds n^2 states, counted by enumeration for m <= order.
std::vector<Integer> enumerate_partition_counts(std::size_t order);

/// <H>_q = q d/dq ln Z.
QSeries mean_energy_series(std::size_t order);

/// E_0 = -B_4 / 8
Rational zero_point_energy();

/// sigma_p(n) = sum_{d | n} d^p
Integer divisor_power_sum(std::size_t n, unsigned p);

struct EisensteinSeries {
    int weight = 4;
    QSeries coeffs; ///< -B_{2k}/4k + sum sigma_{2k-1}(n) q^n
};

/// Throws DomainError for odd weight or weight < 4.
EisensteinSeries eisenstein(int weight, std::size_t order);

/// <H + E_0>_q = G_4 coefficient by coefficient, exactly.
Report identity_mean_energy_equals_G4(std::size_t order);

struct SeriesValue {
    std::complex<double> value;
    double last_term = 0; ///< |c_N q^N|
};

/// sum c_n q^n at q = exp(2 pi i tau). Throws DomainError unless Im tau > 0.
SeriesValue eval_series(const QSeries& s, std::complex<double> tau);

struct ModularMatrix {
    long a = 1, b = 0, c = 0, d = 1;
};

inline constexpr ModularMatrix kModularS{0, -1, 1, 0};
inline constexpr ModularMatrix kModularT{1, 1, 0, 1};

/// |(c tau + d)^{-2k} G_2k(gamma tau) - G_2k(tau)|. Throws DomainError for
/// ad - bc != 1 or an invalid weight, ConvergenceError when either
/// truncation has not converged at order N.
double modular_covariance_residual(int weight, std::complex<double> tau, const ModularMatrix& gamma,
                                   std::size_t order);

/// Dimensionless mode by default. beta is 1/kT.
struct ThermoParams {
    double radius = 1;
    double beta = 1;
    double h = 1;
    double c = 1;
    double k = 1;

    /// Throws DomainError unless every field is positive and finite.
    void validate() const;
    /// hc beta / R, the exponent per mode.
    double mode_exponent() const { return h * c * beta / radius; }
};

/// (hc/R) n^3 x/(1 - x) with x = exp(-n hc beta / R).
double planck_term(long n, const ThermoParams& p);
/// n^2 h nu / (e^{h nu beta} - 1) with nu = n c / R.
double planck_term_frequency(long n, const ThermoParams& p);

struct StefanBoltzmann {
    double density = 0;    ///< s = u^4/(2 pi^2) sum n^3/(e^{nu} - 1), u = hc beta/R
    double limit = 0;      ///< pi^2/30
    double ratio_error = 0; ///< |s/limit - 1|
    double tail_bound = 0; ///< bound on the omitted modes, same units as density
    std::size_t n_max = 0;
};

/// With n_max = 0 the sum runs until the tail bound falls below 1e-17 of
/// the partial sum. Throws ConvergenceError when an explicit n_max leaves a
/// tail above 1e-12 of the result.
StefanBoltzmann stefan_boltzmann(const ThermoParams& p, std::size_t n_max = 0);

/// Identity, Z oracle, multiplicativity and covariance checks.
Report modular_checks(std::size_t order);
/// Planck decomposition on seeded samples and the Stefan-Boltzmann limit.
/// `roundoff` bounds the relative residual of the mode identity.
Report planck_checks(std::uint64_t seed, double roundoff = 1e-12);

} // namespace conformal_ladder
