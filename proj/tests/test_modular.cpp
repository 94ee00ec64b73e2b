// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/modular.hpp"

using namespace conformal_ladder;

namespace {

using std::numbers::pi;

Integer naive_sigma(std::size_t n, unsigned p)
{
    Integer s = 0;
    for (std::size_t d = 1; d <= n; ++d)
        if (n % d == 0) {
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), d, p);
            s += t;
        }
    return s;
}

// Coefficients of prod (1 - q^n)^{-n^2}: one geometric factor per state.
std::vector<Integer> state_by_state(std::size_t order)
{
    std::vector<Integer> c(order + 1, 0);
    c[0] = 1;
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t s = 0; s < n * n; ++s)
            for (std::size_t m = n; m <= order; ++m)
                c[m] += c[m - n];
    return c;
}

QSeries normalized(const EisensteinSeries& g)
{
    return (Rational(1) / g.coeffs[0]) * g.coeffs;
}

} // namespace

TEST_CASE("partition function coefficients")
{
    const QSeries z = partition_Z(12);
    const long expect[] = {1, 1, 5, 14, 40, 101, 266, 649, 1593, 3765, 8813, 20168, 45649};
    for (std::size_t n = 0; n <= 12; ++n)
        CHECK(z[n] == expect[n]);
    const auto counted = enumerate_partition_counts(12);
    const auto oracle = state_by_state(12);
    for (std::size_t n = 0; n <= 12; ++n)
        CHECK(counted[n] == oracle[n]);
    const QSeries z40 = partition_Z(40);
    const auto oracle40 = state_by_state(40);
    for (std::size_t n = 0; n <= 40; ++n)
        CHECK(z40[n] == Rational(oracle40[n]));
}

TEST_CASE("mean energy is sigma_3 and the zero-point energy is 1/240")
{
    const QSeries e = mean_energy_series(100);
    CHECK(e[0] == 0);
    for (std::size_t n = 1; n <= 100; ++n)
        CHECK(e[n] == Rational(naive_sigma(n, 3)));
    CHECK(zero_point_energy() == Rational(1, 240));
    const Report r = identity_mean_energy_equals_G4(200);
    CHECK(r.passed());
    CHECK(r.at("modular/identity/g4").exact);
}

TEST_CASE("divisor sums")
{
    for (std::size_t n = 1; n <= 60; ++n)
        for (unsigned p : {0u, 1u, 3u, 5u, 7u})
            CHECK(divisor_power_sum(n, p) == naive_sigma(n, p));
    CHECK(divisor_power_sum(12, 0) == 6);
}

TEST_CASE("Eisenstein constant terms and coefficients")
{
    const EisensteinSeries g4 = eisenstein(4, 20), g6 = eisenstein(6, 20);
    CHECK(g4.coeffs[0] == Rational(1, 240));
    CHECK(g6.coeffs[0] == Rational(-1, 504));
    for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(g4.coeffs[n] == Rational(naive_sigma(n, 3)));
        CHECK(g6.coeffs[n] == Rational(naive_sigma(n, 5)));
    }
    CHECK_THROWS_AS(eisenstein(5, 10), DomainError);
    CHECK_THROWS_AS(eisenstein(2, 10), DomainError);
}

TEST_CASE("E4^2 = E8 and E4^3 - E6^2 = 1728 Delta")
{
    const std::size_t N = 30;
    const QSeries e4 = normalized(eisenstein(4, N));
    const QSeries e6 = normalized(eisenstein(6, N));
    CHECK(e4 * e4 == normalized(eisenstein(8, N)));
    CHECK(e4 * normalized(eisenstein(6, N)) == normalized(eisenstein(10, N)));
    const QSeries delta = (Rational(1, 1728)) * (e4 * e4 * e4 - e6 * e6);
    const long tau[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(delta[n] == tau[n]);
}

TEST_CASE("series evaluation: geometric series at tau = i")
{
    const std::size_t N = 40;
    const QSeries geo = QSeries::one_minus_qn_pow(1, -1, N);
    const double q = std::exp(-2 * pi);
    const SeriesValue v = eval_series(geo, {0, 1});
    CHECK(std::abs(v.value - 1.0 / (1 - q)) < 1e-15);
    CHECK(v.last_term == doctest::Approx(std::pow(q, N)));
    CHECK_THROWS_AS(eval_series(geo, {0.5, 0}), DomainError);
    CHECK_THROWS_AS(eval_series(geo, {0.5, -1}), DomainError);
}

TEST_CASE("G4(i/2) = 16 G4(2i)")
{
    const QSeries g4 = eisenstein(4, 200).coeffs;
    const auto a = eval_series(g4, {0, 0.5}).value;
    const auto b = eval_series(g4, {0, 2}).value;
    CHECK(std::abs(a - 16.0 * b) < 1e-12 * std::abs(a));
}

TEST_CASE("modular covariance residuals")
{
    for (int w : {4, 6}) {
        for (auto tau : {std::complex<double>(0, 2), std::complex<double>(0.3, 1.1)}) {
            CHECK(modular_covariance_residual(w, tau, kModularS, 600) < 1e-6);
            CHECK(modular_covariance_residual(w, tau, kModularT, 600) < 1e-6);
        }
    }
    // ST, a longer word
    CHECK(modular_covariance_residual(4, {0.1, 1.3}, ModularMatrix{1, -1, 1, 0}, 600) < 1e-6);
    CHECK_THROWS_AS(modular_covariance_residual(4, {0, 2}, ModularMatrix{1, 1, 1, 1}, 100), DomainError);
    CHECK_THROWS_AS(modular_covariance_residual(4, {0, 0.02}, kModularS, 10), ConvergenceError);
}

TEST_CASE("thermal parameters are validated")
{
    ThermoParams p;
    CHECK_NOTHROW(p.validate());
    p.radius = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.radius = 1;
    p.beta = std::nan("");
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.beta = 2;
    p.h = 3;
    p.c = 5;
    p.radius = 10;
    CHECK(p.mode_exponent() == doctest::Approx(3.0));
}

TEST_CASE("planck term equals n^2 h nu / (e^{h nu beta} - 1)")
{
    std::mt19937_64 g(8);
    std::uniform_real_distribution<double> r(1, 10), b(0.1, 5);
    for (int t = 0; t < 100; ++t) {
        ThermoParams p;
        p.radius = r(g);
        p.beta = b(g);
        const long n = 1 + static_cast<long>(g() % 40);
        const double nu = n * p.c / p.radius;
        const double expect = n * n * p.h * nu / std::expm1(p.h * nu * p.beta);
        CHECK(planck_term(n, p) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(planck_term_frequency(n, p) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("Stefan-Boltzmann density approaches pi^2/30 with a u^4 correction")
{
    for (double ratio : {2.0, 4.0, 10.0, 100.0}) {
        ThermoParams p;
        p.radius = ratio;
        const StefanBoltzmann sb = stefan_boltzmann(p);
        const double u = 1 / ratio;
        const double expect = pi * pi / 30 - std::pow(u, 4) / (480 * pi * pi);
        CHECK(sb.limit == doctest::Approx(pi * pi / 30));
        CHECK(std::abs(sb.density - expect) < 1e-12 * expect + std::exp(-4 * pi * pi / u));
        CHECK(sb.tail_bound < 1e-15 * sb.density);
    }
    ThermoParams p;
    p.radius = 1e3;
    CHECK(stefan_boltzmann(p).ratio_error < 1e-2);
    CHECK_THROWS_AS(stefan_boltzmann(p, 10), ConvergenceError);
}

TEST_CASE("modular and planck reports")
{
    CHECK(modular_checks(60).passed());
    const Report pl = planck_checks(3);
    CHECK(pl.passed());
    CHECK(pl.at("planck/stefan-boltzmann/r5").passed);
}
