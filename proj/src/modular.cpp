// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/modular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "conformal_ladder/errors.hpp"

namespace conformal_ladder {

namespace {

using cplx = std::complex<double>;

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

void count_levels(std::size_t level, std::size_t used, const Integer& ways, std::size_t order,
                  std::vector<Integer>& out)
{
    if (level > order - used) {
        out[used] += ways;
        return;
    }
    const long states = static_cast<long>(level * level);
    for (std::size_t j = 0; used + j * level <= order; ++j) {
        // j bosons in `states` one-particle states
        const Integer w = ways * binomial(states + static_cast<long>(j) - 1, static_cast<long>(j));
        count_levels(level + 1, used + j * level, w, order, out);
    }
}

} // namespace

QSeries partition_Z(std::size_t order)
{
    if (order < 1)
        throw DomainError("series order must be at least 1");
    QSeries z = QSeries::constant(1, order);
    for (std::size_t n = 1; n <= order; ++n) {
        const long power = -static_cast<long>(n * n);
        // sparse factor first so the product skips its zero coefficients
        z = QSeries::one_minus_qn_pow(n, power, order) * z;
    }
    return z;
}

std::vector<Integer> enumerate_partition_counts(std::size_t order)
{
    std::vector<Integer> out(order + 1, Integer(0));
    count_levels(1, 0, Integer(1), order, out);
    return out;
}

QSeries mean_energy_series(std::size_t order)
{
    return qseries_log_derivative(partition_Z(order));
}

Rational zero_point_energy()
{
    return -bernoulli(4) / 8;
}

Integer divisor_power_sum(std::size_t n, unsigned p)
{
    Integer s = 0;
    for (std::size_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), d, p);
        s += t;
        const std::size_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), e, p);
            s += t;
        }
    }
    return s;
}

EisensteinSeries eisenstein(int weight, std::size_t order)
{
    if (weight < 4 || weight % 2 != 0)
        throw DomainError("Eisenstein series need even weight >= 4, got " + std::to_string(weight));
    std::vector<Rational> c(order + 1);
    c[0] = -bernoulli(weight) / (2 * weight);
    for (std::size_t n = 1; n <= order; ++n)
        c[n] = Rational(divisor_power_sum(n, static_cast<unsigned>(weight - 1)));
    return {weight, QSeries(std::move(c), order)};
}

Report identity_mean_energy_equals_G4(std::size_t order)
{
    Report rep;
    const QSeries lhs = mean_energy_series(order) + QSeries::constant(zero_point_energy(), order);
    const QSeries rhs = eisenstein(4, order).coeffs;
    std::size_t first_bad = order + 1;
    for (std::size_t n = 0; n <= order && first_bad > order; ++n)
        if (lhs[n] != rhs[n])
            first_bad = n;
    rep.add_exact("modular/identity/g4", "q d/dq ln Z + E_0 = G_4 coefficient by coefficient", first_bad > order,
                  first_bad > order ? "all " + std::to_string(order + 1) + " coefficients equal"
                                    : "first mismatch at q^" + std::to_string(first_bad));
    rep.add_exact("modular/identity/zero-point", "E_0 = -B_4/8 = 1/240", zero_point_energy() == make_rational(1, 240),
                  to_string(zero_point_energy()));
    return rep;
}

SeriesValue eval_series(const QSeries& s, cplx tau)
{
    if (!(tau.imag() > 0))
        throw DomainError("series evaluation needs Im tau > 0");
    const cplx q = std::exp(2.0 * std::numbers::pi * cplx(0, 1) * tau);
    SeriesValue out;
    cplx qn = 1;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        const cplx term = s[n].get_d() * qn;
        out.value += term;
        out.last_term = std::abs(term);
        qn *= q;
    }
    return out;
}

double modular_covariance_residual(int weight, cplx tau, const ModularMatrix& g, std::size_t order)
{
    if (g.a * g.d - g.b * g.c != 1)
        throw DomainError("modular matrix must have determinant 1");
    const EisensteinSeries gs = eisenstein(weight, order);
    const cplx denom = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
    const cplx image = (static_cast<double>(g.a) * tau + static_cast<double>(g.b)) / denom;
    const SeriesValue at_tau = eval_series(gs.coeffs, tau);
    const SeriesValue at_image = eval_series(gs.coeffs, image);
    const double scale = std::max(std::abs(at_tau.value), std::abs(at_image.value));
    if (at_tau.last_term > 1e-16 * scale || at_image.last_term > 1e-16 * scale)
        throw ConvergenceError("Eisenstein series not converged at order " + std::to_string(order));
    return std::abs(std::pow(denom, -weight) * at_image.value - at_tau.value);
}

void ThermoParams::validate() const
{
    for (double v : {radius, beta, h, c, k})
        if (!(v > 0) || !std::isfinite(v))
            throw DomainError("thermodynamic parameters must be positive and finite");
}

double planck_term(long n, const ThermoParams& p)
{
    p.validate();
    if (n < 1)
        throw DomainError("mode number must be at least 1");
    const double nd = static_cast<double>(n);
    const double x = std::exp(-nd * p.mode_exponent());
    return p.h * p.c / p.radius * nd * nd * nd * x / (1 - x);
}

double planck_term_frequency(long n, const ThermoParams& p)
{
    p.validate();
    if (n < 1)
        throw DomainError("mode number must be at least 1");
    const double nd = static_cast<double>(n);
    const double nu = nd * p.c / p.radius;
    return nd * nd * p.h * nu / std::expm1(p.h * nu * p.beta);
}

StefanBoltzmann stefan_boltzmann(const ThermoParams& p, std::size_t n_max)
{
    p.validate();
    const long double u = p.mode_exponent();
    auto tail = [u](long double n) {
        return std::exp(-u * n) * (n * n * n / u + 3 * n * n / (u * u) + 6 * n / (u * u * u) + 6 / (u * u * u * u)) /
               (1 - std::exp(-u));
    };
    // the integral bound needs n past the peak of n^3 e^{-nu}
    const auto peak = static_cast<std::size_t>(std::ceil(3 / u));
    long double sum = 0;
    std::size_t n = 1;
    for (;; ++n) {
        const long double nd = static_cast<long double>(n);
        sum += nd * nd * nd / std::expm1(nd * u);
        if (n_max ? n >= n_max : (n >= peak && tail(nd) < 1e-17L * sum))
            break;
    }
    const long double pref = u * u * u * u / (2 * std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
    StefanBoltzmann out;
    out.n_max = n;
    out.density = static_cast<double>(pref * sum);
    out.tail_bound = n >= peak ? static_cast<double>(pref * tail(static_cast<long double>(n))) : INFINITY;
    out.limit = std::numbers::pi * std::numbers::pi / 30;
    out.ratio_error = std::abs(out.density / out.limit - 1);
    if (out.tail_bound > 1e-12 * out.density)
        throw ConvergenceError("Stefan-Boltzmann sum truncated at n = " + std::to_string(n) + " with tail bound " +
                               fmt(out.tail_bound));
    return out;
}

Report modular_checks(std::size_t order)
{
    Report rep = identity_mean_energy_equals_G4(order);

    const std::size_t small = std::min<std::size_t>(order, 12);
    const QSeries z = partition_Z(small);
    const auto counts = enumerate_partition_counts(small);
    bool same = true;
    for (std::size_t m = 0; m <= small; ++m)
        same = same && z[m] == Rational(counts[m]);
    std::ostringstream head;
    for (std::size_t m = 0; m <= std::min<std::size_t>(small, 4); ++m)
        head << (m ? ", " : "") << to_string(z[m]);
    rep.add_exact("modular/partition/enumeration", "Z coefficients equal multiset counts over levels n with n^2 states",
                  same, "through q^" + std::to_string(small) + ": " + head.str() + ", ...");

    bool mult = true;
    for (int w : {4, 6, 8}) {
        const QSeries g = eisenstein(w, 60).coeffs;
        for (std::size_t m = 1; m <= 60; ++m)
            for (std::size_t n = 1; m * n <= 60; ++n)
                if (std::gcd(m, n) == 1)
                    mult = mult && g[m * n] == g[m] * g[n];
    }
    rep.add_exact("modular/eisenstein/multiplicative", "sigma(mn) = sigma(m) sigma(n) for coprime m, n", mult,
                  "weights 4, 6, 8 through q^60");

    bool rejects = false;
    try {
        eisenstein(2, 8);
    } catch (const DomainError&) {
        rejects = true;
    }
    rep.add_exact("modular/eisenstein/weight-two", "weight 2 is rejected", rejects);

    const std::size_t n_cov = 600;
    const std::vector<cplx> taus{cplx(0, 2), cplx(0.3, 1.1)};
    for (int w : {4, 6}) {
        for (const auto& [name, g] : {std::pair{"S", kModularS}, std::pair{"T", kModularT}}) {
            double worst = 0;
            for (const cplx& t : taus)
                worst = std::max(worst, modular_covariance_residual(w, t, g, n_cov));
            rep.add_numeric("modular/covariance/weight-" + std::to_string(w) + "/" + name,
                            "(c tau + d)^{-2k} G_2k(gamma tau) = G_2k(tau)", worst, 1e-6,
                            "tau in {2i, 0.3+1.1i}, N = " + std::to_string(n_cov));
        }
    }
    return rep;
}

Report planck_checks(std::uint64_t seed, double roundoff)
{
    Report rep;
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double a, double b) { return a + (b - a) * static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    double worst = 0;
    for (int s = 0; s < 100; ++s) {
        ThermoParams p;
        p.radius = uniform(1, 10);
        p.beta = uniform(0.1, 5);
        const long n = 1 + static_cast<long>(rng() % 40);
        const double a = planck_term(n, p);
        const double b = planck_term_frequency(n, p);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    rep.add_numeric("planck/mode-identity", "(hc/R) n^3 x/(1-x) = n^2 h nu/(e^{h nu beta} - 1), nu = nc/R", worst, roundoff,
                    "100 seeded (n, R, beta)");

    ThermoParams unit;
    unit.beta = std::log(2.0);
    rep.add_numeric("planck/mode-ln2", "n = 1 at hc beta/R = ln 2 gives hc/R", std::abs(planck_term(1, unit) - 1), roundoff);

    for (const auto& [ratio, tol] : {std::pair{1e3, 1e-2}, std::pair{1e5, 1e-4}}) {
        ThermoParams p;
        p.radius = ratio;
        const StefanBoltzmann sb = stefan_boltzmann(p);
        std::ostringstream id;
        id << "planck/stefan-boltzmann/r" << static_cast<long>(std::log10(ratio));
        rep.add_numeric(id.str(), "s(R, beta) -> pi^2/30 as R/beta grows", sb.ratio_error, tol,
                        "R/beta = " + fmt(ratio) + ", " + std::to_string(sb.n_max) + " modes");
    }

    bool closer = true;
    double prev = INFINITY;
    for (double ratio : {2.0, 4.0, 8.0, 16.0}) {
        ThermoParams p;
        p.radius = ratio;
        const double err = stefan_boltzmann(p).ratio_error;
        closer = closer && err < prev;
        prev = err;
    }
    rep.add_exact("planck/stefan-boltzmann/monotone", "larger R at fixed beta is closer to pi^2/30", closer,
                  "R/beta = 2, 4, 8, 16");
    return rep;
}

} // namespace conformal_ladder
