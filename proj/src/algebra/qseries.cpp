// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/qseries.hpp"

#include "conformal_ladder/errors.hpp"

#include <mutex>
#include <string>
#include <utility>

namespace conformal_ladder {

QSeries::QSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

QSeries::QSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1, Rational(0));
}

QSeries QSeries::constant(const Rational& c, std::size_t order)
{
    return monomial(0, c, order);
}

QSeries QSeries::monomial(std::size_t k, const Rational& c, std::size_t order)
{
    QSeries s(order);
    if (k <= order)
        s.coeffs_[k] = c;
    return s;
}

QSeries QSeries::one_minus_qn_pow(std::size_t n, long power, std::size_t order)
{
    if (n == 0)
        throw DomainError("(1 - q^0) is not a unit");
    QSeries s(order);
    // (1 - x)^p = sum_j binom(p, j) (-x)^j, with the generalised binomial
    // coefficient for negative p.
    Rational c = 1;
    for (std::size_t j = 0; j * n <= order; ++j) {
        s.coeffs_[j * n] = c;
        c *= make_rational(power - static_cast<long>(j), static_cast<long>(j) + 1);
        c = -c;
        if (sgn(c) == 0)
            break;
    }
    return s;
}

void QSeries::require_same_order(const QSeries& o) const
{
    if (order() != o.order())
        throw DomainError("truncation order mismatch: " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] += o.coeffs_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] -= o.coeffs_[n];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    a.require_same_order(b);
    const std::size_t order = a.order();
    QSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            if (sgn(b.coeffs_[j]) != 0)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

QSeries operator*(const Rational& s, QSeries a)
{
    for (auto& c : a.coeffs_)
        c *= s;
    return a;
}

QSeries QSeries::inverse() const
{
    if (sgn(coeffs_[0]) == 0)
        throw DomainError("series with zero constant term is not invertible");
    const std::size_t n_max = order();
    QSeries inv(n_max);
    const Rational c0_inv = 1 / coeffs_[0];
    inv.coeffs_[0] = c0_inv;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (sgn(coeffs_[k]) != 0)
                acc += coeffs_[k] * inv.coeffs_[n - k];
        inv.coeffs_[n] = -acc * c0_inv;
    }
    return inv;
}

QSeries QSeries::derivative_q() const
{
    QSeries d(order());
    for (std::size_t n = 1; n < coeffs_.size(); ++n)
        d.coeffs_[n] = coeffs_[n] * static_cast<long>(n);
    return d;
}

QSeries QSeries::pow(long exponent) const
{
    QSeries base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    QSeries result = constant(1, order());
    while (e) {
        if (e & 1UL)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

QSeries qseries_mul(const QSeries& a, const QSeries& b)
{
    return a * b;
}

QSeries qseries_log_derivative(const QSeries& a)
{
    if (sgn(a[0]) == 0)
        throw DomainError("logarithmic derivative needs a nonzero constant term");
    // Solve a * L = q a' term by term instead of forming a^{-1}.
    const std::size_t n_max = a.order();
    const QSeries da = a.derivative_q();
    std::vector<Rational> l(n_max + 1, Rational(0));
    const Rational c0_inv = 1 / a[0];
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc = da[n];
        for (std::size_t k = 1; k < n; ++k)
            if (sgn(a[k]) != 0)
                acc -= a[k] * l[n - k];
        l[n] = acc * c0_inv;
    }
    return QSeries(std::move(l), n_max);
}

Rational bernoulli(long m)
{
    if (m < 2 || m % 2 != 0)
        throw DomainError("bernoulli: index must be even and >= 2, got " + std::to_string(m));

    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    std::lock_guard lock(mutex);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    for (long n = static_cast<long>(cache.size()); n <= m; ++n) {
        Rational acc = 0;
        for (long j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * cache[static_cast<std::size_t>(j)];
        Rational b = -acc / Rational(n + 1);
        b.canonicalize();
        cache.push_back(std::move(b));
    }
    return cache[static_cast<std::size_t>(m)];
}

} // namespace conformal_ladder
