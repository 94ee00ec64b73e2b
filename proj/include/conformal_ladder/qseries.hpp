// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "conformal_ladder/exact.hpp"

namespace conformal_ladder {

inline constexpr std::size_t kDefaultSeriesOrder = 200;

/// Truncated formal power series sum_{n=0}^{N} c_n q^n with exact rational
/// coefficients. All arithmetic is closed at the truncation order N.
class QSeries {
public:
    explicit QSeries(std::size_t order = kDefaultSeriesOrder);
    QSeries(std::vector<Rational> coeffs, std::size_t order);

    static QSeries constant(const Rational& c, std::size_t order);
    /// The monomial c q^k (zero when k > order).
    static QSeries monomial(std::size_t k, const Rational& c, std::size_t order);
    /// (1 - q^n)^power for any integer power, expanded by the binomial series.
    static QSeries one_minus_qn_pow(std::size_t n, long power, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    QSeries inverse() const;        ///< requires a nonzero constant term
    QSeries derivative_q() const;   ///< q d/dq, coefficient n c_n
    QSeries pow(long exponent) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& s, QSeries a);
    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    void require_same_order(const QSeries& o) const;
    std::vector<Rational> coeffs_;
};

/// Coefficient-wise product truncated at the common order; throws
/// DomainError on order mismatch.
QSeries qseries_mul(const QSeries& a, const QSeries& b);

/// q d/dq ln a = q a'/a, exact. Throws DomainError on a zero constant term.
QSeries qseries_log_derivative(const QSeries& a);

/// Bernoulli number B_m for even m >= 2, convention B_2 = 1/6.
Rational bernoulli(long m);

} // namespace conformal_ladder
