// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/exact.hpp"

#include "conformal_ladder/errors.hpp"

#include <sstream>
#include <utility>

namespace conformal_ladder {

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw DomainError("malformed rational: '" + text + "'");
    if (sgn(r.get_den()) == 0)
        throw DomainError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

Rational make_rational(long p, long q)
{
    if (q == 0)
        throw DomainError("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o)
{
    if (o.is_zero())
        throw DomainError("division by exact zero");
    const Rational d = o.norm_sq();
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z)
{
    return os << to_string(z);
}

std::string to_string(const ExactComplex& z)
{
    if (z.is_real())
        return to_string(z.re());
    std::ostringstream os;
    if (sgn(z.re()) != 0)
        os << to_string(z.re()) << (sgn(z.im()) > 0 ? "+" : "");
    if (z.im() == 1)
        os << "i";
    else if (z.im() == -1)
        os << "-i";
    else
        os << to_string(z.im()) << "i";
    return os.str();
}

std::vector<std::size_t> RationalMatrix::rref()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && sgn((*this)(sel, col)) == 0)
            ++sel;
        if (sel == rows_)
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap((*this)(sel, c), (*this)(row, c));
        const Rational inv = 1 / (*this)(row, col);
        for (std::size_t c = col; c < cols_; ++c)
            (*this)(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || sgn((*this)(r, col)) == 0)
                continue;
            const Rational f = (*this)(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                (*this)(r, c) -= f * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RationalMatrix::rank() const
{
    RationalMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const
{
    RationalMatrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RationalMatrix::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const
{
    if (b.size() != rows_)
        throw DomainError("right-hand side has wrong length");
    RationalMatrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return false;
    x.assign(cols_, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, cols_);
    return true;
}

} // namespace conformal_ladder
