// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace conformal_ladder {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q"; throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

/// p/q in canonical form; throws DomainError when q == 0.
Rational make_rational(long p, long q);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

/// Complex number with exact rational parts.
class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(long re) : re_(re) {}
    ExactComplex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static ExactComplex i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    ExactComplex conj() const { return {re_, -im_}; }
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    ExactComplex& operator+=(const ExactComplex& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o);
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

private:
    Rational re_{0};
    Rational im_{0};
};

std::string to_string(const ExactComplex& z);

/// Dense matrix over the rationals, used for exact rank and nullspace
/// computations.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Basis of {v : A v = 0}.
    std::vector<std::vector<Rational>> nullspace() const;

    /// Solves A x = b exactly. Returns false if inconsistent; `x` is then
    /// unspecified.
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace conformal_ladder
