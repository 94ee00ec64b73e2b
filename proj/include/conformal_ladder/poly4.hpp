// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "conformal_ladder/exact.hpp"

namespace conformal_ladder {

/// Exponents of (z1, z2, z3, z4).
using Exponent4 = std::array<int, 4>;

/// Graded lexicographic order, largest monomial first.
struct GradedLexGreater {
    bool operator()(const Exponent4& a, const Exponent4& b) const noexcept
    {
        const int da = a[0] + a[1] + a[2] + a[3];
        const int db = b[0] + b[1] + b[2] + b[3];
        if (da != db)
            return da > db;
        return a > b;
    }
};

/// Polynomial in four complex variables with exact coefficients. Zero
/// coefficients are never stored.
class Poly4 {
public:
    using Terms = std::map<Exponent4, ExactComplex, GradedLexGreater>;

    Poly4() = default;

    static Poly4 constant(const ExactComplex& c);
    static Poly4 variable(int index); ///< z_{index+1}, index in 0..3
    static Poly4 monomial(const Exponent4& e, const ExactComplex& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    ExactComplex coefficient(const Exponent4& e) const;

    /// Common total degree, or nullopt if the polynomial is zero or
    /// inhomogeneous.
    std::optional<int> homogeneous_degree() const;

    Poly4 derivative(int index) const;
    Poly4 pow(unsigned n) const;
    std::complex<double> evaluate(const std::array<std::complex<double>, 4>& z) const;

    void add_term(const Exponent4& e, const ExactComplex& c);

    Poly4& operator+=(const Poly4& o);
    Poly4& operator-=(const Poly4& o);
    friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
    friend Poly4 operator-(Poly4 a, const Poly4& b) { return a -= b; }
    friend Poly4 operator*(const Poly4& a, const Poly4& b);
    friend Poly4 operator*(const ExactComplex& s, const Poly4& a);
    friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Sum of the four second derivatives.
Poly4 laplacian(const Poly4& p);

/// "3 z1^2 - 1/2 z2 z4" style rendering in graded-lex order.
std::string to_string(const Poly4& p);

} // namespace conformal_ladder
