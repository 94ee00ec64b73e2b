// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "conformal_ladder/exact.hpp"

namespace conformal_ladder {

/// 2x2 matrix over ExactComplex, row-major. Only used to assemble Mat4
/// values as Kronecker products of Pauli-type blocks.
struct Mat2 {
    std::array<ExactComplex, 4> e{};

    ExactComplex& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const ExactComplex& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    static Mat2 identity();
    static Mat2 sigma(int k); ///< k = 0 (identity), 1, 2, 3

    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Mat2 operator+(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(const ExactComplex& s, Mat2 m);
    friend bool operator==(const Mat2& a, const Mat2& b) = default;
};

/// Quaternion units q_j = -i sigma_j (j = 1,2,3), q_4 = 1.
Mat2 quaternion_unit(int alpha); ///< alpha in 1..4

/// Dense 4x4 matrix over ExactComplex, row-major.
class Mat4 {
public:
    Mat4() = default;

    static Mat4 zero() { return {}; }
    static Mat4 identity();
    static Mat4 kron(const Mat2& a, const Mat2& b);

    ExactComplex& operator()(int r, int c) { return e_[index(r, c)]; }
    const ExactComplex& operator()(int r, int c) const { return e_[index(r, c)]; }

    Mat4 adjoint() const;
    ExactComplex trace() const;
    bool is_zero() const;

    Mat4& operator+=(const Mat4& o);
    Mat4& operator-=(const Mat4& o);
    Mat4& operator*=(const ExactComplex& s);

    friend Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
    friend Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
    friend Mat4 operator-(const Mat4& a);
    friend Mat4 operator*(const Mat4& a, const Mat4& b);
    friend Mat4 operator*(const ExactComplex& s, Mat4 m) { return m *= s; }
    friend bool operator==(const Mat4& a, const Mat4& b) = default;

private:
    static std::size_t index(int r, int c) { return static_cast<std::size_t>(4 * r + c); }
    std::array<ExactComplex, 16> e_{};
};

Mat4 commutator(const Mat4& a, const Mat4& b);
Mat4 anticommutator(const Mat4& a, const Mat4& b);

std::string to_string(const Mat4& m);

} // namespace conformal_ladder
