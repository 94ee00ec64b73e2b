// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/mat4.hpp"

#include "conformal_ladder/errors.hpp"

#include <sstream>

namespace conformal_ladder {

Mat2 Mat2::identity()
{
    return sigma(0);
}

Mat2 Mat2::sigma(int k)
{
    Mat2 m;
    switch (k) {
    case 0:
        m(0, 0) = 1;
        m(1, 1) = 1;
        break;
    case 1:
        m(0, 1) = 1;
        m(1, 0) = 1;
        break;
    case 2:
        m(0, 1) = -ExactComplex::i();
        m(1, 0) = ExactComplex::i();
        break;
    case 3:
        m(0, 0) = 1;
        m(1, 1) = -1;
        break;
    default:
        throw DomainError("Pauli index must be 0..3");
    }
    return m;
}

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    return out;
}

Mat2 operator+(const Mat2& a, const Mat2& b)
{
    Mat2 out;
    for (std::size_t k = 0; k < 4; ++k)
        out.e[k] = a.e[k] + b.e[k];
    return out;
}

Mat2 operator*(const ExactComplex& s, Mat2 m)
{
    for (auto& x : m.e)
        x *= s;
    return m;
}

Mat2 quaternion_unit(int alpha)
{
    if (alpha == 4)
        return Mat2::identity();
    if (alpha < 1 || alpha > 4)
        throw DomainError("quaternion index must be 1..4");
    return -ExactComplex::i() * Mat2::sigma(alpha);
}

Mat4 Mat4::identity()
{
    Mat4 m;
    for (int k = 0; k < 4; ++k)
        m(k, k) = 1;
    return m;
}

Mat4 Mat4::kron(const Mat2& a, const Mat2& b)
{
    Mat4 m;
    for (int r1 = 0; r1 < 2; ++r1)
        for (int c1 = 0; c1 < 2; ++c1) {
            if (a(r1, c1).is_zero())
                continue;
            for (int r2 = 0; r2 < 2; ++r2)
                for (int c2 = 0; c2 < 2; ++c2)
                    m(2 * r1 + r2, 2 * c1 + c2) = a(r1, c1) * b(r2, c2);
        }
    return m;
}

Mat4 Mat4::adjoint() const
{
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = (*this)(c, r).conj();
    return m;
}

ExactComplex Mat4::trace() const
{
    ExactComplex t;
    for (int k = 0; k < 4; ++k)
        t += (*this)(k, k);
    return t;
}

bool Mat4::is_zero() const
{
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

Mat4& Mat4::operator+=(const Mat4& o)
{
    for (std::size_t k = 0; k < 16; ++k)
        e_[k] += o.e_[k];
    return *this;
}

Mat4& Mat4::operator-=(const Mat4& o)
{
    for (std::size_t k = 0; k < 16; ++k)
        e_[k] -= o.e_[k];
    return *this;
}

Mat4& Mat4::operator*=(const ExactComplex& s)
{
    for (auto& x : e_)
        x *= s;
    return *this;
}

Mat4 operator-(const Mat4& a)
{
    Mat4 m = a;
    m *= ExactComplex(-1);
    return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b)
{
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k) {
            if (a(r, k).is_zero())
                continue;
            for (int c = 0; c < 4; ++c)
                if (!b(k, c).is_zero())
                    out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

Mat4 commutator(const Mat4& a, const Mat4& b)
{
    return a * b - b * a;
}

Mat4 anticommutator(const Mat4& a, const Mat4& b)
{
    return a * b + b * a;
}

std::string to_string(const Mat4& m)
{
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < 4; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < 4; ++c)
            os << (c ? ", " : "") << to_string(m(r, c));
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace conformal_ladder
