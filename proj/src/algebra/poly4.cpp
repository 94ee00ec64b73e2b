// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/poly4.hpp"

#include "conformal_ladder/errors.hpp"

#include <sstream>

namespace conformal_ladder {

Poly4 Poly4::constant(const ExactComplex& c)
{
    return monomial({0, 0, 0, 0}, c);
}

Poly4 Poly4::variable(int index)
{
    if (index < 0 || index > 3)
        throw DomainError("Poly4 variable index must be 0..3");
    Exponent4 e{0, 0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(e);
}

Poly4 Poly4::monomial(const Exponent4& e, const ExactComplex& c)
{
    Poly4 p;
    p.add_term(e, c);
    return p;
}

ExactComplex Poly4::coefficient(const Exponent4& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactComplex() : it->second;
}

std::optional<int> Poly4::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    const auto degree = [](const Exponent4& e) { return e[0] + e[1] + e[2] + e[3]; };
    const int d = degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (degree(e) != d)
            return std::nullopt;
    return d;
}

void Poly4::add_term(const Exponent4& e, const ExactComplex& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly4& Poly4::operator+=(const Poly4& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Poly4& Poly4::operator-=(const Poly4& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b)
{
    Poly4 out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return out;
}

Poly4 operator*(const ExactComplex& s, const Poly4& a)
{
    Poly4 out;
    for (const auto& [e, c] : a.terms_)
        out.add_term(e, s * c);
    return out;
}

Poly4 Poly4::derivative(int index) const
{
    if (index < 0 || index > 3)
        throw DomainError("Poly4 variable index must be 0..3");
    const auto k = static_cast<std::size_t>(index);
    Poly4 out;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0)
            continue;
        Exponent4 d = e;
        d[k] -= 1;
        out.add_term(d, ExactComplex(static_cast<long>(e[k])) * c);
    }
    return out;
}

Poly4 Poly4::pow(unsigned n) const
{
    Poly4 out = constant(1);
    for (unsigned k = 0; k < n; ++k)
        out = out * *this;
    return out;
}

std::complex<double> Poly4::evaluate(const std::array<std::complex<double>, 4>& z) const
{
    std::complex<double> sum = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> m = c.to_complex();
        for (std::size_t k = 0; k < 4; ++k)
            for (int p = 0; p < e[k]; ++p)
                m *= z[k];
        sum += m;
    }
    return sum;
}

Poly4 laplacian(const Poly4& p)
{
    Poly4 out;
    for (int k = 0; k < 4; ++k)
        out += p.derivative(k).derivative(k);
    return out;
}

std::string to_string(const Poly4& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool monomial_is_one = e == Exponent4{0, 0, 0, 0};
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            const Rational mag = negative ? Rational(-c.re()) : c.re();
            if (mag != 1 || monomial_is_one)
                coeff = to_string(mag);
        } else {
            coeff = "(" + to_string(c) + ")";
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        os << coeff;
        bool need_space = !coeff.empty();
        for (std::size_t k = 0; k < 4; ++k) {
            if (e[k] == 0)
                continue;
            os << (need_space ? " " : "") << "z" << (k + 1);
            if (e[k] > 1)
                os << "^" << e[k];
            need_space = true;
        }
    }
    return os.str();
}

} // namespace conformal_ladder
