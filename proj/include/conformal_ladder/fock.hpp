// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "conformal_ladder/clifford.hpp"
#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/exact.hpp"
#include "conformal_ladder/mat4.hpp"
#include "conformal_ladder/report.hpp"

namespace conformal_ladder {

/// Occupation numbers (n_a1, n_a2, n_b1, n_b2).
using Occupation = std::array<int, 4>;

enum class Oscillator { a1 = 0, a2 = 1, b1 = 2, b2 = 3 };

inline int total_occupation(const Occupation& n) noexcept { return n[0] + n[1] + n[2] + n[3]; }

/// H = (N_a + N_b)/2 + 1
Rational conformal_energy(const Occupation& n);
/// N_a - N_b
int helicity_of(const Occupation& n) noexcept;
/// <n|n> = prod n_i! in the monomial basis (a*)^n |0>.
Integer gram(const Occupation& n);

/// Occupation states with H <= E_max, i.e. total occupation <= 2(E_max-1),
/// ordered by total occupation and then lexicographically.
class FockBasis {
public:
    explicit FockBasis(int e_max);

    int e_max() const noexcept { return e_max_; }
    int max_occupation() const noexcept { return 2 * (e_max_ - 1); }
    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<Occupation>& states() const noexcept { return states_; }
    const Occupation& operator[](std::size_t i) const { return states_.at(i); }
    std::optional<std::size_t> index_of(const Occupation& n) const;
    bool contains(const Occupation& n) const { return index_of(n).has_value(); }

    /// States whose occupation leaves room for an operator raising it by
    /// `shift` units.
    std::vector<Occupation> guarded(int shift) const;

    /// Sum_{m=0}^{2(E_max-1)} C(m+3, 3)
    static std::size_t expected_size(int e_max);

private:
    static std::uint64_t key(const Occupation& n) noexcept;

    int e_max_;
    std::vector<Occupation> states_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

namespace scalar {

inline bool is_zero(const ExactComplex& z) { return z.is_zero(); }
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(); }
inline ExactComplex conj(const ExactComplex& z) { return z.conj(); }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

template <class S>
S from_exact(const ExactComplex& z);
template <>
inline ExactComplex from_exact<ExactComplex>(const ExactComplex& z) { return z; }
template <>
inline std::complex<double> from_exact<std::complex<double>>(const ExactComplex& z) { return z.to_complex(); }

template <class S>
S from_integer(const Integer& n);
template <>
inline ExactComplex from_integer<ExactComplex>(const Integer& n) { return ExactComplex(Rational(n)); }
template <>
inline std::complex<double> from_integer<std::complex<double>>(const Integer& n) { return {n.get_d(), 0.0}; }

} // namespace scalar

/// Sparse state in the monomial basis. Zero components are never stored.
template <class S>
class FockVector {
public:
    using Components = std::map<Occupation, S>;

    FockVector() = default;
    static FockVector basis_state(const Occupation& n, S c = S(1))
    {
        FockVector v;
        v.add(n, c);
        return v;
    }
    static FockVector vacuum() { return basis_state({0, 0, 0, 0}); }

    void add(const Occupation& n, const S& c)
    {
        if (scalar::is_zero(c))
            return;
        auto [it, inserted] = c_.try_emplace(n, c);
        if (!inserted) {
            it->second += c;
            if (scalar::is_zero(it->second))
                c_.erase(it);
        }
    }

    const Components& components() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    S coefficient(const Occupation& n) const
    {
        auto it = c_.find(n);
        return it == c_.end() ? S() : it->second;
    }
    int max_occupation() const
    {
        int m = 0;
        for (const auto& [n, c] : c_)
            m = std::max(m, total_occupation(n));
        return m;
    }

    FockVector& operator+=(const FockVector& o)
    {
        for (const auto& [n, c] : o.c_)
            add(n, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o)
    {
        for (const auto& [n, c] : o.c_)
            add(n, -c);
        return *this;
    }
    FockVector& operator*=(const S& s)
    {
        if (scalar::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& [n, c] : c_)
            c *= s;
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const S& s, FockVector a) { return a *= s; }
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.c_ == b.c_; }

private:
    Components c_;
};

/// <u|v> with the monomial-basis Gram matrix.
template <class S>
S inner_product(const FockVector<S>& u, const FockVector<S>& v)
{
    S sum{};
    for (const auto& [n, c] : u.components()) {
        auto it = v.components().find(n);
        if (it != v.components().end())
            sum += scalar::conj(c) * it->second * scalar::from_integer<S>(gram(n));
    }
    return sum;
}

/// Normal-ordered monomial (a*)^create a^annihilate over the four modes.
struct LadderMonomial {
    Occupation create{};
    Occupation annihilate{};
    auto operator<=>(const LadderMonomial&) const = default;
};

/// Polynomial in the oscillators, stored normal-ordered, acting on the
/// truncated Fock space of a basis. The grading shift is the largest net
/// number of quanta any term creates.
template <class S>
class LadderOp {
public:
    using Terms = std::map<LadderMonomial, S>;

    LadderOp() = default;
    explicit LadderOp(int max_occupation) : max_occ_(max_occupation) {}

    void add_term(const LadderMonomial& m, const S& c)
    {
        if (scalar::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (scalar::is_zero(it->second))
                terms_.erase(it);
        }
    }

    const Terms& terms() const noexcept { return terms_; }
    int max_occupation() const noexcept { return max_occ_; }

    int shift() const
    {
        int s = 0;
        for (const auto& [m, c] : terms_)
            s = std::max(s, total_occupation(m.create) - total_occupation(m.annihilate));
        return s;
    }

    /// Throws GuardBandViolation if a component of `v` sits too close to the
    /// cutoff for this operator's shift.
    FockVector<S> apply(const FockVector<S>& v) const
    {
        const int sh = shift();
        FockVector<S> out;
        for (const auto& [n, cn] : v.components()) {
            if (total_occupation(n) + sh > max_occ_)
                throw GuardBandViolation("operator with shift " + std::to_string(sh) +
                                         " applied at occupation " + std::to_string(total_occupation(n)) +
                                         " (cutoff " + std::to_string(max_occ_) + ")");
            for (const auto& [m, c] : terms_) {
                Integer weight = 1;
                Occupation image = n;
                bool vanishes = false;
                for (std::size_t k = 0; k < 4; ++k) {
                    if (m.annihilate[k] > n[k]) {
                        vanishes = true;
                        break;
                    }
                    for (int j = 0; j < m.annihilate[k]; ++j)
                        weight *= n[k] - j;
                    image[k] += m.create[k] - m.annihilate[k];
                }
                if (!vanishes)
                    out.add(image, c * cn * scalar::from_integer<S>(weight));
            }
        }
        return out;
    }

    LadderOp& operator+=(const LadderOp& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    LadderOp& operator*=(const S& s)
    {
        Terms t;
        for (const auto& [m, c] : terms_)
            if (!scalar::is_zero(c * s))
                t.emplace(m, c * s);
        terms_ = std::move(t);
        return *this;
    }
    friend LadderOp operator+(LadderOp a, const LadderOp& b) { return a += b; }
    friend LadderOp operator*(const S& s, LadderOp a) { return a *= s; }
    friend bool operator==(const LadderOp& a, const LadderOp& b) { return a.terms_ == b.terms_; }

private:
    int max_occ_ = 0;
    Terms terms_;
};

using FockOp = LadderOp<ExactComplex>;
using NumericOp = LadderOp<std::complex<double>>;
using ExactVector = FockVector<ExactComplex>;
using NumericVector = FockVector<std::complex<double>>;

/// Composition of operators evaluated state by state, so products and
/// commutators inherit the guard-band checks of their factors.
template <class S>
struct OpExpr {
    int shift = 0;
    std::function<FockVector<S>(const FockVector<S>&)> act;

    OpExpr() = default;
    OpExpr(int s, std::function<FockVector<S>(const FockVector<S>&)> f) : shift(s), act(std::move(f)) {}
    OpExpr(const LadderOp<S>& op) // NOLINT: implicit by design
        : shift(op.shift()), act([op](const FockVector<S>& v) { return op.apply(v); })
    {
    }
    FockVector<S> operator()(const FockVector<S>& v) const { return act(v); }
};

using Expr = OpExpr<ExactComplex>;

template <class S>
OpExpr<S> product(OpExpr<S> a, OpExpr<S> b)
{
    const int s = a.shift + b.shift;
    return {s, [a, b](const FockVector<S>& v) { return a(b(v)); }};
}

template <class S>
OpExpr<S> commutator(OpExpr<S> a, OpExpr<S> b)
{
    const int s = a.shift + b.shift;
    return {s, [a, b](const FockVector<S>& v) { return a(b(v)) - b(a(v)); }};
}

template <class S>
OpExpr<S> linear_combination(const std::vector<std::pair<S, OpExpr<S>>>& parts)
{
    int s = 0;
    for (const auto& p : parts)
        s = std::max(s, p.second.shift);
    return {s, [parts](const FockVector<S>& v) {
                FockVector<S> out;
                for (const auto& [c, e] : parts)
                    out += c * e(v);
                return out;
            }};
}

template <class S>
OpExpr<S> scalar_op(const S& c)
{
    return {0, [c](const FockVector<S>& v) { return c * v; }};
}

/// Outcome of comparing two operators on every guarded basis state.
struct GuardedComparison {
    bool holds = true;
    std::size_t states_checked = 0;
    std::string first_failure;
};

/// Compares lhs and rhs on basis states with occupation at most
/// max_occupation - max(shifts).
GuardedComparison compare_on_guarded(const FockBasis& basis, const OpExpr<ExactComplex>& lhs,
                                     const OpExpr<ExactComplex>& rhs);

/// a_k or a_k*.
FockOp oscillator(Oscillator kind, bool dagger, const FockBasis& basis);

/// X^ = phi~ X phi with phi = (a1, a2, b1*, b2*), phi~ = (a1*, a2*, -b1, -b2)
/// in the Dirac picture. Chiral input is carried to the Dirac picture by V
/// first. With normal_order, the vacuum value <0|X^|0> = -tr(lower block) is
/// dropped.
FockOp second_quantize(const Mat4& x, Picture picture, bool normal_order, const FockBasis& basis);

/// Vacuum value <0|X^|0> = -tr(lower 2x2 block), Dirac picture.
ExactComplex vacuum_value(const Mat4& x);

struct Chevalley {
    std::array<FockOp, 3> e;
    std::array<FockOp, 3> f;
    std::array<FockOp, 3> h;
};

/// E_i = phi~_i phi^{i+1}, F_i = phi~_{i+1} phi^i, H_i the quantized
/// diagonal e_ii - e_{i+1,i+1} (expected to equal [E_i, F_i]).
Chevalley chevalley_generators(const FockBasis& basis);

/// H_c = H_1 + 2 H_2 + H_3
FockOp chevalley_hc(const Chevalley& c);
/// H_theta = H_1 + H_2 + H_3
FockOp chevalley_htheta(const Chevalley& c);

Report chevalley_checks(const FockBasis& basis);
Report nilpotent_orbit_identities(const FockBasis& basis);

/// H = (a*a + b b*)/2 as the quantization of beta/2.
FockOp conformal_hamiltonian(const FockBasis& basis);
/// N_a - N_b as the normal-ordered quantization of 1.
FockOp helicity(const FockBasis& basis);

/// p_mu = s (-i) phi~ gamma_mu Pi_+ phi, s = +-1 frozen by <0|p_0|0> > 0.
FockOp momentum(int mu, const FockBasis& basis);
/// The sign s chosen for momentum().
int momentum_sign();

struct SpectrumEntry {
    std::optional<int> helicity; ///< nullopt for the full space
    Rational eigenvalue;
    std::size_t multiplicity = 0;
};

/// Spectrum of H read off its action on the basis, optionally restricted
/// to one helicity sector. Throws ConstructionError if H is not diagonal.
std::vector<SpectrumEntry> hamiltonian_spectrum(const FockBasis& basis, std::optional<int> helicity);

struct LowestWeight {
    ExactVector vector;        ///< (a2*)^h |0> or (b1*)^{|h|} |0>
    Rational normalization_sq; ///< N_1^2 = 1/|h|!
};

/// Throws DomainError if |h| > 2(E_max - 1).
LowestWeight lowest_weight_vector(int h, const FockBasis& basis);

Report ccr_checks(const FockBasis& basis);
Report homomorphism_checks(const FockBasis& basis);
Report picture_independence_checks(const FockBasis& basis);
Report helicity_centrality_checks(const FockBasis& basis);
Report momentum_checks(const FockBasis& basis, std::uint64_t seed, std::size_t samples);
Report lowest_weight_checks(const FockBasis& basis, int max_abs_h);
Report spectrum_checks(const FockBasis& basis);

} // namespace conformal_ladder
