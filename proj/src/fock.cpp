// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/fock.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace conformal_ladder {

Rational conformal_energy(const Occupation& n)
{
    return make_rational(total_occupation(n), 2) + 1;
}

int helicity_of(const Occupation& n) noexcept
{
    return n[0] + n[1] - n[2] - n[3];
}

Integer gram(const Occupation& n)
{
    Integer g = 1;
    for (int k : n)
        g *= factorial(static_cast<unsigned>(k));
    return g;
}

FockBasis::FockBasis(int e_max) : e_max_(e_max)
{
    if (e_max < 1)
        throw DomainError("E_max must be at least 1");
    const int m_max = max_occupation();
    for (int m = 0; m <= m_max; ++m)
        for (int n0 = m; n0 >= 0; --n0)
            for (int n1 = m - n0; n1 >= 0; --n1)
                for (int n2 = m - n0 - n1; n2 >= 0; --n2)
                    states_.push_back({n0, n1, n2, m - n0 - n1 - n2});
    // Lexicographic within a grade: ascending.
    auto grade_begin = states_.begin();
    while (grade_begin != states_.end()) {
        const int m = total_occupation(*grade_begin);
        auto grade_end = std::find_if(grade_begin, states_.end(),
                                      [m](const Occupation& n) { return total_occupation(n) != m; });
        std::sort(grade_begin, grade_end);
        grade_begin = grade_end;
    }
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i)
        index_.emplace(key(states_[i]), i);
}

std::uint64_t FockBasis::key(const Occupation& n) noexcept
{
    std::uint64_t k = 0;
    for (int v : n)
        k = (k << 16) | static_cast<std::uint16_t>(v);
    return k;
}

std::optional<std::size_t> FockBasis::index_of(const Occupation& n) const
{
    for (int v : n)
        if (v < 0 || v > 0xffff)
            return std::nullopt;
    auto it = index_.find(key(n));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Occupation> FockBasis::guarded(int shift) const
{
    std::vector<Occupation> out;
    for (const auto& n : states_)
        if (total_occupation(n) + shift <= max_occupation())
            out.push_back(n);
    return out;
}

std::size_t FockBasis::expected_size(int e_max)
{
    std::size_t s = 0;
    for (long m = 0; m <= 2L * (e_max - 1); ++m)
        s += binomial(m + 3, 3).get_ui();
    return s;
}

GuardedComparison compare_on_guarded(const FockBasis& basis, const Expr& lhs, const Expr& rhs)
{
    GuardedComparison r;
    const int shift = std::max(lhs.shift, rhs.shift);
    for (const auto& n : basis.guarded(shift)) {
        const auto v = ExactVector::basis_state(n);
        ++r.states_checked;
        if (!(lhs(v) == rhs(v))) {
            r.holds = false;
            std::ostringstream os;
            os << "mismatch on |" << n[0] << "," << n[1] << "," << n[2] << "," << n[3] << ">";
            r.first_failure = os.str();
            return r;
        }
    }
    return r;
}

namespace {

LadderMonomial mono(std::initializer_list<int> create, std::initializer_list<int> annihilate)
{
    LadderMonomial m;
    for (int k : create)
        m.create[static_cast<std::size_t>(k)] += 1;
    for (int k : annihilate)
        m.annihilate[static_cast<std::size_t>(k)] += 1;
    return m;
}

constexpr int A1 = 0;
constexpr int A2 = 1;
constexpr int B1 = 2;
constexpr int B2 = 3;

Mat4 elementary(int r, int c)
{
    Mat4 m;
    m(r, c) = 1;
    return m;
}

std::string detail_of(const GuardedComparison& c)
{
    std::string d = std::to_string(c.states_checked) + " guarded states";
    if (!c.holds)
        d += "; " + c.first_failure;
    return d;
}

} // namespace

FockOp oscillator(Oscillator kind, bool dagger, const FockBasis& basis)
{
    FockOp op(basis.max_occupation());
    const int k = static_cast<int>(kind);
    op.add_term(dagger ? mono({k}, {}) : mono({}, {k}), 1);
    return op;
}

ExactComplex vacuum_value(const Mat4& x)
{
    return -(x(2, 2) + x(3, 3));
}

FockOp second_quantize(const Mat4& x_in, Picture picture, bool normal_order, const FockBasis& basis)
{
    const Mat4 x = picture == Picture::dirac ? x_in : chiral_to_dirac(x_in);
    FockOp op(basis.max_occupation());
    for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be) {
            const ExactComplex& c = x(al, be);
            if (c.is_zero())
                continue;
            const bool upper_a = al < 2;
            const bool upper_b = be < 2;
            if (upper_a && upper_b) // a_al* a_be
                op.add_term(mono({al}, {be}), c);
            else if (upper_a) // a_al* b_be*
                op.add_term(mono({al, be}, {}), c);
            else if (upper_b) // -b_al a_be
                op.add_term(mono({}, {al, be}), -c);
            else // -b_al b_be* = -b_be* b_al - delta
                op.add_term(mono({be}, {al}), -c);
        }
    if (!normal_order)
        op.add_term({}, vacuum_value(x));
    return op;
}

Chevalley chevalley_generators(const FockBasis& basis)
{
    Chevalley c;
    for (int i = 0; i < 3; ++i) {
        c.e[static_cast<std::size_t>(i)] = second_quantize(elementary(i, i + 1), Picture::dirac, false, basis);
        c.f[static_cast<std::size_t>(i)] = second_quantize(elementary(i + 1, i), Picture::dirac, false, basis);
        c.h[static_cast<std::size_t>(i)] =
            second_quantize(elementary(i, i) - elementary(i + 1, i + 1), Picture::dirac, false, basis);
    }
    return c;
}

FockOp chevalley_hc(const Chevalley& c)
{
    return c.h[0] + ExactComplex(2) * c.h[1] + c.h[2];
}

FockOp chevalley_htheta(const Chevalley& c)
{
    return c.h[0] + c.h[1] + c.h[2];
}

FockOp conformal_hamiltonian(const FockBasis& basis)
{
    const GammaSet g = build_gammas(Picture::dirac);
    return ExactComplex(make_rational(1, 2)) * second_quantize(g.beta, Picture::dirac, false, basis);
}

FockOp helicity(const FockBasis& basis)
{
    return second_quantize(Mat4::identity(), Picture::dirac, true, basis);
}

namespace {

FockOp momentum_candidate(int mu, int sign, const FockBasis& basis)
{
    const GammaSet g = build_gammas(Picture::dirac);
    const Mat4 x = g.gamma[static_cast<std::size_t>(mu)] * g.pi_plus();
    return ExactComplex(Rational(0), Rational(-sign)) * second_quantize(x, Picture::dirac, false, basis);
}

int freeze_momentum_sign()
{
    const FockBasis small(2);
    for (int sign : {1, -1}) {
        const FockOp p0 = momentum_candidate(0, sign, small);
        const ExactComplex v = inner_product(ExactVector::vacuum(), p0.apply(ExactVector::vacuum()));
        if (v.is_real() && sgn(v.re()) > 0)
            return sign;
    }
    throw ConstructionError("no sign choice gives <0|p_0|0> > 0");
}

} // namespace

int momentum_sign()
{
    static const int sign = freeze_momentum_sign();
    return sign;
}

FockOp momentum(int mu, const FockBasis& basis)
{
    if (mu < 0 || mu > 3)
        throw DomainError("momentum index must be 0..3");
    return momentum_candidate(mu, momentum_sign(), basis);
}

std::vector<SpectrumEntry> hamiltonian_spectrum(const FockBasis& basis, std::optional<int> helicity_sector)
{
    const FockOp h = conformal_hamiltonian(basis);
    std::map<Rational, std::size_t> counts;
    for (const auto& n : basis.states()) {
        if (helicity_sector && helicity_of(n) != *helicity_sector)
            continue;
        const ExactVector image = h.apply(ExactVector::basis_state(n));
        if (image.components().size() > 1 || (image.components().size() == 1 && image.components().begin()->first != n))
            throw ConstructionError("conformal Hamiltonian is not diagonal in the occupation basis");
        const ExactComplex e = image.coefficient(n);
        if (!e.is_real())
            throw ConstructionError("conformal Hamiltonian has a non-real eigenvalue");
        ++counts[e.re()];
    }
    std::vector<SpectrumEntry> out;
    for (const auto& [e, c] : counts)
        out.push_back({helicity_sector, e, c});
    return out;
}

LowestWeight lowest_weight_vector(int h, const FockBasis& basis)
{
    const int m = h < 0 ? -h : h;
    if (m > basis.max_occupation())
        throw DomainError("|h| = " + std::to_string(m) + " exceeds the cutoff occupation " +
                          std::to_string(basis.max_occupation()));
    Occupation n{0, 0, 0, 0};
    n[h >= 0 ? A2 : B1] = m;
    return {ExactVector::basis_state(n), Rational(1, 1) / Rational(factorial(static_cast<unsigned>(m)))};
}

Report ccr_checks(const FockBasis& basis)
{
    Report rep;
    bool ccr = true;
    bool ann = true;
    bool cre = true;
    std::size_t checked = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Expr x = oscillator(static_cast<Oscillator>(i), false, basis);
            const Expr xd = oscillator(static_cast<Oscillator>(j), true, basis);
            const Expr y = oscillator(static_cast<Oscillator>(j), false, basis);
            const Expr xid = oscillator(static_cast<Oscillator>(i), true, basis);
            const auto c1 = compare_on_guarded(basis, commutator(x, xd), scalar_op(ExactComplex(i == j ? 1 : 0)));
            const auto c2 = compare_on_guarded(basis, commutator(x, y), scalar_op(ExactComplex(0)));
            const auto c3 = compare_on_guarded(basis, commutator(xid, xd), scalar_op(ExactComplex(0)));
            ccr = ccr && c1.holds;
            ann = ann && c2.holds;
            cre = cre && c3.holds;
            checked += c1.states_checked;
        }
    rep.add_exact("ladder/ccr/mixed", "[x_i, x_j*] = delta_ij for x in {a1, a2, b1, b2}", ccr,
                  std::to_string(checked) + " state checks");
    rep.add_exact("ladder/ccr/annihilators", "[x_i, x_j] = 0", ann);
    rep.add_exact("ladder/ccr/creators", "[x_i*, x_j*] = 0", cre);

    bool vac = true;
    for (int i = 0; i < 4; ++i)
        vac = vac && oscillator(static_cast<Oscillator>(i), false, basis).apply(ExactVector::vacuum()).is_zero();
    rep.add_exact("ladder/vacuum/annihilated", "a|0> = 0 = b|0>", vac);
    return rep;
}

Report homomorphism_checks(const FockBasis& basis)
{
    Report rep;
    const GammaSet g = build_gammas(Picture::dirac);
    const U22Basis u = u22_basis(g);
    std::vector<FockOp> hats;
    for (const auto& e : u.elements)
        hats.push_back(second_quantize(e.matrix, Picture::dirac, false, basis));
    std::size_t pairs = 0;
    std::size_t failures = 0;
    std::size_t states = 0;
    std::string first;
    for (std::size_t i = 0; i < hats.size(); ++i)
        for (std::size_t j = i + 1; j < hats.size(); ++j) {
            ++pairs;
            const FockOp rhs =
                second_quantize(commutator(u.elements[i].matrix, u.elements[j].matrix), Picture::dirac, false, basis);
            const Expr lhs = commutator(Expr(hats[i]), Expr(hats[j]));
            const auto c = compare_on_guarded(basis, lhs, Expr(rhs));
            states += c.states_checked;
            if (!c.holds) {
                ++failures;
                if (first.empty())
                    first = "[" + u.elements[i].label + ", " + u.elements[j].label + "]: " + c.first_failure;
            }
        }
    rep.add_exact("ladder/homomorphism", "[X^, Y^] = [X, Y]^ for all pairs of u(2,2) basis elements",
                  failures == 0,
                  std::to_string(pairs) + " pairs, " + std::to_string(states) + " state checks" +
                      (first.empty() ? "" : "; " + first));
    return rep;
}

Report picture_independence_checks(const FockBasis& basis)
{
    Report rep;
    const U22Basis d = u22_basis(build_gammas(Picture::dirac));
    const U22Basis ch = u22_basis(build_gammas(Picture::chiral));
    bool same = true;
    bool round_trip = true;
    for (std::size_t k = 0; k < d.elements.size(); ++k) {
        const FockOp from_dirac = second_quantize(d.elements[k].matrix, Picture::dirac, true, basis);
        same = same && from_dirac == second_quantize(ch.elements[k].matrix, Picture::chiral, true, basis);
        round_trip = round_trip &&
                     from_dirac == second_quantize(dirac_to_chiral(d.elements[k].matrix), Picture::chiral, true, basis);
    }
    rep.add_exact("ladder/picture-independence", "X^ built from chiral gammas equals X^ built from Dirac gammas",
                  same && round_trip);
    return rep;
}

Report helicity_centrality_checks(const FockBasis& basis)
{
    Report rep;
    const U22Basis u = u22_basis(build_gammas(Picture::dirac));
    const FockOp h = helicity(basis);
    bool central = true;
    for (const auto& e : u.elements) {
        const auto c = compare_on_guarded(basis, commutator(Expr(h), Expr(second_quantize(e.matrix, Picture::dirac, true, basis))),
                                          scalar_op(ExactComplex(0)));
        central = central && c.holds;
    }
    rep.add_exact("ladder/helicity/central", "[h, X^] = 0 for all 16 basis elements", central);

    FockOp diag(basis.max_occupation());
    diag.add_term(mono({A1}, {A1}), 1);
    diag.add_term(mono({A2}, {A2}), 1);
    diag.add_term(mono({B1}, {B1}), -1);
    diag.add_term(mono({B2}, {B2}), -1);
    rep.add_exact("ladder/helicity/form", "normal-ordered 1^ = a*a - b*b", h == diag);
    return rep;
}

Report chevalley_checks(const FockBasis& basis)
{
    Report rep;
    const Chevalley c = chevalley_generators(basis);
    bool cartan = true;
    for (std::size_t i = 0; i < 3; ++i)
        cartan = cartan && compare_on_guarded(basis, commutator(Expr(c.e[i]), Expr(c.f[i])), Expr(c.h[i])).holds;
    rep.add_exact("ladder/chevalley/cartan", "[E_i, F_i] = H_i", cartan);

    const ExactVector vac = ExactVector::vacuum();
    bool f_kill = true;
    for (const auto& f : c.f)
        f_kill = f_kill && f.apply(vac).is_zero();
    rep.add_exact("ladder/vacuum/lowering", "F_i |0> = 0, i = 1, 2, 3", f_kill);
    rep.add_exact("ladder/vacuum/raising", "E_1 |0> = 0 = E_3 |0>",
                  c.e[0].apply(vac).is_zero() && c.e[2].apply(vac).is_zero());
    const FockOp hc = chevalley_hc(c);
    rep.add_exact("ladder/vacuum/hc", "(H_c - 2)|0> = 0", hc.apply(vac) == ExactComplex(2) * vac);

    const int mo = basis.max_occupation();
    FockOp e1(mo), e2(mo), e3(mo), f1(mo), f2(mo), f3(mo);
    e1.add_term(mono({A1}, {A2}), 1);
    e2.add_term(mono({A2, B1}, {}), 1);
    e3.add_term(mono({B2}, {B1}), -1);
    f1.add_term(mono({A2}, {A1}), 1);
    f2.add_term(mono({}, {A2, B1}), -1);
    f3.add_term(mono({B1}, {B2}), -1);
    rep.add_exact("ladder/chevalley/explicit", "E_1 = a1* a2, E_2 = a2* b1*, E_3 = -b1 b2*, F_i likewise",
                  c.e[0] == e1 && c.e[1] == e2 && c.e[2] == e3 && c.f[0] == f1 && c.f[1] == f2 && c.f[2] == f3);

    const FockOp h = conformal_hamiltonian(basis);
    rep.add_exact("ladder/hamiltonian/half-hc", "H = H_c / 2", h == ExactComplex(make_rational(1, 2)) * hc);
    return rep;
}

Report nilpotent_orbit_identities(const FockBasis& basis)
{
    Report rep;
    const Chevalley c = chevalley_generators(basis);
    const int mo = basis.max_occupation();
    FockOp a1b1(mo), a1b2(mo), a2b2(mo);
    a1b1.add_term(mono({A1, B1}, {}), 1);
    a1b2.add_term(mono({A1, B2}, {}), 1);
    a2b2.add_term(mono({A2, B2}, {}), 1);
    const Expr e12 = commutator(Expr(c.e[0]), Expr(c.e[1]));
    const Expr etheta = commutator(e12, Expr(c.e[2]));
    const auto r1 = compare_on_guarded(basis, e12, Expr(a1b1));
    const auto r2 = compare_on_guarded(basis, etheta, Expr(a1b2));
    const auto r3 = compare_on_guarded(basis, commutator(Expr(c.e[1]), Expr(c.e[2])), Expr(a2b2));
    rep.add_exact("ladder/orbit/e12", "[E_1, E_2] = a1* b1*", r1.holds, detail_of(r1));
    rep.add_exact("ladder/orbit/theta", "E_theta = [[E_1, E_2], E_3] = a1* b2*", r2.holds, detail_of(r2));
    rep.add_exact("ladder/orbit/e23", "[E_2, E_3] = a2* b2*", r3.holds, detail_of(r3));

    // Repeated application of E_theta must hit the guard band, never
    // silently truncate.
    bool flagged = false;
    ExactVector v = ExactVector::vacuum();
    try {
        for (int k = 0; k <= mo / 2; ++k)
            v = a1b2.apply(v);
    } catch (const GuardBandViolation&) {
        flagged = true;
    }
    rep.add_exact("ladder/orbit/guard-band", "E_theta past the cutoff is flagged", flagged);
    return rep;
}

Report momentum_checks(const FockBasis& basis, std::uint64_t seed, std::size_t samples)
{
    Report rep;
    std::array<FockOp, 4> p;
    for (int mu = 0; mu < 4; ++mu)
        p[static_cast<std::size_t>(mu)] = momentum(mu, basis);

    bool comm = true;
    std::size_t states = 0;
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = mu + 1; nu < 4; ++nu) {
            const auto c = compare_on_guarded(basis, commutator(Expr(p[mu]), Expr(p[nu])), scalar_op(ExactComplex(0)));
            comm = comm && c.holds;
            states += c.states_checked;
        }
    rep.add_exact("ladder/momentum/commute", "[p_mu, p_nu] = 0", comm, std::to_string(states) + " state checks");

    std::vector<std::pair<ExactComplex, Expr>> parts;
    for (std::size_t mu = 0; mu < 4; ++mu)
        parts.emplace_back(ExactComplex(GammaSet::metric[mu]), product(Expr(p[mu]), Expr(p[mu])));
    const auto sq = compare_on_guarded(basis, linear_combination(parts), scalar_op(ExactComplex(0)));
    rep.add_exact("ladder/momentum/mass-shell", "p^2 = -p_0^2 + p_1^2 + p_2^2 + p_3^2 = 0", sq.holds, detail_of(sq));

    const ExactVector vac = ExactVector::vacuum();
    rep.add_exact("ladder/momentum/vacuum", "<0|p_0|0> = 1", inner_product(vac, p[0].apply(vac)) == ExactComplex(1),
                  "sign " + std::to_string(momentum_sign()));

    FockOp p0_form(basis.max_occupation());
    for (int i = 0; i < 2; ++i) {
        // (1/2)(a_i* + b_i)(a_i + b_i*)
        const ExactComplex half = make_rational(1, 2);
        p0_form.add_term(mono({i}, {i}), half);
        p0_form.add_term(mono({i, i + 2}, {}), half);
        p0_form.add_term(mono({}, {i, i + 2}), half);
        p0_form.add_term(mono({i + 2}, {i + 2}), half);
        p0_form.add_term({}, half);
    }
    rep.add_exact("ladder/momentum/p0-form", "p_0 = (1/2) sum (a_i* + b_i)(a_i + b_i*)", p[0] == p0_form);

    // Positivity on seeded random states inside the guard band.
    std::mt19937_64 rng(seed);
    const auto states_pool = basis.guarded(p[0].shift());
    std::uniform_int_distribution<std::size_t> pick(0, states_pool.size() - 1);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    bool positive = true;
    bool real = true;
    Rational min_value;
    for (std::size_t s = 0; s < samples; ++s) {
        ExactVector psi;
        for (int k = 0; k < 6; ++k)
            psi.add(states_pool[pick(rng)], ExactComplex(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))));
        const ExactComplex e = inner_product(psi, p[0].apply(psi));
        real = real && e.is_real();
        positive = positive && sgn(e.re()) >= 0;
        if (s == 0 || e.re() < min_value)
            min_value = e.re();
    }
    rep.add_exact("ladder/momentum/positive-energy", "<psi|p_0|psi> >= 0", positive && real,
                  std::to_string(samples) + " seeded states, minimum " + to_string(min_value));
    return rep;
}

Report lowest_weight_checks(const FockBasis& basis, int max_abs_h)
{
    Report rep;
    const Chevalley c = chevalley_generators(basis);
    const FockOp hc = chevalley_hc(c);
    const FockOp ht = chevalley_htheta(c);
    bool ok = true;
    std::string detail;
    for (int h = -max_abs_h; h <= max_abs_h; ++h) {
        const LowestWeight lw = lowest_weight_vector(h, basis);
        const int m = h < 0 ? -h : h;
        bool this_ok = true;
        for (const auto& f : c.f)
            this_ok = this_ok && f.apply(lw.vector).is_zero();
        this_ok = this_ok && ht.apply(lw.vector) == lw.vector;
        this_ok = this_ok && hc.apply(lw.vector) == ExactComplex(m + 2) * lw.vector;
        this_ok = this_ok && inner_product(lw.vector, lw.vector) * ExactComplex(lw.normalization_sq) == ExactComplex(1);
        this_ok = this_ok && helicity(basis).apply(lw.vector) == ExactComplex(h) * lw.vector;
        if (!this_ok && detail.empty())
            detail = "fails at h = " + std::to_string(h);
        ok = ok && this_ok;
    }
    rep.add_exact("ladder/lowest-weight",
                  "F_i|h+> = 0, (H_theta - 1)|h+> = 0, (H_c - |h| - 2)|h+> = 0, unit norm",
                  ok, detail.empty() ? "|h| <= " + std::to_string(max_abs_h) : detail);
    return rep;
}

Report spectrum_checks(const FockBasis& basis)
{
    Report rep;
    const int e_max = basis.e_max();

    const auto zero = hamiltonian_spectrum(basis, 0);
    bool squares = zero.size() == static_cast<std::size_t>(e_max);
    for (std::size_t i = 0; squares && i < zero.size(); ++i) {
        const long n = static_cast<long>(i) + 1;
        squares = zero[i].eigenvalue == n && zero[i].multiplicity == static_cast<std::size_t>(n * n);
    }
    std::string mults;
    for (const auto& e : zero)
        mults += (mults.empty() ? "" : ",") + std::to_string(e.multiplicity);
    rep.add_exact("ladder/spectrum/zero-helicity", "eigenvalue n has multiplicity n^2 at h = 0", squares,
                  "multiplicities " + mults);

    const auto full = hamiltonian_spectrum(basis, std::nullopt);
    bool half_integers = full.size() == static_cast<std::size_t>(2 * e_max - 1);
    for (std::size_t i = 0; half_integers && i < full.size(); ++i)
        half_integers = full[i].eigenvalue == make_rational(static_cast<long>(i) + 2, 2);
    rep.add_exact("ladder/spectrum/full", "spectrum of H is {1, 3/2, 2, ...}", half_integers);

    bool sectors = true;
    const int mo = basis.max_occupation();
    for (int h = -mo; h <= mo; ++h) {
        const auto spec = hamiltonian_spectrum(basis, h);
        const int m = h < 0 ? -h : h;
        // N_a - N_b = h, N_a + N_b = 2(E - 1): (N_a + 1)(N_b + 1) states.
        std::size_t expected_levels = 0;
        for (int occ = m; occ <= mo; occ += 2)
            ++expected_levels;
        if (spec.size() != expected_levels) {
            sectors = false;
            break;
        }
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const long occ = m + 2 * static_cast<long>(i);
            const long na = (occ + h) / 2;
            const long nb = (occ - h) / 2;
            sectors = sectors && spec[i].eigenvalue == make_rational(m, 2) + 1 + static_cast<long>(i) &&
                      spec[i].multiplicity == static_cast<std::size_t>((na + 1) * (nb + 1));
        }
    }
    rep.add_exact("ladder/spectrum/sectors", "helicity h sector has spectrum |h|/2 + 1, |h|/2 + 2, ...", sectors);

    const FockOp hc = chevalley_hc(chevalley_generators(basis));
    bool positive = true;
    for (const auto& n : basis.states()) {
        const ExactComplex e = hc.apply(ExactVector::basis_state(n)).coefficient(n);
        positive = positive && e.is_real() && e.re() >= 2;
    }
    rep.add_exact("ladder/spectrum/hc-positive", "H_c >= 2 on every basis state", positive);

    const FockOp h = conformal_hamiltonian(basis);
    rep.add_exact("ladder/hamiltonian/vacuum", "H|0> = |0>", h.apply(ExactVector::vacuum()) == ExactVector::vacuum());
    rep.add_exact("ladder/basis/size", "basis size is sum C(m+3, 3) over m <= 2(E_max - 1)",
                  basis.size() == FockBasis::expected_size(e_max), std::to_string(basis.size()) + " states");
    return rep;
}

} // namespace conformal_ladder
