// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/vertex.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/mat4.hpp"

namespace conformal_ladder {

namespace {

Mat2 quaternion_conj_unit(int alpha)
{
    Mat2 q = quaternion_unit(alpha);
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out(r, c) = q(c, r).conj();
    return out;
}

CMat2 slash(const CPoint4& z, bool conjugate_units)
{
    CMat2 m{};
    for (int alpha = 1; alpha <= 4; ++alpha) {
        const Mat2 q = conjugate_units ? quaternion_conj_unit(alpha) : quaternion_unit(alpha);
        for (std::size_t i = 0; i < 4; ++i)
            m[i] += q.e[i].to_complex() * z[static_cast<std::size_t>(alpha - 1)];
    }
    return m;
}

LadderMonomial pair_monomial(int first, int second, bool create)
{
    LadderMonomial m;
    Occupation& o = create ? m.create : m.annihilate;
    o[static_cast<std::size_t>(first)] += 1;
    o[static_cast<std::size_t>(second)] += 1;
    return m;
}

int epsilon(int a, int b)
{
    if (a == b)
        return 0;
    return a == 0 ? 1 : -1;
}

Poly4 zvec_square()
{
    Poly4 w;
    for (int j = 0; j < 3; ++j)
        w += Poly4::variable(j) * Poly4::variable(j);
    return w;
}

std::string rational_coefficient(const Rational& c)
{
    return to_string(abs(c));
}

/// Deterministic doubles from the raw engine output.
struct Uniform {
    std::mt19937_64 rng;
    explicit Uniform(std::uint64_t seed) : rng(seed) {}
    double operator()(double a, double b) { return a + (b - a) * static_cast<double>(rng() >> 11) * 0x1.0p-53; }
};

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

std::string point_string(const CPoint4& z)
{
    std::ostringstream os;
    os.precision(4);
    os << "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i)
            os << ", ";
        os << z[i].real();
        if (z[i].imag() != 0)
            os << (z[i].imag() < 0 ? "-" : "+") << std::abs(z[i].imag()) << "i";
    }
    os << ")";
    return os.str();
}

} // namespace

CMat2 quaternion_slash(const CPoint4& z)
{
    return slash(z, false);
}

CMat2 quaternion_slash_conj(const CPoint4& w)
{
    return slash(w, true);
}

Report quaternion_identity_check()
{
    Report rep;

    bool eps = true;
    std::string bad;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    ExactComplex sum;
                    for (int alpha = 1; alpha <= 4; ++alpha) {
                        const Mat2 q = quaternion_unit(alpha);
                        sum += q(a1, b1) * q(a2, b2);
                    }
                    if (!(sum == ExactComplex(2 * epsilon(a1, a2) * epsilon(b1, b2))) && bad.empty()) {
                        eps = false;
                        bad = "fails at A1 B1 A2 B2 = " + std::to_string(a1 + 1) + std::to_string(b1 + 1) +
                              std::to_string(a2 + 1) + std::to_string(b2 + 1);
                    }
                }
    rep.add_exact("vertex/quaternion/epsilon", "sum_a q_a^{A1 B1} q_a^{A2 B2} = 2 eps^{A1 A2} eps^{B1 B2}", eps, bad);

    bool trace = true;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const Mat2 p = quaternion_conj_unit(a) * quaternion_unit(b);
            trace = trace && (p(0, 0) + p(1, 1) == ExactComplex(a == b ? 2 : 0));
        }
    rep.add_exact("vertex/quaternion/trace", "tr(q_a* q_b) = 2 delta_ab", trace);

    std::array<Poly4, 4> qz;
    for (int alpha = 1; alpha <= 4; ++alpha) {
        const Mat2 q = quaternion_unit(alpha);
        for (std::size_t i = 0; i < 4; ++i)
            qz[i] += q.e[i] * Poly4::variable(alpha - 1);
    }
    Poly4 square;
    for (int j = 0; j < 4; ++j)
        square += Poly4::variable(j) * Poly4::variable(j);
    const Poly4 det = qz[0] * qz[3] - qz[1] * qz[2];
    rep.add_exact("vertex/quaternion/determinant", "det(qz) = z^2", det == square, to_string(det));
    return rep;
}

std::array<FockOp, 4> translation_generators(const FockBasis& basis)
{
    std::array<FockOp, 4> t;
    for (int alpha = 1; alpha <= 4; ++alpha) {
        const Mat2 q = quaternion_unit(alpha);
        FockOp op(basis.max_occupation());
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                op.add_term(pair_monomial(a, 2 + b, true), q(a, b));
        t[static_cast<std::size_t>(alpha - 1)] = op;
    }
    return t;
}

Report translation_checks(const FockBasis& basis)
{
    Report rep;
    const auto t = translation_generators(basis);

    std::vector<std::pair<ExactComplex, Expr>> parts;
    for (const auto& ta : t)
        parts.emplace_back(ExactComplex(1), product(Expr(ta), Expr(ta)));
    const auto sq = compare_on_guarded(basis, linear_combination(parts), scalar_op(ExactComplex(0)));
    rep.add_exact("vertex/translation/square", "T^2 = sum_a T_a T_a = 0", sq.holds,
                  std::to_string(sq.states_checked) + " state checks");

    bool comm = true;
    std::size_t states = 0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
            const auto c = compare_on_guarded(basis, commutator(Expr(t[a]), Expr(t[b])), scalar_op(ExactComplex(0)));
            comm = comm && c.holds;
            states += c.states_checked;
        }
    rep.add_exact("vertex/translation/commute", "[T_a, T_b] = 0", comm, std::to_string(states) + " state checks");

    const FockOp h = conformal_hamiltonian(basis);
    bool grading = true;
    states = 0;
    for (const auto& ta : t) {
        const auto c = compare_on_guarded(basis, commutator(Expr(h), Expr(ta)), Expr(ta));
        grading = grading && c.holds;
        states += c.states_checked;
    }
    rep.add_exact("vertex/translation/grading", "[H, T_a] = T_a", grading, std::to_string(states) + " state checks");
    return rep;
}

std::string to_string(HarmonicMode m)
{
    switch (m) {
    case HarmonicMode::closed_form:
        return "closed_form";
    case HarmonicMode::recurrence:
        return "recurrence";
    case HarmonicMode::fock:
        return "fock";
    }
    return "unknown";
}

std::vector<Rational> harmonic_h_coefficients(int k)
{
    if (k < 0)
        throw DomainError("harmonic degree must be non-negative");
    std::vector<Rational> c;
    for (int j = 0; 2 * j <= k; ++j) {
        Rational v(binomial(k + 1, 2 * j + 1));
        c.push_back(j % 2 ? Rational(-v) : v);
    }
    return c;
}

std::string harmonic_h_string(int k)
{
    const auto c = harmonic_h_coefficients(k);
    std::string out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const int p4 = k - 2 * static_cast<int>(j);
        const int pv = 2 * static_cast<int>(j);
        std::string mono;
        if (p4 > 0)
            mono += p4 == 1 ? "z4" : "z4^" + std::to_string(p4);
        if (pv > 0)
            mono += (mono.empty() ? "" : " ") + std::string("zvec^") + std::to_string(pv);
        const bool unit = abs(c[j]) == 1;
        std::string term = unit && !mono.empty() ? mono : rational_coefficient(c[j]) + (mono.empty() ? "" : " " + mono);
        if (j == 0)
            out = (sgn(c[j]) < 0 ? "-" : "") + term;
        else
            out += (sgn(c[j]) < 0 ? " - " : " + ") + term;
    }
    return out;
}

Poly4 harmonic_h(int k, HarmonicMode mode, const FockBasis* basis)
{
    if (k < 0)
        throw DomainError("harmonic degree must be non-negative");
    const Poly4 z4 = Poly4::variable(3);
    const Poly4 w = zvec_square();

    switch (mode) {
    case HarmonicMode::closed_form: {
        const auto c = harmonic_h_coefficients(k);
        Poly4 h;
        for (std::size_t j = 0; j < c.size(); ++j)
            h += ExactComplex(c[j]) * (z4.pow(static_cast<unsigned>(k - 2 * static_cast<int>(j))) *
                                       w.pow(static_cast<unsigned>(j)));
        return h;
    }
    case HarmonicMode::recurrence: {
        Poly4 prev = Poly4::constant(1);
        if (k == 0)
            return prev;
        Poly4 cur = ExactComplex(2) * z4;
        const Poly4 sq = w + z4 * z4;
        for (int n = 1; n < k; ++n) {
            Poly4 next = ExactComplex(2) * z4 * cur - sq * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    case HarmonicMode::fock: {
        if (basis == nullptr || basis->e_max() < k + 1)
            throw DomainError("fock route for h_" + std::to_string(k) + " needs E_max >= " + std::to_string(k + 1));
        const auto t = translation_generators(*basis);
        FockOp ba(basis->max_occupation());
        for (int a = 0; a < 2; ++a)
            ba.add_term(pair_monomial(a, 2 + a, false), ExactComplex(1));

        const Integer kf = factorial(static_cast<unsigned>(k));
        Poly4 h;
        for (int e0 = k; e0 >= 0; --e0)
            for (int e1 = k - e0; e1 >= 0; --e1)
                for (int e2 = k - e0 - e1; e2 >= 0; --e2) {
                    const Exponent4 e{e0, e1, e2, k - e0 - e1 - e2};
                    ExactVector v = ExactVector::vacuum();
                    Integer ef = 1;
                    for (std::size_t a = 0; a < 4; ++a) {
                        for (int r = 0; r < e[a]; ++r)
                            v = t[a].apply(v);
                        ef *= factorial(static_cast<unsigned>(e[a]));
                    }
                    for (int r = 0; r < k; ++r)
                        v = ba.apply(v);
                    const ExactComplex vev = v.coefficient({0, 0, 0, 0});
                    // multinomial k!/e! from expanding (qz)^k, over (k!)^2
                    h.add_term(e, vev * ExactComplex(Rational(Integer(1), Integer(kf * ef))));
                }
        return h;
    }
    }
    throw DomainError("unknown harmonic mode");
}

std::size_t eigenspace_dimension(int n, const FockBasis& basis)
{
    if (n < 1 || n > basis.e_max())
        throw DomainError("eigenvalue " + std::to_string(n) + " outside the basis (E_max " +
                          std::to_string(basis.e_max()) + ")");
    for (const auto& s : hamiltonian_spectrum(basis, 0))
        if (s.eigenvalue == n)
            return s.multiplicity;
    return 0;
}

std::size_t harmonic_polynomial_count(int degree)
{
    if (degree < 0)
        throw DomainError("degree must be non-negative");
    auto monomials = [](int d) {
        std::vector<Exponent4> out;
        for (int e0 = d; e0 >= 0; --e0)
            for (int e1 = d - e0; e1 >= 0; --e1)
                for (int e2 = d - e0 - e1; e2 >= 0; --e2)
                    out.push_back({e0, e1, e2, d - e0 - e1 - e2});
        return out;
    };
    const auto cols = monomials(degree);
    if (degree < 2)
        return cols.size();
    const auto rows = monomials(degree - 2);
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Poly4 lap = laplacian(Poly4::monomial(cols[c]));
        for (std::size_t r = 0; r < rows.size(); ++r)
            m(r, c) = lap.coefficient(rows[r]).re();
    }
    return cols.size() - m.rank();
}

NumericOp raising_operator(const CPoint4& z, const FockBasis& basis)
{
    const CMat2 m = quaternion_slash(z);
    NumericOp op(basis.max_occupation());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            op.add_term(pair_monomial(a, 2 + b, true), m[static_cast<std::size_t>(2 * a + b)]);
    return op;
}

NumericOp lowering_operator(const CPoint4& w, cplx scale, const FockBasis& basis)
{
    const CMat2 m = quaternion_slash_conj(w);
    NumericOp op(basis.max_occupation());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            op.add_term(pair_monomial(b, 2 + a, false), scale * m[static_cast<std::size_t>(2 * a + b)]);
    return op;
}

std::vector<NumericVector> raising_series(const CPoint4& z, const FockBasis& basis)
{
    const NumericOp r = raising_operator(z, basis);
    std::vector<NumericVector> out{NumericVector::vacuum()};
    for (int k = 1; k < basis.e_max(); ++k)
        out.push_back(cplx(1.0 / k) * r.apply(out.back()));
    return out;
}

NormResult vertex_norm_sq(const CPoint4& z, const FockBasis& basis, double tolerance)
{
    if (tube_classify(z) != TubeClass::forward_tube)
        throw DomainError("norm series needs z in the forward tube, got " + point_string(z));
    NormResult res;
    for (const auto& v : raising_series(z, basis)) {
        res.terms.push_back(inner_product(v, v).real());
        res.series += res.terms.back();
    }
    const double zz = z.hermitian_square();
    const double sq = std::norm(z.square());
    res.closed_form = 1.0 / (1.0 - 2.0 * zz + sq);
    res.last_term = res.terms.back() / res.series;
    res.relative_error = std::abs(res.series - res.closed_form) / std::abs(res.closed_form);
    if (res.last_term > tolerance)
        throw ConvergenceError("norm series at " + point_string(z) + ": last term " + fmt(res.last_term) +
                               " above tolerance at E_max " + std::to_string(basis.e_max()));
    return res;
}

TwoPointResult two_point_series(const CPoint4& z1, const CPoint4& z2, const FockBasis& basis,
                                LoweringNormalization norm)
{
    const cplx s1 = z1.square();
    if (std::abs(s1) < 1e-300)
        throw DomainError("two-point series needs z1^2 != 0");
    const CPoint4 check = (1.0 / s1) * z1;
    const cplx scale = norm == LoweringNormalization::printed ? 1.0 / s1 : cplx(1.0);
    const NumericOp lower = lowering_operator(check, scale, basis);

    TwoPointResult res;
    double k = 0;
    double last = 0;
    for (const auto& v : raising_series(z2, basis)) {
        NumericVector u = v;
        for (int r = 0; r < static_cast<int>(k); ++r)
            u = cplx(1.0 / (r + 1)) * lower.apply(u);
        const cplx term = u.coefficient({0, 0, 0, 0});
        res.series += term;
        res.partial_sums.push_back(res.series);
        last = std::abs(term);
        k += 1;
    }
    const CPoint4 d = z1 - z2;
    res.closed_form = 1.0 / d.square();
    res.relative_error = std::abs(res.series - res.closed_form) / std::abs(res.closed_form);
    res.last_term = last / std::abs(res.series);
    return res;
}

TwoPointResult two_point_vev(const CPoint4& z1, const CPoint4& z2, const FockBasis& basis, double tolerance)
{
    if (std::abs(z1.square() - 1.0) > 1e-12)
        throw DomainError("two-point function is normalized at z1^2 = 1");
    auto res = two_point_series(z1, z2, basis, LoweringNormalization::printed);
    if (res.last_term > tolerance)
        throw ConvergenceError("two-point series: last term " + fmt(res.last_term) + " above tolerance at E_max " +
                               std::to_string(basis.e_max()));
    return res;
}

double two_point_conjugation_residual(const CPoint4& z1, const CPoint4& z2)
{
    const cplx w12 = 1.0 / (z1 - z2).square();
    const CPoint4 s1 = star_involution(z1);
    const CPoint4 s2 = star_involution(z2);
    const cplx w21 = 1.0 / (s2 - s1).square();
    const cplx rhs = w21 / (std::conj(z1.square()) * std::conj(z2.square()));
    return std::abs(std::conj(w12) - rhs) / std::abs(w12);
}

Report harmonic_checks(int max_k)
{
    Report rep;
    const FockBasis basis(max_k + 1);

    bool routes = true;
    bool harmonic = true;
    bool degree = true;
    std::string bad;
    for (int k = 0; k <= max_k; ++k) {
        const Poly4 closed = harmonic_h(k, HarmonicMode::closed_form);
        const Poly4 rec = harmonic_h(k, HarmonicMode::recurrence);
        const Poly4 fock = harmonic_h(k, HarmonicMode::fock, &basis);
        if (!(closed == rec && rec == fock)) {
            routes = false;
            if (bad.empty())
                bad = "routes disagree at k = " + std::to_string(k);
        }
        harmonic = harmonic && laplacian(fock).is_zero();
        degree = degree && fock.homogeneous_degree() == k;
    }
    const std::string range = "k = 0.." + std::to_string(max_k);
    rep.add_exact("vertex/harmonic/routes", "closed form, recurrence and <0|(ba)^k (a* qz b*)^k|0>/(k!)^2 agree",
                  routes, bad.empty() ? range : bad);
    rep.add_exact("vertex/harmonic/laplacian", "Laplacian of h_k vanishes", harmonic, range);
    rep.add_exact("vertex/harmonic/degree", "h_k is homogeneous of degree k", degree, range);

    const bool low = harmonic_h_string(0) == "1" && harmonic_h_string(1) == "2 z4" &&
                     harmonic_h_string(2) == "3 z4^2 - zvec^2" && harmonic_h_string(3) == "4 z4^3 - 4 z4 zvec^2";
    rep.add_exact("vertex/harmonic/low-orders", "h_0 = 1, h_1 = 2 z4, h_2 = 3 z4^2 - zvec^2, h_3 = 4 z4^3 - 4 z4 zvec^2",
                  low);

    bool dims = true;
    std::ostringstream detail;
    for (int n = 1; n <= max_k + 1; ++n) {
        const std::size_t a = eigenspace_dimension(n, basis);
        const std::size_t b = harmonic_polynomial_count(n - 1);
        dims = dims && a == b && a == static_cast<std::size_t>(n * n);
        detail << (n > 1 ? " " : "") << a;
    }
    rep.add_exact("vertex/harmonic/eigenspace",
                  "dim of the H = n, h = 0 eigenspace equals the number of harmonic polynomials of degree n - 1",
                  dims, detail.str());
    return rep;
}

Report norm_checks(const FockBasis& basis)
{
    Report rep;
    const std::vector<CPoint4> points{
        CPoint4{{0.0, 0.0, 0.0, 0.5}},
        CPoint4{{0.3, 0.0, 0.0, cplx(0.2, 0.1)}},
        CPoint4{{cplx(0.0, 0.25), 0.1, 0.0, 0.3}},
        CPoint4{{0.1, cplx(0.2, -0.1), cplx(0.0, 0.15), 0.2}},
        CPoint4{{cplx(0.2, 0.2), 0.0, -0.1, cplx(0.1, -0.2)}},
    };
    double worst = 0;
    bool margin = true;
    for (const auto& z : points) {
        margin = margin && 2 * z.hermitian_square() < 0.9 * (1 + std::norm(z.square()));
        worst = std::max(worst, vertex_norm_sq(z, basis).relative_error);
    }
    rep.add_exact("vertex/norm/points-in-tube", "sample points satisfy 2 z.zbar < 0.9 (1 + |z^2|^2)", margin);
    rep.add_numeric("vertex/norm/closed-form", "||A(z)|0>||^2 = 1 / (1 - 2 z.zbar + z^2 zbar^2)", worst, 1e-8,
                    std::to_string(points.size()) + " points, E_max " + std::to_string(basis.e_max()));
    return rep;
}

Report two_point_checks(const FockBasis& basis, std::uint64_t seed, double roundoff)
{
    Report rep;
    const CPoint4 z1{{0.0, 0.0, 0.0, 1.0}};
    const std::vector<CPoint4> grid{
        CPoint4{{0.0, 0.0, 0.0, 0.3}},
        CPoint4{{0.2, 0.0, 0.0, 0.1}},
        CPoint4{{0.1, 0.1, 0.1, -0.2}},
        CPoint4{{cplx(0.0, 0.15), 0.0, 0.1, 0.2}},
        CPoint4{{cplx(0.1, 0.1), -0.1, cplx(0.0, 0.05), cplx(0.2, -0.1)}},
        CPoint4{{cplx(0.0, -0.2), cplx(0.1, 0.0), 0.0, cplx(-0.1, 0.15)}},
    };
    double worst = 0;
    for (const auto& z2 : grid)
        worst = std::max(worst, two_point_vev(z1, z2, basis).relative_error);
    rep.add_numeric("vertex/two-point/grid", "<0|B(z1) A(z2)|0> = 1/(z1 - z2)^2 at z1^2 = 1, |z2| <= 0.3", worst, 1e-8,
                    std::to_string(grid.size()) + " points, E_max " + std::to_string(basis.e_max()));

    // Positive terms along z4, so the truncation error must shrink with the cutoff.
    const CPoint4 far{{0.0, 0.0, 0.0, 0.45}};
    const auto series = two_point_series(z1, far, basis);
    bool monotone = true;
    double prev = INFINITY;
    for (const cplx& s : series.partial_sums) {
        const double err = std::abs(s - series.closed_form);
        monotone = monotone && err < prev;
        prev = err;
    }
    rep.add_exact("vertex/two-point/monotone", "truncation error decreases with the cutoff at |z2| = 0.45", monotone,
                  "final relative error " + fmt(series.relative_error));

    // Away from z1^2 = 1 neither normalization of the lowering exponential
    // reproduces 1/(z1 - z2)^2; the unnormalized one gives z1^2/(z1 - z2)^2.
    const CPoint4 y1{{0.0, 0.0, 0.0, 1.3}};
    const CPoint4 y2{{0.1, 0.0, cplx(0.0, 0.1), 0.2}};
    const auto printed = two_point_series(y1, y2, basis, LoweringNormalization::printed);
    const auto bare = two_point_series(y1, y2, basis, LoweringNormalization::unnormalized);
    const cplx expected = y1.square() * bare.closed_form;
    rep.add_numeric("vertex/two-point/unnormalized", "exp(b q* zcheck1 a) gives z1^2/(z1 - z2)^2",
                    std::abs(bare.series - expected) / std::abs(expected), 1e-8);
    rep.add_exact("vertex/two-point/printed-off-shell", "the 1/z1^2 prefactor misses 1/(z1 - z2)^2 when z1^2 != 1",
                  printed.relative_error > 1e-3, "relative deviation " + fmt(printed.relative_error));

    Uniform u(seed);
    double worst_conj = 0;
    int pairs = 0;
    while (pairs < 100) {
        CPoint4 a;
        CPoint4 b;
        for (std::size_t i = 0; i < 4; ++i) {
            a[i] = {u(-1, 1), u(-1, 1)};
            b[i] = {u(-1, 1), u(-1, 1)};
        }
        if (std::abs(a.square()) < 0.05 || std::abs(b.square()) < 0.05 || std::abs((a - b).square()) < 0.05)
            continue;
        worst_conj = std::max(worst_conj, two_point_conjugation_residual(a, b));
        ++pairs;
    }
    rep.add_numeric("vertex/two-point/conjugation", "conj w(z1, z2) = w(z2*, z1*) / (zbar1^2 zbar2^2)", worst_conj,
                    roundoff, "100 seeded pairs");
    return rep;
}

} // namespace conformal_ladder
