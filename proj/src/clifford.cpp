// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/clifford.hpp"

#include "conformal_ladder/errors.hpp"

#include <sstream>

namespace conformal_ladder {

namespace {

const ExactComplex kI = ExactComplex::i();

Mat2 c_block()
{
    return kI * Mat2::sigma(2); // c = i sigma_2 = [[0, 1], [-1, 0]]
}

std::string mu_label(int mu)
{
    return std::to_string(mu);
}

} // namespace

std::string to_string(Picture p)
{
    return p == Picture::dirac ? "dirac" : "chiral";
}

Mat4 GammaSet::gamma_mn(int mu, int nu) const
{
    Mat4 m = commutator(gamma[static_cast<std::size_t>(mu)], gamma[static_cast<std::size_t>(nu)]);
    m *= make_rational(1, 2);
    return m;
}

Mat4 GammaSet::pi_plus() const
{
    Mat4 m = Mat4::identity() + gamma5;
    m *= make_rational(1, 2);
    return m;
}

Mat4 GammaSet::pi_minus() const
{
    Mat4 m = Mat4::identity() - gamma5;
    m *= make_rational(1, 2);
    return m;
}

GammaSet build_gammas(Picture picture)
{
    GammaSet g;
    g.picture = picture;
    const Mat2 one = Mat2::identity();
    const double sign = picture == Picture::chiral ? 1 : -1; // gamma_j^D = -gamma_j^Ch
    if (picture == Picture::dirac) {
        g.beta = Mat4::kron(Mat2::sigma(3), one);
        g.gamma5 = Mat4::kron(Mat2::sigma(1), one);
    } else {
        g.beta = Mat4::kron(Mat2::sigma(1), one);
        g.gamma5 = Mat4::kron(Mat2::sigma(3), one);
    }
    g.gamma[0] = kI * g.beta;
    for (int j = 1; j <= 3; ++j) {
        Mat4 m = Mat4::kron(c_block(), quaternion_unit(j));
        if (sign < 0)
            m = -m;
        g.gamma[static_cast<std::size_t>(j)] = m;
    }
    return g;
}

Report gamma_invariants(const GammaSet& g, const std::string& prefix)
{
    Report rep;
    const Mat4 one = Mat4::identity();

    bool anti = true;
    bool herm = true;
    bool beta_conj = true;
    bool beta_conj_mn = true;
    bool g5_anti = true;
    for (int mu = 0; mu < 4; ++mu) {
        const Mat4& gm = g.gamma[static_cast<std::size_t>(mu)];
        const ExactComplex eta_mm = GammaSet::metric[static_cast<std::size_t>(mu)];
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4& gn = g.gamma[static_cast<std::size_t>(nu)];
            Mat4 expected = Mat4::zero();
            if (mu == nu)
                expected = ExactComplex(2) * eta_mm * one;
            anti = anti && anticommutator(gm, gn) == expected;
            if (mu < nu) {
                const Mat4 gmn = g.gamma_mn(mu, nu);
                beta_conj_mn = beta_conj_mn && in_u22(gmn, g.beta);
            }
        }
        herm = herm && gm.adjoint() == eta_mm * gm;
        beta_conj = beta_conj && in_u22(gm, g.beta);
        g5_anti = g5_anti && anticommutator(g.gamma5, gm).is_zero();
    }
    const std::string p = prefix + "/";
    rep.add_exact(p + "anticommutator", "{gamma_mu, gamma_nu} = 2 eta_mu_nu", anti);
    rep.add_exact(p + "hermiticity", "gamma_mu* = eta_mu_mu gamma_mu", herm);
    rep.add_exact(p + "beta-form", "beta* = beta, beta^2 = 1, tr beta = 0",
                  g.beta.adjoint() == g.beta && g.beta * g.beta == one && g.beta.trace().is_zero());
    rep.add_exact(p + "beta-preserving", "gamma_mu* beta + beta gamma_mu = 0", beta_conj);
    rep.add_exact(p + "beta-preserving-commutators", "gamma_mu_nu* beta + beta gamma_mu_nu = 0", beta_conj_mn);
    rep.add_exact(p + "gamma5", "gamma5 hermitian, gamma5^2 = 1, anticommutes with gamma_mu",
                  g.gamma5.adjoint() == g.gamma5 && g.gamma5 * g.gamma5 == one && g5_anti);

    // gamma5 beta = gamma_1 gamma_2 gamma_3 = c* (x) 1 (Dirac) or c (x) 1 (chiral).
    const Mat4 triple = g.gamma[1] * g.gamma[2] * g.gamma[3];
    const Mat2 c = c_block();
    const Mat4 expected = g.picture == Picture::dirac ? Mat4::kron(ExactComplex(-1) * c, Mat2::identity())
                                                      : Mat4::kron(c, Mat2::identity());
    rep.add_exact(p + "triple-product", "gamma5 beta = gamma_1 gamma_2 gamma_3 = c* or c (x) 1",
                  g.gamma5 * g.beta == triple && triple == expected);

    if (g.picture == Picture::dirac)
        rep.add_exact(p + "explicit", "beta = sigma_3 (x) 1, gamma5 = sigma_1 (x) 1",
                      g.beta == Mat4::kron(Mat2::sigma(3), Mat2::identity()) &&
                          g.gamma5 == Mat4::kron(Mat2::sigma(1), Mat2::identity()));
    else {
        bool spatial = true;
        for (int j = 1; j <= 3; ++j)
            spatial = spatial && g.gamma[static_cast<std::size_t>(j)] == Mat4::kron(c, quaternion_unit(j));
        rep.add_exact(p + "explicit",
                      "beta = sigma_1 (x) 1, gamma5 = sigma_3 (x) 1, gamma_j = c (x) q_j",
                      spatial && g.beta == Mat4::kron(Mat2::sigma(1), Mat2::identity()) &&
                          g.gamma5 == Mat4::kron(Mat2::sigma(3), Mat2::identity()));
    }
    rep.add_exact(p + "beta-gamma0", "beta = i gamma^0 (gamma_0 = i beta)", g.gamma[0] == kI * g.beta);
    return rep;
}

Mat4 similarity_w()
{
    return Mat4::kron(Mat2::sigma(1) + Mat2::sigma(3), Mat2::identity());
}

Mat4 chiral_to_dirac(const Mat4& x)
{
    const Mat4 w = similarity_w();
    Mat4 m = w * x * w;
    m *= make_rational(1, 2);
    return m;
}

Mat4 dirac_to_chiral(const Mat4& x)
{
    return chiral_to_dirac(x);
}

Report similarity_identities()
{
    Report rep;
    const Mat4 w = similarity_w();
    const GammaSet d = build_gammas(Picture::dirac);
    const GammaSet ch = build_gammas(Picture::chiral);
    rep.add_exact("clifford/similarity/involution", "V^2 = 1, i.e. W^2 = 2", w * w == ExactComplex(2) * Mat4::identity());
    rep.add_exact("clifford/similarity/traceless", "tr V = 0", w.trace().is_zero());
    bool all = true;
    bool back = true;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        all = all && w * ch.gamma[mu] * w == ExactComplex(2) * d.gamma[mu];
        back = back && w * d.gamma[mu] * w == ExactComplex(2) * ch.gamma[mu];
    }
    rep.add_exact("clifford/similarity/gammas", "V gamma_mu^Ch V = gamma_mu^D and back", all && back);
    rep.add_exact("clifford/similarity/gamma5", "V gamma5^Ch V = gamma5^D", chiral_to_dirac(ch.gamma5) == d.gamma5);
    rep.add_exact("clifford/similarity/beta", "V beta^Ch V = beta^D", chiral_to_dirac(ch.beta) == d.beta);
    rep.add_exact("clifford/similarity/triple-sign", "gamma_1 gamma_2 gamma_3 flips sign between pictures",
                  ch.gamma[1] * ch.gamma[2] * ch.gamma[3] == -(d.gamma[1] * d.gamma[2] * d.gamma[3]));
    bool flip = true;
    for (std::size_t j = 1; j <= 3; ++j)
        flip = flip && d.gamma[j] == -ch.gamma[j];
    rep.add_exact("clifford/similarity/spatial-flip", "gamma_j^D = -gamma_j^Ch", flip);
    return rep;
}

bool in_u22(const Mat4& x, const Mat4& beta)
{
    return (x.adjoint() * beta + beta * x).is_zero();
}

U22Basis u22_basis(const GammaSet& g)
{
    U22Basis b;
    for (int mu = 0; mu < 4; ++mu)
        b.elements.push_back({"gamma_" + mu_label(mu), g.gamma[static_cast<std::size_t>(mu)]});
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            b.elements.push_back({"gamma_" + mu_label(mu) + mu_label(nu), g.gamma_mn(mu, nu)});
    for (int mu = 0; mu < 4; ++mu)
        b.elements.push_back({"gamma5 gamma_" + mu_label(mu), g.gamma5 * g.gamma[static_cast<std::size_t>(mu)]});
    b.elements.push_back({"gamma5", g.gamma5});
    b.elements.push_back({"i", kI * Mat4::identity()});
    for (const auto& e : b.elements)
        if (!in_u22(e.matrix, g.beta))
            throw ConstructionError("u(2,2) element " + e.label + " violates X* beta + beta X = 0");
    return b;
}

namespace {

// Real coordinates of a 4x4 complex matrix: (re, im) of each entry.
std::vector<Rational> flatten_real(const Mat4& m)
{
    std::vector<Rational> v;
    v.reserve(32);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            v.push_back(m(r, c).re());
            v.push_back(m(r, c).im());
        }
    return v;
}

Mat4 unit_real_matrix(std::size_t param)
{
    Mat4 m;
    const int entry = static_cast<int>(param / 2);
    m(entry / 4, entry % 4) = (param % 2 == 0) ? ExactComplex(1) : kI;
    return m;
}

RationalMatrix span_matrix(const U22Basis& basis)
{
    RationalMatrix a(32, basis.elements.size());
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        const auto col = flatten_real(basis.elements[k].matrix);
        for (std::size_t r = 0; r < 32; ++r)
            a(r, k) = col[r];
    }
    return a;
}

} // namespace

std::size_t u22_solution_dimension(const Mat4& beta)
{
    // Columns: image of each real unit parameter under X -> X* beta + beta X.
    RationalMatrix a(32, 32);
    for (std::size_t p = 0; p < 32; ++p) {
        const Mat4 x = unit_real_matrix(p);
        const auto col = flatten_real(x.adjoint() * beta + beta * x);
        for (std::size_t r = 0; r < 32; ++r)
            a(r, p) = col[r];
    }
    return a.nullspace().size();
}

std::optional<std::vector<Rational>> u22_coordinates(const Mat4& x, const U22Basis& basis)
{
    std::vector<Rational> coords;
    if (!span_matrix(basis).solve(flatten_real(x), coords))
        return std::nullopt;
    return coords;
}

std::size_t u22_real_rank(const U22Basis& basis)
{
    return span_matrix(basis).rank();
}

Mat4 clifford_conjugate(const Mat4& x, const GammaSet& g)
{
    // Generators a = 0..3 and 5 (stored at index 4).
    std::array<Mat4, 5> gen{g.gamma[0], g.gamma[1], g.gamma[2], g.gamma[3], g.gamma5};

    struct Monomial {
        Mat4 m;
        Mat4 inverse;
        Mat4 conjugate; // image under + (before coefficient conjugation)
    };
    std::vector<Monomial> monomials;
    const Mat4 one = Mat4::identity();
    monomials.push_back({one, one, one});
    for (std::size_t a = 0; a < 5; ++a) {
        // gamma_a^2 = +-1, so the inverse is gamma_a^2 gamma_a.
        const Mat4 sq = gen[a] * gen[a];
        monomials.push_back({gen[a], sq * gen[a], -gen[a]});
    }
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) {
            const Mat4 m = gen[a] * gen[b];
            const Mat4 inv = (gen[b] * gen[b]) * gen[b] * (gen[a] * gen[a]) * gen[a];
            // (gamma_a gamma_b)^+ = gamma_b^+ gamma_a^+ = gamma_b gamma_a
            monomials.push_back({m, inv, gen[b] * gen[a]});
        }

    Mat4 rebuilt;
    Mat4 out;
    const ExactComplex quarter = make_rational(1, 4);
    for (const auto& mono : monomials) {
        const ExactComplex coeff = quarter * (mono.inverse * x).trace();
        if (coeff.is_zero())
            continue;
        rebuilt += coeff * mono.m;
        out += coeff.conj() * mono.conjugate;
    }
    if (!(rebuilt == x))
        throw ConstructionError("monomial expansion did not reproduce the input matrix");
    return out;
}

Report projector_identities(const GammaSet& g)
{
    Report rep;
    const Mat4 pp = g.pi_plus();
    const Mat4 pm = g.pi_minus();
    const std::string p = "clifford/" + to_string(g.picture) + "/projector/";
    rep.add_exact(p + "sum", "Pi_+ + Pi_- = 1", pp + pm == Mat4::identity());
    rep.add_exact(p + "orthogonal", "Pi_+ Pi_- = 0", (pp * pm).is_zero());
    bool nil = true;
    bool comm = true;
    bool chir = true;
    bool swap = true;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        const Mat4 tm = g.gamma[mu] * pp;
        for (std::size_t nu = 0; nu < 4; ++nu) {
            const Mat4 tn = g.gamma[nu] * pp;
            nil = nil && (tm * tn).is_zero();
            comm = comm && commutator(tm, tn).is_zero();
        }
        chir = chir && g.gamma5 * tm == -tm;
        swap = swap && tm == pm * g.gamma[mu];
    }
    rep.add_exact(p + "nilpotent", "gamma_mu Pi_+ gamma_nu Pi_+ = 0", nil);
    rep.add_exact(p + "translations-commute", "[gamma_mu Pi_+, gamma_nu Pi_+] = 0", comm);
    rep.add_exact(p + "chirality", "gamma5 gamma_mu Pi_+ = -gamma_mu Pi_+", chir);
    rep.add_exact(p + "intertwine", "gamma_mu Pi_+ = Pi_- gamma_mu", swap);
    return rep;
}

std::vector<LabeledMatrix> poincare_dilation_generators(const GammaSet& g)
{
    std::vector<LabeledMatrix> out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            out.push_back({"gamma_" + mu_label(mu) + mu_label(nu), g.gamma_mn(mu, nu)});
    out.push_back({"gamma5", g.gamma5});
    const Mat4 pp = g.pi_plus();
    for (int mu = 0; mu < 4; ++mu)
        out.push_back({"gamma_" + mu_label(mu) + " Pi_+", g.gamma[static_cast<std::size_t>(mu)] * pp});
    return out;
}

Report clifford_checks()
{
    Report rep;
    for (Picture pic : {Picture::dirac, Picture::chiral}) {
        const GammaSet g = build_gammas(pic);
        const std::string p = "clifford/" + to_string(pic) + "/";
        rep.append(gamma_invariants(g, "clifford/" + to_string(pic)));
        rep.append(projector_identities(g));

        const U22Basis basis = u22_basis(g);
        rep.add_exact(p + "u22/solution-dimension", "real solutions of X* beta + beta X = 0 form a 16-dim space",
                      u22_solution_dimension(g.beta) == 16, std::to_string(u22_solution_dimension(g.beta)));
        rep.add_exact(p + "u22/basis-rank", "the 16 listed elements are real-linearly independent",
                      u22_real_rank(basis) == 16);

        bool minus = true;
        bool adjoint_form = true;
        for (const auto& e : basis.elements) {
            const Mat4 plus = clifford_conjugate(e.matrix, g);
            minus = minus && plus == -e.matrix;
            adjoint_form = adjoint_form && plus == g.beta * e.matrix.adjoint() * g.beta;
        }
        rep.add_exact(p + "u22/clifford-conjugation", "X^+ = -X on all 16 basis elements", minus);
        rep.add_exact(p + "u22/conjugation-adjoint", "X^+ = beta X* beta", adjoint_form);

        bool inside = true;
        for (const auto& e : poincare_dilation_generators(g))
            inside = inside && in_u22(e.matrix, g.beta);
        rep.add_exact(p + "u22/poincare-dilation", "gamma_mu_nu, gamma5 and gamma_mu Pi_+ lie in u(2,2)", inside);
    }
    rep.append(similarity_identities());
    return rep;
}

} // namespace conformal_ladder
