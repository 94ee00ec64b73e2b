// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <random>

#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/fock.hpp"

using namespace conformal_ladder;

namespace {

const ExactComplex kI = ExactComplex::i();

Mat4 random_matrix(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> d(-4, 4);
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = ExactComplex(make_rational(d(rng), 2), Rational(d(rng)));
    return m;
}

// Every state of total occupation <= max_occ, by nested loops.
std::vector<Occupation> all_states(int max_occ)
{
    std::vector<Occupation> out;
    for (int a = 0; a <= max_occ; ++a)
        for (int b = 0; a + b <= max_occ; ++b)
            for (int c = 0; a + b + c <= max_occ; ++c)
                for (int d = 0; a + b + c + d <= max_occ; ++d)
                    out.push_back({a, b, c, d});
    return out;
}

} // namespace

TEST_CASE("basis enumerates every state below the cutoff")
{
    for (int e = 1; e <= 6; ++e) {
        const FockBasis basis(e);
        const auto expect = all_states(2 * (e - 1));
        CHECK(basis.size() == expect.size());
        CHECK(FockBasis::expected_size(e) == expect.size());
        for (const auto& n : expect)
            CHECK(basis.contains(n));
        CHECK_FALSE(basis.contains({2 * e, 0, 0, 0}));
    }
    CHECK(FockBasis(8).size() == 3060);
}

TEST_CASE("quantum numbers of a basis state")
{
    CHECK(conformal_energy({0, 0, 0, 0}) == 1);
    CHECK(conformal_energy({1, 0, 0, 0}) == Rational(3, 2));
    CHECK(conformal_energy({1, 2, 3, 0}) == 4);
    CHECK(helicity_of({1, 2, 3, 0}) == 0);
    CHECK(helicity_of({0, 2, 0, 5}) == -3);
    CHECK(gram({0, 3, 2, 1}) == 12);
    CHECK(gram({4, 0, 0, 0}) == 24);
}

TEST_CASE("single oscillators act as sqrt-free ladder operators in the monomial basis")
{
    const FockBasis basis(5);
    const FockOp a2 = oscillator(Oscillator::a2, false, basis);
    const FockOp a2d = oscillator(Oscillator::a2, true, basis);
    const ExactVector v = ExactVector::basis_state({1, 3, 0, 2});
    CHECK(a2d.apply(v) == ExactVector::basis_state({1, 4, 0, 2}));
    CHECK(a2.apply(v) == ExactVector::basis_state({1, 2, 0, 2}, 3));
    CHECK(a2.apply(ExactVector::vacuum()).is_zero());
    // adjointness through the Gram form: <a* u|w> = <u|a w>
    const ExactVector u = ExactVector::basis_state({1, 2, 0, 2});
    CHECK(inner_product(a2d.apply(u), v) == inner_product(u, a2.apply(v)));
}

TEST_CASE("applying a raising operator at the cutoff is a guard-band violation")
{
    const FockBasis basis(3);
    const FockOp b1d = oscillator(Oscillator::b1, true, basis);
    CHECK_NOTHROW(b1d.apply(ExactVector::basis_state({0, 0, 3, 0})));
    CHECK_THROWS_AS(b1d.apply(ExactVector::basis_state({0, 0, 4, 0})), GuardBandViolation);
}

TEST_CASE("canonical commutation relations on guarded states")
{
    const FockBasis basis(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const FockOp x = oscillator(static_cast<Oscillator>(i), false, basis);
            const FockOp yd = oscillator(static_cast<Oscillator>(j), true, basis);
            const Expr rhs = scalar_op(ExactComplex(i == j ? 1 : 0));
            const auto r = compare_on_guarded(basis, commutator<ExactComplex>(x, yd), rhs);
            CHECK(r.holds);
            CHECK(r.states_checked > 0);
        }
    }
}

TEST_CASE("second quantization is a homomorphism of gl(4)")
{
    // phi~ X phi with phi = (a, b*), phi~ = (a*, -b): brackets [phi, phi~] = 1,
    // so without normal ordering it holds for every complex X.
    const FockBasis basis(4);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 6; ++t) {
        const Mat4 x = random_matrix(rng), y = random_matrix(rng);
        const FockOp xh = second_quantize(x, Picture::dirac, false, basis);
        const FockOp yh = second_quantize(y, Picture::dirac, false, basis);
        const FockOp ch = second_quantize(commutator(x, y), Picture::dirac, false, basis);
        CHECK(compare_on_guarded(basis, commutator<ExactComplex>(xh, yh), ch).holds);
    }
}

TEST_CASE("normal ordering drops exactly the vacuum value")
{
    const FockBasis basis(3);
    std::mt19937_64 rng(3);
    const Mat4 x = random_matrix(rng);
    const FockOp full = second_quantize(x, Picture::dirac, false, basis);
    const FockOp no = second_quantize(x, Picture::dirac, true, basis);
    const ExactVector vac = ExactVector::vacuum();
    CHECK(full.apply(vac).coefficient({0, 0, 0, 0}) == vacuum_value(x));
    CHECK(no.apply(vac).coefficient({0, 0, 0, 0}) == ExactComplex(0));
    CHECK(vacuum_value(Mat4::identity()) == ExactComplex(-2));
}

TEST_CASE("hamiltonian and helicity are diagonal with the expected values")
{
    const FockBasis basis(5);
    const FockOp h = conformal_hamiltonian(basis);
    const FockOp hel = helicity(basis);
    CHECK(hel == second_quantize(Mat4::identity(), Picture::dirac, true, basis));
    for (const auto& n : basis.guarded(0)) {
        const ExactVector v = ExactVector::basis_state(n);
        CHECK(h.apply(v) == ExactComplex(conformal_energy(n)) * v);
        CHECK(hel.apply(v) == ExactComplex(helicity_of(n)) * v);
    }
}

TEST_CASE("zero-helicity spectrum matches a direct count")
{
    const FockBasis basis(8);
    // count states with N_a = N_b = n - 1 by listing them
    std::map<Rational, std::size_t> count;
    for (const auto& n : all_states(14))
        if (n[0] + n[1] == n[2] + n[3])
            ++count[conformal_energy(n)];
    const auto spec = hamiltonian_spectrum(basis, 0);
    REQUIRE(spec.size() == 8);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const long n = static_cast<long>(i) + 1;
        CHECK(spec[i].eigenvalue == n);
        CHECK(spec[i].multiplicity == static_cast<std::size_t>(n * n));
        CHECK(count[spec[i].eigenvalue] == spec[i].multiplicity);
    }
}

TEST_CASE("full spectrum is the half-integers from 1 with multiplicity C(m+3, 3)")
{
    const FockBasis basis(4);
    const auto spec = hamiltonian_spectrum(basis, std::nullopt);
    REQUIRE(spec.size() == 7);
    for (std::size_t m = 0; m < spec.size(); ++m) {
        CHECK(spec[m].eigenvalue == 1 + make_rational(static_cast<long>(m), 2));
        CHECK(spec[m].multiplicity == binomial(static_cast<long>(m) + 3, 3).get_ui());
    }
    const auto plus3 = hamiltonian_spectrum(basis, 3);
    REQUIRE_FALSE(plus3.empty());
    CHECK(plus3.front().eigenvalue == Rational(5, 2));
}

TEST_CASE("momentum: vacuum energy, mass shell and commutativity")
{
    const FockBasis basis(4);
    const ExactVector vac = ExactVector::vacuum();
    const FockOp p0 = momentum(0, basis);
    CHECK(inner_product(vac, p0.apply(vac)) == ExactComplex(1));
    CHECK(std::abs(momentum_sign()) == 1);
    std::vector<std::pair<ExactComplex, Expr>> sq;
    sq.push_back({ExactComplex(-1), product<ExactComplex>(p0, p0)});
    for (int j = 1; j < 4; ++j) {
        const FockOp pj = momentum(j, basis);
        sq.push_back({ExactComplex(1), product<ExactComplex>(pj, pj)});
        CHECK(compare_on_guarded(basis, commutator<ExactComplex>(p0, pj), scalar_op(ExactComplex(0))).holds);
    }
    CHECK(compare_on_guarded(basis, linear_combination(sq), scalar_op(ExactComplex(0))).holds);

    // <psi|p0|psi> >= 0 on a few random states inside the guard band
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-5, 5);
    const auto states = basis.guarded(p0.shift());
    for (int t = 0; t < 20; ++t) {
        ExactVector psi;
        for (int k = 0; k < 6; ++k)
            psi.add(states[rng() % states.size()], ExactComplex(Rational(d(rng)), make_rational(d(rng), 3)));
        const ExactComplex e = inner_product(psi, p0.apply(psi));
        CHECK(e.is_real());
        CHECK(sgn(e.re()) >= 0);
    }
}

TEST_CASE("lowest weight vectors are killed by the lowering generators")
{
    const FockBasis basis(5);
    const Chevalley c = chevalley_generators(basis);
    for (int h = -4; h <= 4; ++h) {
        CAPTURE(h);
        const LowestWeight lw = lowest_weight_vector(h, basis);
        CHECK(lw.normalization_sq == Rational(1) / Rational(factorial(static_cast<unsigned>(std::abs(h)))));
        const Occupation expect = h >= 0 ? Occupation{0, h, 0, 0} : Occupation{0, 0, -h, 0};
        CHECK(lw.vector == ExactVector::basis_state(expect));
        for (const auto& f : c.f)
            CHECK(f.apply(lw.vector).is_zero());
        // unit norm after normalization
        CHECK(ExactComplex(lw.normalization_sq) * inner_product(lw.vector, lw.vector) == ExactComplex(1));
    }
    CHECK_THROWS_AS(lowest_weight_vector(9, basis), DomainError);
}

TEST_CASE("chevalley generators")
{
    const FockBasis basis(4);
    const Chevalley c = chevalley_generators(basis);
    for (int i = 0; i < 3; ++i)
        CHECK(compare_on_guarded(basis, commutator<ExactComplex>(c.e[i], c.f[i]), c.h[i]).holds);
    CHECK(conformal_hamiltonian(basis) == ExactComplex(Rational(1, 2)) * chevalley_hc(c));
    CHECK(chevalley_htheta(c) == c.h[0] + c.h[1] + c.h[2]);
}

TEST_CASE("ladder reports pass at a small cutoff")
{
    const FockBasis basis(4);
    CHECK(ccr_checks(basis).passed());
    CHECK(chevalley_checks(basis).passed());
    CHECK(nilpotent_orbit_identities(basis).passed());
    CHECK(homomorphism_checks(basis).passed());
    CHECK(picture_independence_checks(basis).passed());
    CHECK(helicity_centrality_checks(basis).passed());
    CHECK(momentum_checks(basis, 1, 10).passed());
    CHECK(lowest_weight_checks(basis, 4).passed());
    CHECK(spectrum_checks(basis).passed());
}
