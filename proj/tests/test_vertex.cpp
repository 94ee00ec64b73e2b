// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/vertex.hpp"

using namespace conformal_ladder;

namespace {

const cplx kI{0, 1};

CPoint4 point(cplx a, cplx b, cplx c, cplx d)
{
    CPoint4 z;
    z.z = {a, b, c, d};
    return z;
}

cplx det2(const CMat2& m) { return m[0] * m[3] - m[1] * m[2]; }

CMat2 mul2(const CMat2& a, const CMat2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// Chebyshev U_k(cos t) = sin((k+1)t) / sin t
double chebyshev_u(int k, double x)
{
    const double t = std::acos(x);
    return std::sin((k + 1) * t) / std::sin(t);
}

} // namespace

TEST_CASE("quaternion slash: det is z^2 and qz q*z = z^2")
{
    std::mt19937_64 g(1);
    std::normal_distribution<double> n;
    for (int t = 0; t < 50; ++t) {
        const CPoint4 z = point({n(g), n(g)}, {n(g), n(g)}, {n(g), n(g)}, {n(g), n(g)});
        const CMat2 q = quaternion_slash(z);
        CHECK(std::abs(det2(q) - z.square()) < 1e-12);
        const CMat2 p = mul2(q, quaternion_slash_conj(z));
        CHECK(std::abs(p[0] - z.square()) < 1e-12);
        CHECK(std::abs(p[3] - z.square()) < 1e-12);
        CHECK(std::abs(p[1]) < 1e-12);
        CHECK(std::abs(p[2]) < 1e-12);
    }
    // q_4 = 1, q_1 = -i sigma_1
    const CMat2 q1 = quaternion_slash(point(1, 0, 0, 0));
    CHECK(q1[1] == -kI);
    CHECK(q1[2] == -kI);
    CHECK(quaternion_slash(point(0, 0, 0, 1)) == CMat2{1, 0, 0, 1});
    CHECK(quaternion_identity_check().passed());
}

TEST_CASE("h_k printed forms")
{
    CHECK(harmonic_h_string(0) == "1");
    CHECK(harmonic_h_string(1) == "2 z4");
    CHECK(harmonic_h_string(2) == "3 z4^2 - zvec^2");
    CHECK(harmonic_h_string(3) == "4 z4^3 - 4 z4 zvec^2");
    // r^4 U_4(z4/r) = 5 z4^4 - 10 z4^2 zvec^2 + zvec^4
    CHECK(harmonic_h_string(4) == "5 z4^4 - 10 z4^2 zvec^2 + zvec^4");
    const auto c6 = harmonic_h_coefficients(6);
    REQUIRE(c6.size() == 4);
    CHECK(c6[0] == 7);
    CHECK(c6[1] == -35);
    CHECK(c6[2] == 21);
    CHECK(c6[3] == -1);
}

TEST_CASE("h_k is |z|^k U_k(z4/|z|) for real z")
{
    std::mt19937_64 g(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k <= 10; ++k) {
        const Poly4 h = harmonic_h(k, HarmonicMode::closed_form);
        for (int t = 0; t < 10; ++t) {
            const std::array<double, 4> z{u(g), u(g), u(g), u(g)};
            const double r = std::sqrt(z[0] * z[0] + z[1] * z[1] + z[2] * z[2] + z[3] * z[3]);
            const double expect = std::pow(r, k) * chebyshev_u(k, z[3] / r);
            const cplx got = h.evaluate({z[0], z[1], z[2], z[3]});
            CHECK(got.real() == doctest::Approx(expect).epsilon(1e-11));
            CHECK(std::abs(got.imag()) < 1e-14);
        }
    }
}

TEST_CASE("h_k routes agree and are harmonic")
{
    const FockBasis basis(9);
    for (int k = 0; k <= 8; ++k) {
        CAPTURE(k);
        const Poly4 closed = harmonic_h(k, HarmonicMode::closed_form);
        CHECK(harmonic_h(k, HarmonicMode::recurrence) == closed);
        CHECK(harmonic_h(k, HarmonicMode::fock, &basis) == closed);
        CHECK(laplacian(closed).is_zero());
        CHECK(closed.homogeneous_degree() == k);
    }
    CHECK_THROWS_AS(harmonic_h(9, HarmonicMode::fock, &basis), DomainError);
    CHECK_THROWS_AS(harmonic_h(2, HarmonicMode::fock, nullptr), DomainError);
}

TEST_CASE("harmonic polynomials of degree d number (d+1)^2")
{
    for (int d = 0; d <= 8; ++d)
        CHECK(harmonic_polynomial_count(d) == static_cast<std::size_t>((d + 1) * (d + 1)));
    const FockBasis basis(8);
    for (int n = 1; n <= 8; ++n)
        CHECK(eigenspace_dimension(n, basis) == static_cast<std::size_t>(n * n));
}

TEST_CASE("translations commute, square to zero and raise H by one")
{
    const FockBasis basis(5);
    const auto t = translation_generators(basis);
    const FockOp h = conformal_hamiltonian(basis);
    const Expr zero = scalar_op(ExactComplex(0));
    for (int a = 0; a < 4; ++a) {
        CHECK(compare_on_guarded(basis, commutator<ExactComplex>(h, t[a]), t[a]).holds);
        for (int b = 0; b < 4; ++b)
            CHECK(compare_on_guarded(basis, commutator<ExactComplex>(t[a], t[b]), zero).holds);
    }
    std::vector<std::pair<ExactComplex, Expr>> sq;
    for (int a = 0; a < 4; ++a)
        sq.push_back({ExactComplex(1), product<ExactComplex>(t[a], t[a])});
    CHECK(compare_on_guarded(basis, linear_combination(sq), zero).holds);
    CHECK(translation_checks(basis).passed());
}

TEST_CASE("vertex norm on the z4 axis is 1/(1 - r^2)^2")
{
    const FockBasis basis(20);
    for (double r : {0.0, 0.1, 0.3, 0.4}) {
        const NormResult n = vertex_norm_sq(point(0, 0, 0, r), basis);
        const double expect = 1.0 / ((1 - r * r) * (1 - r * r));
        CHECK(n.closed_form == doctest::Approx(expect).epsilon(1e-14));
        CHECK(n.series == doctest::Approx(expect).epsilon(1e-9));
        CHECK(n.relative_error < 1e-8);
    }
    const NormResult n = vertex_norm_sq(point(0.2, 0.1 * kI, 0, 0.1 + 0.2 * kI), basis);
    CHECK(n.relative_error < 1e-8);
    CHECK_THROWS_AS(vertex_norm_sq(point(0, 0, 0, 2), basis), DomainError);
    CHECK_THROWS_AS(vertex_norm_sq(point(0, 0, 0, 0.95), FockBasis(5)), ConvergenceError);
}

TEST_CASE("two-point series on the z4 axis is sum (k+1) t^k")
{
    const FockBasis basis(20);
    const CPoint4 z1 = point(0, 0, 0, 1);
    for (double t : {0.0, 0.1, 0.25}) {
        const TwoPointResult r = two_point_vev(z1, point(0, 0, 0, t), basis);
        double oracle = 0;
        for (int k = 0; k < 200; ++k)
            oracle += (k + 1) * std::pow(t, k);
        CHECK(std::abs(r.series - oracle) < 1e-8 * oracle);
        CHECK(std::abs(r.closed_form - 1.0 / ((1 - t) * (1 - t))) < 1e-12);
        // partial sums follow sum_{j<=k} (j+1) t^j
        double partial = 0;
        for (std::size_t k = 0; k < r.partial_sums.size(); ++k) {
            partial += (k + 1) * std::pow(t, k);
            CHECK(std::abs(r.partial_sums[k] - partial) < 1e-12 * partial);
        }
    }
    CHECK_THROWS_AS(two_point_vev(point(0, 0, 0, 1.3), point(0, 0, 0, 0.1), basis), DomainError);
    CHECK_THROWS_AS(two_point_vev(z1, point(0, 0, 0, 0.9), basis), ConvergenceError);
}

TEST_CASE("two-point normalization away from z1^2 = 1")
{
    const FockBasis basis(20);
    const CPoint4 z1 = point(0, 0, 0, 1.3), z2 = point(0.1, 0, 0.05 * kI, 0.1);
    const TwoPointResult u = two_point_series(z1, z2, basis, LoweringNormalization::unnormalized);
    const cplx d = z1[3] - z2[3];
    cplx diff2 = d * d;
    for (int j = 0; j < 3; ++j)
        diff2 += (z1[j] - z2[j]) * (z1[j] - z2[j]);
    CHECK(std::abs(u.series - z1.square() / diff2) < 1e-8 * std::abs(z1.square() / diff2));
    const TwoPointResult p = two_point_series(z1, z2, basis, LoweringNormalization::printed);
    CHECK(std::abs(p.series - 1.0 / diff2) > 1e-3 * std::abs(1.0 / diff2));
}

TEST_CASE("two-point conjugation law")
{
    std::mt19937_64 g(4);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int t = 0; t < 50; ++t) {
        const CPoint4 z1 = point({u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)});
        const CPoint4 z2 = point({u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)});
        CHECK(two_point_conjugation_residual(z1, z2) < 1e-10);
    }
}

TEST_CASE("vertex reports")
{
    CHECK(harmonic_checks(6).passed());
    const FockBasis basis(20);
    CHECK(norm_checks(basis).passed());
    const Report tp = two_point_checks(basis, 42);
    CHECK(tp.passed());
    CHECK(tp.at("vertex/two-point/printed-off-shell").passed);
}
