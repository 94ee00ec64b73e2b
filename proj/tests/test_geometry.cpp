// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>
#include <random>

#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/geometry.hpp"

using namespace conformal_ladder;

namespace {

const cplx kI{0, 1};

MinkowskiPoint real_point(double t, double a, double b, double c)
{
    MinkowskiPoint x;
    x.x0 = t;
    x.x = {a, b, c};
    return x;
}

CPoint4 point(cplx a, cplx b, cplx c, cplx d)
{
    CPoint4 z;
    z.z = {a, b, c, d};
    return z;
}

struct Rng {
    std::mt19937_64 g;
    std::uniform_real_distribution<double> u{-2.0, 2.0};
    explicit Rng(unsigned long seed) : g(seed) {}
    double operator()() { return u(g); }
};

} // namespace

TEST_CASE("origin maps to the unit point")
{
    const CPoint4 z = gc_map(MinkowskiPoint{});
    CHECK(distance(z, point(0, 0, 0, 1)) == 0.0);
    CHECK(omega(MinkowskiPoint{}) == cplx(0.5, 0));
    CHECK(tube_classify(z) == TubeClass::compact_minkowski);
}

TEST_CASE("real points: z^2 = conj(omega)/omega and unit hermitian norm")
{
    Rng r(1);
    for (int t = 0; t < 200; ++t) {
        const MinkowskiPoint x = real_point(r(), r(), r(), r());
        const CPoint4 z = gc_map(x);
        const cplx w = omega(x);
        CHECK(std::abs(z.square() - std::conj(w) / w) < 1e-13);
        CHECK(std::abs(z.hermitian_square() - 1.0) < 1e-13);
        CHECK(std::abs(omega(z) * w - 1.0) < 1e-12);
        CHECK(distance(gc_inverse(z), x) < 1e-12);
        CHECK(distance(star_involution(z), z) < 1e-12);
    }
}

TEST_CASE("omega of x^0 = -i vanishes, so g_c is undefined there")
{
    MinkowskiPoint x;
    x.x0 = -kI;
    CHECK(std::abs(omega(x)) < 1e-15);
    CHECK_THROWS_AS(gc_map(x), DomainError);
}

TEST_CASE("imaginary time shifts land in the forward and backward tubes")
{
    Rng r(2);
    for (int t = 0; t < 100; ++t) {
        MinkowskiPoint x = real_point(r(), r(), r(), r());
        const double s = 0.1 + std::abs(r());
        MinkowskiPoint fwd = x, bwd = x;
        fwd.x0 += kI * s;
        bwd.x0 -= kI * s;
        const CPoint4 zf = gc_map(fwd), zb = gc_map(bwd);
        CHECK(tube_classify(zf) == TubeClass::forward_tube);
        CHECK(tube_classify(zb) == TubeClass::backward_tube);
        CHECK(tube_classify(star_involution(zf)) == TubeClass::backward_tube);
        CHECK(distance(star_involution(star_involution(zf)), zf) < 1e-12);
    }
}

TEST_CASE("tube boundary cases")
{
    CHECK(tube_classify(point(0, 0, 0, 0)) == TubeClass::forward_tube);
    CHECK(tube_classify(point(0, 0, 0, 0.5)) == TubeClass::forward_tube);
    CHECK(tube_classify(point(0, 0, 0, 2.0)) == TubeClass::backward_tube);
    CHECK(tube_classify(point(0, 0, 0, 1.0)) == TubeClass::compact_minkowski);
    CHECK(tube_classify(point(0, 0, 0, std::exp(kI * 0.3))) == TubeClass::compact_minkowski);
    // 2 z.zbar < 1 + |z^2| holds here, 2 z.zbar < 1 + |z^2|^2 does not, and
    // the preimage has spacelike imaginary part.
    const CPoint4 z = point(0.7746, 0.3162 * kI, 0, 0);
    CHECK(2 * z.hermitian_square() < 1 + std::abs(z.square()));
    CHECK(tube_classify(z) != TubeClass::forward_tube);
    const MinkowskiPoint x = gc_inverse(z);
    double im_space = 0;
    for (const auto& c : x.x)
        im_space += c.imag() * c.imag();
    CHECK(x.x0.imag() * x.x0.imag() < im_space);
}

TEST_CASE("quadric embedding and pairing")
{
    Rng r(3);
    for (int t = 0; t < 100; ++t) {
        const std::array<double, 4> x{r(), r(), r(), r()}, y{r(), r(), r(), r()};
        const QuadricPoint xi = embed_quadric(x, 1.0), eta = embed_quadric(y, 1.0);
        const double d2 = -(x[0] - y[0]) * (x[0] - y[0]) + (x[1] - y[1]) * (x[1] - y[1]) +
                          (x[2] - y[2]) * (x[2] - y[2]) + (x[3] - y[3]) * (x[3] - y[3]);
        // null vectors: <xi - eta, xi - eta> = -2 <xi, eta>
        CHECK(pairing(xi, eta) == doctest::Approx(-d2 / 2).epsilon(1e-12));
        CHECK(std::abs(pairing(xi, xi)) < 1e-12);
        CHECK(std::abs(xi.quadric_residual()) < 1e-12);
        CHECK(std::abs(xi.pseudo_orthogonal_residual()) < 1e-12);
        const CPoint4 zc = embed_quadric(x, 2.5).z_chart();
        CHECK(distance(zc, gc_map(real_point(x[0], x[1], x[2], x[3]))) < 1e-12);
    }
    CHECK_THROWS_AS(embed_quadric({0, 0, 0, 0}, 0.0), DomainError);
}

TEST_CASE("interval ratio is one")
{
    Rng r(4);
    for (int t = 0; t < 50; ++t) {
        const MinkowskiPoint x = real_point(r(), r(), r(), r()), y = real_point(r(), r(), r(), r());
        CHECK(std::abs(interval_ratio(x, y) - 1.0) < 1e-10);
    }
    const MinkowskiPoint x = real_point(0, 0, 0, 0), y = real_point(1, 1, 0, 0);
    CHECK_THROWS_AS(interval_ratio(x, y), DomainError);
}

TEST_CASE("scaled chart tends to the identity for large radius")
{
    const MinkowskiPoint x = real_point(0.3, -0.2, 0.5, 0.1);
    const ScaledPoint s = scaled_map(x, 1e7);
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(s.z[j] - x.x[j]) < 1e-6);
    CHECK(std::abs(s.z4_minus_r - kI * x.x0) < 1e-6);
    // R g_c(x/2R) is the same point
    MinkowskiPoint half;
    half.x0 = x.x0 / 2.0;
    for (int j = 0; j < 3; ++j)
        half.x[j] = x.x[j] / 2.0;
    const ScaledPoint s1 = scaled_map(x, 1.0);
    CHECK(distance(s1.z, gc_map(half)) < 1e-14);
    CHECK_THROWS_AS(scaled_map(x, 0.0), DomainError);
    CHECK_THROWS_AS(scaled_map(x, -1.0), DomainError);
}

TEST_CASE("geometry report is seed-deterministic and passes")
{
    const Report a = geometry_checks(17), b = geometry_checks(17);
    CHECK(a.passed());
    REQUIRE(a.records().size() == b.records().size());
    for (std::size_t i = 0; i < a.records().size(); ++i) {
        CHECK(a.records()[i].id == b.records()[i].id);
        CHECK(a.records()[i].residual == b.records()[i].residual);
    }
    CHECK(to_string(TubeClass::forward_tube) == "forward_tube");
}
