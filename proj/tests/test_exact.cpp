// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/exact.hpp"
#include "conformal_ladder/mat4.hpp"
#include "conformal_ladder/poly4.hpp"
#include "conformal_ladder/qseries.hpp"

using namespace conformal_ladder;

TEST_CASE("rationals parse to lowest terms")
{
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK(to_string(parse_rational("12/4")) == "3");
    CHECK(make_rational(2, -4) == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == Integer("15511210043330985984000000"));
    // Pascal rows as the oracle.
    std::vector<Integer> row{1};
    for (long n = 1; n <= 30; ++n) {
        std::vector<Integer> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k];
            next[k + 1] += row[k];
        }
        row = next;
        for (long k = 0; k <= n; ++k)
            REQUIRE(binomial(n, k) == row[static_cast<std::size_t>(k)]);
    }
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("exact complex field operations")
{
    const ExactComplex i = ExactComplex::i();
    CHECK(i * i == ExactComplex(-1));
    const ExactComplex a(Rational(1), Rational(2));
    const ExactComplex b(Rational(3), Rational(-4));
    // (1+2i)/(3-4i) = (1+2i)(3+4i)/25 = (-5+10i)/25
    CHECK(a / b == ExactComplex(Rational(-1, 5), Rational(2, 5)));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == ExactComplex(Rational(1), Rational(-2)));
    CHECK(a.norm_sq() == 5);
    CHECK(to_string(a) == "1+2i");
    CHECK(to_string(-i) == "-i");
    CHECK(to_string(ExactComplex(Rational(1, 2))) == "1/2");
}

TEST_CASE("matrix rank, nullspace and solve")
{
    // rows (1 2 3), (2 4 6), (1 0 1): rank 2, kernel spanned by (-1, -1, 1)
    RationalMatrix m(3, 3);
    const long v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            m(r, c) = v[r][c];
    CHECK(m.rank() == 2);
    const auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    for (std::size_t r = 0; r < 3; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < 3; ++c)
            s += m(r, c) * ns[0][c];
        CHECK(s == 0);
    }
    CHECK(ns[0][0] == -ns[0][2]);
    CHECK(ns[0][1] == -ns[0][2]);

    std::vector<Rational> x;
    CHECK(m.solve({Rational(6), Rational(12), Rational(2)}, x));
    for (std::size_t r = 0; r < 3; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < 3; ++c)
            s += m(r, c) * x[c];
        CHECK(s == (r == 0 ? 6 : r == 1 ? 12 : 2));
    }
    CHECK_FALSE(m.solve({Rational(1), Rational(1), Rational(0)}, x));
}

TEST_CASE("geometric q-series")
{
    const std::size_t N = 30;
    const QSeries one_minus_q = QSeries::one_minus_qn_pow(1, 1, N);
    const QSeries geo = one_minus_q.inverse();
    for (std::size_t n = 0; n <= N; ++n)
        CHECK(geo[n] == 1);
    // 1/(1-q)^2 = sum (n+1) q^n
    const QSeries sq = one_minus_q.pow(-2);
    for (std::size_t n = 0; n <= N; ++n)
        CHECK(sq[n] == Rational(static_cast<long>(n + 1)));
    CHECK(geo * geo == sq);
    CHECK(qseries_mul(geo, one_minus_q) == QSeries::constant(1, N));
    // q d/dq ln 1/(1-q) = q/(1-q)
    const QSeries ld = qseries_log_derivative(geo);
    CHECK(ld[0] == 0);
    for (std::size_t n = 1; n <= N; ++n)
        CHECK(ld[n] == 1);
    CHECK(geo.derivative_q()[7] == 7);
}

TEST_CASE("one_minus_qn_pow matches repeated multiplication")
{
    const std::size_t N = 24;
    QSeries base = QSeries::constant(1, N) - QSeries::monomial(3, 1, N);
    QSeries prod = QSeries::constant(1, N);
    for (int k = 0; k < 4; ++k)
        prod = prod * base;
    CHECK(QSeries::one_minus_qn_pow(3, 4, N) == prod);
    CHECK(QSeries::one_minus_qn_pow(3, -4, N) * prod == QSeries::constant(1, N));
}

TEST_CASE("q-series order mismatch is rejected")
{
    CHECK_THROWS(QSeries(5) + QSeries(6));
    CHECK_THROWS(QSeries(5).inverse());
}

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(10) == Rational(5, 66));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    // B_2k = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^2k
    for (long k = 1; k <= 10; ++k) {
        double zeta = 0;
        const double s = 2.0 * k;
        for (int n = 1; n < 2000; ++n)
            zeta += std::pow(n, -s);
        zeta += std::pow(2000.0, 1 - s) / (s - 1) + std::pow(2000.0, -s) / 2; // Euler-Maclaurin tail
        const double expect = (k % 2 ? 2.0 : -2.0) * std::tgamma(2.0 * k + 1) * zeta /
                              std::pow(2 * std::numbers::pi, 2.0 * k);
        CHECK(bernoulli(2 * k).get_d() == doctest::Approx(expect).epsilon(1e-9));
    }
    CHECK_THROWS_AS(bernoulli(3), DomainError);
    CHECK_THROWS_AS(bernoulli(0), DomainError);
}

TEST_CASE("poly4 calculus")
{
    const Poly4 z1 = Poly4::variable(0), z2 = Poly4::variable(1), z3 = Poly4::variable(2), z4 = Poly4::variable(3);
    const Poly4 r2 = z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4;
    CHECK(laplacian(r2) == Poly4::constant(8));
    CHECK(laplacian(z1 * z1 - z4 * z4).is_zero());
    CHECK(laplacian(z1 * z2 * z3 * z4).is_zero());
    // Delta r^4 = 2*4*(4+2) r^2 in four dimensions
    CHECK(laplacian(r2.pow(2)) == ExactComplex(24) * r2);
    CHECK(r2.pow(3).homogeneous_degree() == 6);
    CHECK_FALSE((r2 + z1).homogeneous_degree().has_value());
    CHECK(r2.derivative(2) == ExactComplex(2) * z3);
    CHECK(r2.coefficient({0, 0, 0, 2}) == ExactComplex(1));
    const std::array<std::complex<double>, 4> p{{{1, 0}, {0, 1}, {2, 0}, {0, 0}}};
    CHECK(std::abs(r2.evaluate(p) - std::complex<double>(4, 0)) < 1e-15);
    CHECK(to_string(Poly4()) == "0");
}

TEST_CASE("quaternion units multiply like i, j, k")
{
    const Mat2 q1 = quaternion_unit(1), q2 = quaternion_unit(2), q3 = quaternion_unit(3), q4 = quaternion_unit(4);
    const Mat2 minus_one = ExactComplex(-1) * Mat2::identity();
    CHECK(q4 == Mat2::identity());
    CHECK(q1 * q1 == minus_one);
    CHECK(q2 * q2 == minus_one);
    CHECK(q3 * q3 == minus_one);
    CHECK(q1 * q2 == q3);
    CHECK(q2 * q3 == q1);
    CHECK(q3 * q1 == q2);
}

TEST_CASE("mat4 kron, adjoint and trace")
{
    const Mat4 s1s3 = Mat4::kron(Mat2::sigma(1), Mat2::sigma(3));
    // sigma1 (x) sigma3 has entries at (0,2)=1, (1,3)=-1, (2,0)=1, (3,1)=-1
    CHECK(s1s3(0, 2) == ExactComplex(1));
    CHECK(s1s3(1, 3) == ExactComplex(-1));
    CHECK(s1s3(2, 0) == ExactComplex(1));
    CHECK(s1s3(3, 1) == ExactComplex(-1));
    CHECK(s1s3 * s1s3 == Mat4::identity());
    CHECK(s1s3.trace() == ExactComplex(0));
    const Mat4 s2 = Mat4::kron(Mat2::sigma(2), Mat2::identity());
    CHECK(s2.adjoint() == s2);
    CHECK(anticommutator(s1s3, s2).is_zero());
    CHECK(commutator(s1s3, s1s3).is_zero());
    CHECK(Mat4::identity().trace() == ExactComplex(4));
}
