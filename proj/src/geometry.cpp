// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/geometry.hpp"

#include "conformal_ladder/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace conformal_ladder {

namespace {

constexpr cplx kI{0.0, 1.0};

bool negligible(cplx w, double scale)
{
    return std::abs(w) <= 1e-14 * scale;
}

} // namespace

cplx CPoint4::square() const
{
    cplx s = 0;
    for (const auto& c : z)
        s += c * c;
    return s;
}

double CPoint4::hermitian_square() const
{
    double s = 0;
    for (const auto& c : z)
        s += std::norm(c);
    return s;
}

CPoint4 CPoint4::conj() const
{
    CPoint4 out;
    for (std::size_t i = 0; i < 4; ++i)
        out.z[i] = std::conj(z[i]);
    return out;
}

bool CPoint4::finite() const
{
    return std::all_of(z.begin(), z.end(), [](cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

CPoint4 operator-(const CPoint4& a, const CPoint4& b)
{
    CPoint4 out;
    for (std::size_t i = 0; i < 4; ++i)
        out.z[i] = a.z[i] - b.z[i];
    return out;
}

CPoint4 operator*(cplx s, const CPoint4& a)
{
    CPoint4 out;
    for (std::size_t i = 0; i < 4; ++i)
        out.z[i] = s * a.z[i];
    return out;
}

cplx MinkowskiPoint::square() const
{
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x0 * x0;
}

MinkowskiPoint operator-(const MinkowskiPoint& a, const MinkowskiPoint& b)
{
    return {a.x0 - b.x0, {a.x[0] - b.x[0], a.x[1] - b.x[1], a.x[2] - b.x[2]}};
}

MinkowskiPoint operator+(const MinkowskiPoint& a, const MinkowskiPoint& b)
{
    return {a.x0 + b.x0, {a.x[0] + b.x[0], a.x[1] + b.x[1], a.x[2] + b.x[2]}};
}

double distance(const CPoint4& a, const CPoint4& b)
{
    double d = 0;
    for (std::size_t i = 0; i < 4; ++i)
        d = std::max(d, std::abs(a.z[i] - b.z[i]));
    return d;
}

double distance(const MinkowskiPoint& a, const MinkowskiPoint& b)
{
    double d = std::abs(a.x0 - b.x0);
    for (std::size_t i = 0; i < 3; ++i)
        d = std::max(d, std::abs(a.x[i] - b.x[i]));
    return d;
}

cplx omega(const MinkowskiPoint& x)
{
    return (1.0 + x.square()) / 2.0 - kI * x.x0;
}

cplx omega(const CPoint4& z)
{
    return (1.0 + z.square()) / 2.0 + z.z[3];
}

CPoint4 gc_map(const MinkowskiPoint& x)
{
    const cplx w = omega(x);
    const cplx x2 = x.square();
    if (negligible(w, 1.0 + std::abs(x2)))
        throw DomainError("omega(x) = 0: the point lies on the cone at infinity");
    CPoint4 z;
    for (std::size_t j = 0; j < 3; ++j)
        z.z[j] = x.x[j] / w;
    z.z[3] = (1.0 - x2) / (2.0 * w);
    return z;
}

MinkowskiPoint gc_inverse(const CPoint4& z)
{
    const cplx w = omega(z);
    const cplx z2 = z.square();
    if (negligible(w, 1.0 + std::abs(z2)))
        throw DomainError("omega(z) = 0: the image lies on the cone at infinity");
    MinkowskiPoint x;
    for (std::size_t j = 0; j < 3; ++j)
        x.x[j] = z.z[j] / w;
    const cplx x4 = (1.0 - z2) / (2.0 * w);
    x.x0 = kI * x4;
    return x;
}

double QuadricPoint::quadric_residual() const
{
    return std::abs(xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3] - xi[0] * xi[0] - xi_plus * xi_minus);
}

double QuadricPoint::pseudo_orthogonal_residual() const
{
    const double m1 = xi_m1_upper();
    const double x4 = xi_4();
    return std::abs(m1 * m1 - x4 * x4 - xi_plus * xi_minus);
}

CPoint4 QuadricPoint::z_chart() const
{
    const double xi0_lower = -xi[0];
    const double xim1_lower = -xi_m1_upper();
    const cplx denom = kI * xi0_lower - xim1_lower;
    if (std::abs(denom) == 0.0)
        throw DomainError("quadric point on the cone at infinity of the z chart");
    return {{xi[1] / denom, xi[2] / denom, xi[3] / denom, xi_4() / denom}};
}

QuadricPoint embed_quadric(const std::array<double, 4>& x, double xi_plus)
{
    if (xi_plus == 0.0)
        throw DomainError("xi_+ must be nonzero");
    QuadricPoint q;
    for (std::size_t m = 0; m < 4; ++m)
        q.xi[m] = xi_plus * x[m];
    q.xi_plus = xi_plus;
    q.xi_minus = xi_plus * (x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - x[0] * x[0]);
    return q;
}

double pairing(const QuadricPoint& a, const QuadricPoint& b)
{
    return a.xi[1] * b.xi[1] + a.xi[2] * b.xi[2] + a.xi[3] * b.xi[3] - a.xi[0] * b.xi[0] -
           (a.xi_plus * b.xi_minus + a.xi_minus * b.xi_plus) / 2;
}

std::string to_string(TubeClass c)
{
    switch (c) {
    case TubeClass::forward_tube:
        return "forward_tube";
    case TubeClass::backward_tube:
        return "backward_tube";
    case TubeClass::compact_minkowski:
        return "compact_minkowski";
    case TubeClass::outside:
        return "outside";
    }
    return "outside";
}

namespace {

bool in_forward_tube(const CPoint4& z)
{
    const double a = std::abs(z.square());
    return a < 1.0 && 2.0 * z.hermitian_square() < 1.0 + a * a;
}

} // namespace

TubeClass tube_classify(const CPoint4& z, double band)
{
    const double a = std::abs(z.square());
    if (std::abs(a - 1.0) <= band && std::abs(z.hermitian_square() - 1.0) <= band)
        return TubeClass::compact_minkowski;
    if (in_forward_tube(z))
        return TubeClass::forward_tube;
    const cplx zb2 = z.conj().square();
    if (std::abs(zb2) > 0.0 && in_forward_tube(star_involution(z)))
        return TubeClass::backward_tube;
    return TubeClass::outside;
}

CPoint4 star_involution(const CPoint4& z)
{
    const CPoint4 zb = z.conj();
    const cplx zb2 = zb.square();
    if (std::abs(zb2) == 0.0)
        throw DomainError("star involution undefined: conj(z)^2 = 0");
    return (1.0 / zb2) * zb;
}

ScaledPoint scaled_map(const MinkowskiPoint& x, double radius)
{
    if (!(radius > 0.0))
        throw DomainError("radius must be positive");
    const cplx x2 = x.square();
    const cplx two_omega = 1.0 + x2 / (4.0 * radius * radius) - kI * x.x0 / radius;
    if (negligible(two_omega, 1.0 + std::abs(x2) / (radius * radius)))
        throw DomainError("scaled map denominator vanishes");
    ScaledPoint s;
    for (std::size_t j = 0; j < 3; ++j)
        s.z.z[j] = x.x[j] / two_omega;
    s.z4_minus_r = (kI * x.x0 - x2 / (2.0 * radius)) / two_omega;
    s.z.z[3] = radius + s.z4_minus_r;
    return s;
}

cplx interval_ratio(const MinkowskiPoint& x, const MinkowskiPoint& y)
{
    const cplx d2 = (x - y).square();
    if (std::abs(d2) == 0.0)
        throw DomainError("interval ratio undefined for lightlike separation");
    return (gc_map(x) - gc_map(y)).square() * omega(x) * omega(y) / d2;
}

namespace {

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}
    double uniform(double a, double b)
    {
        // 53-bit mantissa from the raw engine output.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }
    MinkowskiPoint real_point(double scale)
    {
        return {uniform(-scale, scale), {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}};
    }
    /// Imaginary part strictly inside the forward cone.
    MinkowskiPoint forward_direction(double scale)
    {
        std::array<double, 3> y{uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
        const double len = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
        return {len + uniform(0.05, scale), {y[0], y[1], y[2]}};
    }
    CPoint4 compact_point()
    {
        std::array<double, 4> u{};
        double n = 0;
        do {
            for (auto& c : u)
                c = uniform(-1, 1);
            n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]);
        } while (n < 0.1);
        const double t = uniform(0, 1);
        const cplx phase = std::polar(1.0, 2 * std::numbers::pi * t);
        CPoint4 z;
        for (std::size_t i = 0; i < 4; ++i)
            z.z[i] = phase * (u[i] / n);
        return z;
    }
};

MinkowskiPoint complexify(const MinkowskiPoint& re, const MinkowskiPoint& im)
{
    return {re.x0.real() + kI * im.x0.real(),
            {re.x[0].real() + kI * im.x[0].real(), re.x[1].real() + kI * im.x[1].real(),
             re.x[2].real() + kI * im.x[2].real()}};
}

double norm_inf(const MinkowskiPoint& x)
{
    return distance(x, MinkowskiPoint{});
}

} // namespace

Report geometry_checks(std::uint64_t seed)
{
    Report rep;
    Sampler s(seed);

    {
        double worst = 0;
        double recip = 0;
        for (int k = 0; k < 1000; ++k) {
            MinkowskiPoint x = s.real_point(2.0);
            if (k % 2 == 1)
                x = complexify(x, s.real_point(0.5));
            const cplx w = omega(x);
            if (std::abs(w) < 0.1) {
                --k;
                continue;
            }
            const CPoint4 z = gc_map(x);
            worst = std::max(worst, distance(gc_inverse(z), x) / std::max(1.0, norm_inf(x)));
            recip = std::max(recip, std::abs(omega(z) * w - 1.0));
        }
        rep.add_numeric("geometry/round-trip", "g_c^{-1}(g_c(x)) = x", worst, 1e-12,
                        "1000 seeded points, half complexified, relative to max(1, |x|)");
        rep.add_numeric("geometry/omega-reciprocal", "omega(z(x)) omega(x) = 1", recip, 1e-12, "same 1000 points");
    }

    {
        double on_mbar = 0;
        bool compact = true;
        double interval = 0;
        double chart = 0;
        double pair = 0;
        double quad = 0;
        for (int k = 0; k < 200; ++k) {
            const MinkowskiPoint x = s.real_point(3.0);
            const CPoint4 z = gc_map(x);
            const double z2 = std::abs(z.square());
            const double zz = z.hermitian_square();
            on_mbar = std::max({on_mbar, std::abs(z2 * z2 - 1.0), std::abs(zz * zz - 1.0)});
            compact = compact && tube_classify(z) == TubeClass::compact_minkowski;

            const MinkowskiPoint y = s.real_point(3.0);
            const cplx d2 = (x - y).square();
            if (std::abs(d2) > 1e-3)
                interval = std::max(interval, std::abs(interval_ratio(x, y) - 1.0));

            const std::array<double, 4> xr{x.x0.real(), x.x[0].real(), x.x[1].real(), x.x[2].real()};
            const std::array<double, 4> yr{y.x0.real(), y.x[0].real(), y.x[1].real(), y.x[2].real()};
            const QuadricPoint qx = embed_quadric(xr, 1.0);
            const QuadricPoint qy = embed_quadric(yr, 1.0);
            QuadricPoint diff;
            for (std::size_t m = 0; m < 4; ++m)
                diff.xi[m] = qx.xi[m] - qy.xi[m];
            diff.xi_plus = qx.xi_plus - qy.xi_plus;
            diff.xi_minus = qx.xi_minus - qy.xi_minus;
            pair = std::max(pair, std::abs(pairing(diff, diff) - d2.real()) / std::max(1.0, std::abs(d2)));
            const QuadricPoint qs = embed_quadric(xr, s.uniform(0.5, 2.0));
            quad = std::max({quad, std::abs(pairing(qs, qs)), qs.quadric_residual(), qs.pseudo_orthogonal_residual()});
            chart = std::max(chart, distance(qs.z_chart(), z));
        }
        rep.add_numeric("geometry/real-on-compact", "|z^2 zbar^2 - 1| and |(z zbar)^2 - 1| for real x", on_mbar, 1e-12,
                        "200 seeded real points");
        rep.add_exact("geometry/real-classified-compact", "real Minkowski points classify as compactified Minkowski space",
                      compact);
        rep.add_numeric("geometry/quadric-pairing", "(xi_x - eta_y)^2 = (x - y)^2 at xi_+ = eta_+ = 1", pair, 1e-12);
        rep.add_numeric("geometry/quadric-isotropic", "<xi_x, xi_x> = 0 and both quadric charts agree", quad, 1e-10);
        rep.add_numeric("geometry/z-chart", "xi_a / (i xi_0 - xi_{-1}) = g_c(x)", chart, 1e-12);
        rep.add_numeric("geometry/finite-interval", "(z(x) - z(y))^2 omega(x) omega(y) = (x - y)^2", interval, 1e-10);
    }

    {
        bool forward = true;
        bool swapped = true;
        double involution = 0;
        for (int k = 0; k < 100; ++k) {
            const MinkowskiPoint x = complexify(s.real_point(2.0), s.forward_direction(1.5));
            const CPoint4 z = gc_map(x);
            forward = forward && tube_classify(z) == TubeClass::forward_tube;
            const CPoint4 zs = star_involution(z);
            swapped = swapped && tube_classify(zs) == TubeClass::backward_tube;
            involution = std::max(involution, distance(star_involution(zs), z) / std::max(1.0, std::sqrt(z.hermitian_square())));
            // Complex conjugation in x maps the forward tube to the backward one.
            const MinkowskiPoint xc{std::conj(x.x0), {std::conj(x.x[0]), std::conj(x.x[1]), std::conj(x.x[2])}};
            swapped = swapped && tube_classify(gc_map(xc)) == TubeClass::backward_tube &&
                      tube_classify(star_involution(gc_map(xc))) == TubeClass::forward_tube;
        }
        rep.add_exact("geometry/forward-tube", "g_c maps the forward tube into T_+", forward, "100 seeded samples");
        rep.add_exact("geometry/star-swaps-tubes", "T_+* = T_- and T_-* = T_+", swapped, "100 seeded samples");
        rep.add_numeric("geometry/star-involutive", "(z*)* = z", involution, 1e-12);
    }

    {
        double fixed = 0;
        bool compact = true;
        for (int k = 0; k < 100; ++k) {
            const CPoint4 z = s.compact_point();
            fixed = std::max(fixed, distance(star_involution(z), z));
            compact = compact && tube_classify(z) == TubeClass::compact_minkowski &&
                      tube_classify(star_involution(z)) == TubeClass::compact_minkowski;
        }
        rep.add_numeric("geometry/star-fixes-compact", "z* = z on e^{2 pi i t} u", fixed, 1e-12, "100 seeded samples");
        rep.add_exact("geometry/compact-classified", "e^{2 pi i t} u classifies as compactified Minkowski space", compact);
    }

    {
        double routes = 0;
        for (int k = 0; k < 100; ++k) {
            const MinkowskiPoint x = s.real_point(3.0);
            const double r = s.uniform(1.0, 50.0);
            const ScaledPoint sp = scaled_map(x, r);
            const MinkowskiPoint xs{x.x0 / (2 * r), {x.x[0] / (2 * r), x.x[1] / (2 * r), x.x[2] / (2 * r)}};
            const CPoint4 g = gc_map(xs);
            for (std::size_t j = 0; j < 3; ++j)
                routes = std::max(routes, std::abs(sp.z.z[j] - r * g.z[j]));
            routes = std::max(routes, std::abs(sp.z4_minus_r - (r * g.z[3] - r)) / r);
        }
        rep.add_numeric("geometry/scaled-routes", "z(x, R) = R g_c(x / 2R)", routes, 1e-10, "100 seeded (x, R)");

        const MinkowskiPoint x{0.7, {1.0, -2.0, 0.5}};
        const ScaledPoint far = scaled_map(x, 1e6);
        double lim = std::abs(far.z4_minus_r - kI * x.x0) / std::abs(x.x0);
        for (std::size_t j = 0; j < 3; ++j)
            lim = std::max(lim, std::abs(far.z.z[j] - x.x[j]) / std::abs(x.x[j]));
        rep.add_numeric("geometry/scaled-limit", "z(x, R) -> x and z4 - R -> i x^0 as R -> infinity", lim, 1e-5,
                        "R = 1e6, relative");
    }
    return rep;
}

} // namespace conformal_ladder
