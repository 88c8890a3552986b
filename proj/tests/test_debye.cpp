// Debye expansions: values against the contour-integral reference, the
// sector case splits of the bounds, continuation, and real enclosures.
#include "doctest.h"

#include "debyekit/coeffs.hpp"
#include "debyekit/debye.hpp"

#include <random>

using namespace dk;

namespace {

Real R(const char* s) { return Real(s); }

Cpx reference(Fn fn, const Polar& nu, const Real& x, int digits) {
    PrecisionContext c(digits);
    PrecisionGuard g(digits);
    return function_reference(fn, nu, x, c).value;
}

}  // namespace

TEST_CASE("oblique values against the reference") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    Real beta = pi() / 3, x = 1 / cos(beta);
    Polar nu{Real(10), Real(0)};
    auto h1 = hankel1_oblique(nu, beta, 5, ctx);
    auto h2 = hankel2_oblique(nu, beta, 5, ctx);
    auto j = besselj_oblique(nu, beta, 3, ctx);
    auto y = bessely_oblique(nu, beta, 3, ctx);
    Cpx r1 = reference(Fn::H1, nu, x, 40), r2 = reference(Fn::H2, nu, x, 40);
    CHECK(abs(h1.value - r1) <= h1.abs_bound);
    CHECK(abs(h2.value - r2) <= h2.abs_bound);
    CHECK(abs(j.value - (r1 + r2) / Real(2)) <= j.abs_bound);
    CHECK(abs(y.value - (r1 - r2) / Cpx(Real(0), Real(2))) <= y.abs_bound);
    // bounds are not vacuous
    CHECK(h1.abs_bound < abs(r1) * Real(1e-3));
    // H2 at real nu is the conjugate of H1
    CHECK(abs(h2.value - conj(h1.value)) <= eps_digits(38));
    REQUIRE(j.xi.has_value());
    CHECK(abs(*j.xi - Cpx(10 * (tan(beta) - beta) - pi() / 4)) <= eps_digits(38));
}

TEST_CASE("oblique values at complex order") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    Real beta = pi() / 4, x = 1 / cos(beta);
    for (double th : {-1.2, -0.5, 0.4, 1.5, 2.8}) {
        Polar nu{Real(12), Real(th)};
        Cpx r1 = reference(Fn::H1, nu, x, 30);
        for (int N : {2, 6}) {
            auto v = hankel1_oblique(nu, beta, N, ctx);
            CHECK(abs(v.value - r1) <= v.abs_bound);
        }
    }
    for (double th : {-1.4, -0.6, 0.9}) {
        Polar nu{Real(12), Real(th)};
        Cpx r1 = reference(Fn::H1, nu, x, 30), r2 = reference(Fn::H2, nu, x, 30);
        auto j = besselj_oblique(nu, beta, 3, ctx);
        auto y = bessely_oblique(nu, beta, 3, ctx);
        CHECK(abs(j.value - (r1 + r2) / Real(2)) <= j.abs_bound);
        CHECK(abs(y.value - (r1 - r2) / Cpx(Real(0), Real(2))) <= y.abs_bound);
    }
}

TEST_CASE("turning point values against the reference") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    Polar nu{Real(8), Real(0)};
    Cpx r1 = reference(Fn::H1, nu, Real(1), 30), r2 = conj(r1);
    auto h1 = hankel1_turning(nu, 4, ctx);
    CHECK(abs(h1.value - r1) <= h1.abs_bound);
    CHECK(h1.abs_bound < abs(r1) * Real(1e-3));
    for (int N = 0; N <= 8; ++N) {
        auto j = besselj_turning(nu, N, ctx);
        auto y = bessely_turning(nu, N, ctx);
        CHECK(abs(j.value - (r1 + r2) / Real(2)) <= j.abs_bound);
        CHECK(abs(y.value - (r1 - r2) / Cpx(Real(0), Real(2))) <= y.abs_bound);
    }
    Polar nc{Real(9), Real(-1.3)};
    Cpx c1 = reference(Fn::H1, nc, Real(1), 30), c2 = reference(Fn::H2, nc, Real(1), 30);
    for (int N = 0; N <= 6; ++N) {
        auto a = hankel1_turning(nc, N, ctx);
        auto b = hankel2_turning(nc, N, ctx);
        CHECK(abs(a.value - c1) <= a.abs_bound);
        CHECK(abs(b.value - c2) <= b.abs_bound);
    }
}

TEST_CASE("empty sum and the case splits") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    Real beta = pi() / 3;
    Polar nu{Real(10), Real(0)};
    auto z = hankel1_oblique(nu, beta, 0, ctx);
    CHECK(abs(z.value) == 0);
    Real pref = 1 / sqrt(Real(10) * pi() * tan(beta) / 2);
    CHECK(abs(z.abs_bound - pref) <= eps_digits(28));

    // theta = 0: the plain factor is exactly 1
    auto v = hankel1_oblique(nu, beta, 5, ctx);
    Real want = pref * abs(u_at_beta(5, beta, ctx)) / pow(Real(10), 5);
    CHECK(v.bound_rule == "hankel-sector");
    CHECK(abs(v.abs_bound - want) <= want * Real(1e-20));

    // H2 at theta = -pi/4 sits in its central sector
    Polar nm{Real(10), -pi() / 4};
    auto w = hankel2_oblique(nm, beta, 5, ctx);
    Real pw = abs(Cpx(1) / (nm.pow(Real(1) / 2) * sqrt(pi() * tan(beta) / 2)) *
                  exp(Cpx(Real(0), Real(-1)) * nm.value() * (tan(beta) - beta)));
    CHECK(w.bound_rule == "hankel-sector");
    CHECK(abs(w.abs_bound - pw * abs(u_at_beta(5, beta, ctx)) / pow(Real(10), 5)) <= w.abs_bound * Real(1e-20));
    CHECK(classify_sector(Fn::H2, Regime::Oblique, -pi() / 4, 5).central);

    // J at theta = 0 uses factor 1
    auto j = besselj_oblique(nu, beta, 2, ctx);
    CHECK(j.bound_rule == "bessel-sector");

    // Y turning, N = 4 (1 mod 3) at theta = 0
    auto y = bessely_turning(nu, 4, ctx);
    Real s = Real(11) / 3;
    Real yb = 2 / (3 * pi()) * abs(d_coeff(5).value()) * Real(3) / 4 * tgamma(s) / pow(Real(10), s);
    CHECK(abs(y.abs_bound - yb) <= yb * Real(1e-20));
}

TEST_CASE("near-Stokes bound beats the sector bound near the edge") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    Real beta = pi() / 3;
    Real th = -pi() / 2 + Real(1e-3);
    CHECK(classify_sector(Fn::H1, Regime::Oblique, th, 3).near_stokes);
    for (int N = 1; N <= 6; ++N) {
        auto v = hankel1_oblique(Polar{Real(10), th}, beta, N, ctx);
        CHECK(v.bound_rule == "hankel-near-stokes");
        Real plain = hankel_sector_factor(th);
        CHECK(plain > 900);
        CHECK(sqrt(exp(Real(1)) * (N + Real(1.5))) < plain);
        auto t = hankel1_turning(Polar{Real(10), th}, N, ctx);
        CHECK(t.bound_rule == "turning-hankel-near-stokes");
    }
    // edge itself: only the near-Stokes rule applies
    auto e = hankel1_oblique(Polar{Real(10), -pi() / 2}, beta, 3, ctx);
    CHECK(e.bound_rule == "hankel-near-stokes");
    CHECK_THROWS_AS(hankel1_oblique(Polar{Real(10), Real(-1.6)}, beta, 3, ctx), SectorError);
    CHECK_THROWS_AS(besselj_oblique(Polar{Real(10), Real(1.6)}, beta, 3, ctx), SectorError);
    CHECK(classify_sector(Fn::J, Regime::Oblique, Real(1.6), 3).requires_continuation);
    // J at N = 0 close to pi/4 has no near-Stokes rule
    CHECK_FALSE(classify_sector(Fn::J, Regime::Oblique, Real(0.8), 0).near_stokes);
    CHECK(classify_sector(Fn::J, Regime::Oblique, Real(0.8), 1).near_stokes);
}

TEST_CASE("bound validity on a grid") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    int checked = 0;
    for (double th : {-1.5, -0.9, 0.0, 0.7, 1.45}) {
        Polar nu{Real(10), Real(th)};
        Real beta = pi() / 6, x = 1 / cos(beta);
        Cpx r1 = reference(Fn::H1, nu, x, 30), r2 = reference(Fn::H2, nu, x, 30);
        Cpx rj = (r1 + r2) / Real(2), ry = (r1 - r2) / Cpx(Real(0), Real(2));
        for (int N = 0; N <= 8; ++N) {
            auto a = hankel1_oblique(nu, beta, N, ctx);
            auto b = hankel2_oblique(nu, beta, N, ctx);
            auto j = besselj_oblique(nu, beta, N, ctx);
            auto y = bessely_oblique(nu, beta, N, ctx);
            CHECK(abs(a.value - r1) <= a.abs_bound);
            CHECK(abs(b.value - r2) <= b.abs_bound);
            CHECK(abs(j.value - rj) <= j.abs_bound);
            CHECK(abs(y.value - ry) <= y.abs_bound);
            checked += 4;
        }
    }
    CHECK(checked == 180);
}

TEST_CASE("parity split of J") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    for (double b : {0.5, 1.0, 1.4}) {
        Real beta(b);
        for (int N = 0; N <= 5; ++N) {
            Polar nu{Real(7.5), Real(0)};
            auto j = besselj_oblique(nu, beta, N, ctx);
            auto h1 = hankel1_oblique(nu, beta, 2 * N, ctx);
            auto h2 = hankel2_oblique(nu, beta, 2 * N, ctx);
            CHECK(abs(j.value - (h1.value + h2.value) / Real(2)) <= eps_digits(36) * (1 + abs(j.value)));
        }
    }
}

TEST_CASE("continuation formulas") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    Real x = 2 / sqrt(Real(3));
    Polar nu{R("10.3"), Real(0)};
    BaseValues base;
    base.h1 = reference(Fn::H1, nu, x, 30);
    base.h2 = conj(base.h1);
    base.j = (base.h1 + base.h2) / Real(2);
    base.y = (base.h1 - base.h2) / Cpx(Real(0), Real(2));
    CHECK(abs(continuation(Fn::J, 0, nu, base, ctx) - base.j) <= eps_digits(28));
    CHECK(abs(continuation(Fn::H1, 0, nu, base, ctx) - base.h1) <= eps_digits(27));
    Cpx jm = continuation(Fn::J, 1, nu, base, ctx);
    CHECK(abs(jm - expi(2 * pi() * nu.r) * base.j) <= eps_digits(28));
    Cpx a = continuation(Fn::H1, 1, nu, base, ctx), b = continuation(Fn::H2, 1, nu, base, ctx);
    CHECK(abs(a + b - Real(2) * jm) <= eps_digits(25) * abs(a));
    Cpx ym = continuation(Fn::Y, 1, nu, base, ctx);
    CHECK(abs(a - b - Cpx(Real(0), Real(2)) * ym) <= eps_digits(25) * abs(a));
    // against the reference continued along arg(nu)
    Cpx direct = reference(Fn::H1, Polar{nu.r, 2 * pi()}, x, 30);
    CHECK(abs(a - direct) <= eps_digits(22) * abs(direct));
    // reflected J at nu e^{i pi}: J_{-nu}(-nu x) with the chosen branch
    Cpx jr = continuation(Fn::J, 0, nu, base, ctx, true);
    Cpx want = (reference(Fn::H1, Polar{nu.r, pi()}, x, 30) + reference(Fn::H2, Polar{nu.r, pi()}, x, 30)) / Real(2);
    CHECK(abs(jr - want) <= eps_digits(22) * (abs(want) + abs(base.h1)));
    Cpx yr = continuation(Fn::Y, 0, nu, base, ctx, true);
    Cpx wy = (reference(Fn::H1, Polar{nu.r, pi()}, x, 30) - reference(Fn::H2, Polar{nu.r, pi()}, x, 30)) /
             Cpx(Real(0), Real(2));
    CHECK(abs(yr - wy) <= eps_digits(22) * (abs(wy) + abs(base.h1)));
    // integer order needs the limiting form
    Polar ni{Real(10), Real(0)};
    CHECK_THROWS_AS(continuation(Fn::H1, 1, ni, base, ctx), DomainError);
    Cpx lim = continuation(Fn::H1, 1, ni, base, ctx, false, true);
    Cpx near = continuation(Fn::H1, 1, Polar{R("10.0000000001"), Real(0)}, base, ctx);
    CHECK(abs(lim - near) <= Real(1e-7) * abs(lim));
}

TEST_CASE("Watson bound and real enclosures") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    for (double v : {1.0, 5.0, 10.0, 50.0}) {
        Real nu(v);
        Real watson = tgamma(Real(1) / 3) / (pow(Real(2), Real(2) / 3) * pow(Real(3), Real(1) / 6) * pi() *
                                             pow(nu, Real(1) / 3));
        auto e = real_enclosure(Fn::J, Regime::Turning, nu, Real(0), 0, ctx);
        CHECK(abs(e.high - watson) <= eps_digits(27) * watson);
        Real jv = reference(Fn::J, Polar{nu, Real(0)}, Real(1), 30).re;
        CHECK(jv < watson);
        CHECK(e.low <= jv);
    }
    Real beta = pi() / 3, x = 2;
    Polar nu{Real(10), Real(0)};
    Cpx r1 = reference(Fn::H1, nu, x, 30);
    Real jv = r1.re, yv = r1.im;
    auto ej = real_enclosure(Fn::J, Regime::Oblique, Real(10), beta, 2, ctx);
    CHECK(ej.low <= jv);
    CHECK(jv <= ej.high);
    Real prev = 1e9;
    for (int N = 0; N <= 6; ++N) {
        auto a = real_enclosure(Fn::J, Regime::Oblique, Real(10), beta, N, ctx);
        auto b = real_enclosure(Fn::Y, Regime::Oblique, Real(10), beta, N, ctx);
        CHECK(a.low <= jv);
        CHECK(jv <= a.high);
        CHECK(b.low <= yv);
        CHECK(yv <= b.high);
        Real w = a.high - a.low;
        CHECK(w < prev);
        prev = w;
    }
    Cpx t1 = reference(Fn::H1, nu, Real(1), 30);
    for (int N = 0; N <= 8; ++N) {
        auto a = real_enclosure(Fn::J, Regime::Turning, Real(10), Real(0), N, ctx);
        auto b = real_enclosure(Fn::Y, Regime::Turning, Real(10), Real(0), N, ctx);
        CHECK(a.low <= t1.re);
        CHECK(t1.re <= a.high);
        CHECK(b.low <= t1.im);
        CHECK(t1.im <= b.high);
    }
}

TEST_CASE("auxiliary inequalities on random samples") {
    PrecisionGuard g(20);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0, 1);
    const double p = 3.141592653589793;
    for (int i = 0; i < 2000; ++i) {
        Real r(std::pow(10.0, -4 + 8 * U(rng)));
        Real phi(-2 * p + 4 * p * U(rng));
        CHECK(1 / abs(Cpx(1) - r * expi(phi)) <= reciprocal_bound(phi) * (1 + Real(1e-15)));
        Real th(-p / 2 + 2 * p * U(rng));
        CHECK(hankel_turning_kernel(r, th) <= hankel_sector_factor(th) * (1 + Real(1e-15)));
        Real tb(-p / 2 + p * U(rng));
        CHECK(bessel_turning_kernel(r, tb) <= bessel_sector_factor(tb) * (1 + Real(1e-15)));
    }
}

TEST_CASE("optimal truncation index") {
    CHECK(optimal_N(Regime::Oblique, Real(10), pi() / 3) == 14);
    CHECK(optimal_N(Regime::Turning, Real(10), Real(0)) == 31);
}
