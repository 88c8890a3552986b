// Unit and property tests for the numerics layer. Reference digits frozen from
// an independent 60-digit evaluation.
#include "doctest.h"

#include "debyekit/numerics.hpp"

#include <random>

using namespace dk;

namespace {

Real R(const char* s) { return Real(s); }

bool close(const Cpx& a, const Cpx& b, const Real& rel) { return abs(a - b) <= rel * abs(b); }

}  // namespace

TEST_CASE("gamma reference values") {
    PrecisionContext ctx(50);
    PrecisionGuard g(50);
    Real tol = eps_digits(47);
    CHECK(close(gamma_fn(Cpx(1), ctx), Cpx(1), tol));
    CHECK(close(gamma_fn(Cpx(Real(1) / 2), ctx), Cpx(sqrt(pi())), tol));
    CHECK(close(gamma_fn(Cpx(Real(1) / 3), ctx), Cpx(R("2.67893853470774763365569294097467764412868937795730110095043")), tol));
    Cpx g1 = gamma_fn(Cpx(R("0.3"), R("2.5")), ctx);
    CHECK(close(g1, Cpx(R("0.0358318849841501307720034316605416007463167937269427852011757"),
                        R("-0.020264814365175002252485572038916153218132919505964663957105")), tol));
    // reflection side
    Cpx z(R("-2.7"), R("0.4"));
    Cpx prod = gamma_fn(z, ctx) * gamma_fn(Cpx(1) - z, ctx) * sin(Cpx(pi()) * z);
    CHECK(close(prod, Cpx(pi()), tol));
    CHECK_THROWS_AS(gamma_fn(Cpx(-3), ctx), DomainError);
}

TEST_CASE("erf reference values and symmetry") {
    PrecisionContext ctx(50);
    PrecisionGuard g(50);
    Real tol = eps_digits(47);
    CHECK(abs(erf_fn(Cpx(0), ctx)) == 0);
    CHECK(close(erf_fn(Cpx(1), ctx), Cpx(R("0.842700792949714869341220635082609259296066997966302908459938")), tol));
    CHECK(close(erf_fn(Cpx(Real(2), Real(3)), ctx),
                Cpx(R("-20.829461427614568389103088451981112874439035666354139833769"),
                    R("8.68731827147016314442807875454187155305198964864870102310515")),
                tol));
    // continued-fraction region
    CHECK(close(erf_fn(Cpx(Real(5), Real(2)), ctx),
                Cpx(R("0.999999999995997064442247276261319067037077501703361178566318"),
                    R("0.000000000078358204666929522624277512703751190842908619429761136510246")),
                tol));
    for (double x : {0.3, 1.7, 4.5, 7.0}) {
        Cpx a = erf_fn(Cpx(Real(x), Real(0.2)), ctx), b = erf_fn(Cpx(Real(-x), Real(-0.2)), ctx);
        CHECK(abs(a + b) <= tol * abs(a));
    }
}

TEST_CASE("erf agrees with the lower incomplete gamma form") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.01, 5.0);
    for (int i = 0; i < 20; ++i) {
        Real x(U(rng));
        // erf(x) = 1 - Gamma(1/2, x^2)/sqrt(pi)
        Cpx e = erf_fn(Cpx(x), ctx);
        Cpx v = Cpx(1) - upper_incomplete_gamma(Cpx(Real(1) / 2), Cpx(x * x), ctx) / sqrt(pi());
        CHECK(abs(e - v) <= eps_digits(35));
    }
}

TEST_CASE("upper incomplete gamma") {
    PrecisionContext ctx(50);
    PrecisionGuard g(50);
    Real tol = eps_digits(45);
    Cpx z(Real(2), Real(-1));
    CHECK(close(upper_incomplete_gamma(Cpx(1), z, ctx), exp(-z), tol));
    CHECK(close(upper_incomplete_gamma(Cpx(Real(2.5)), Polar{Real(0), Real(0)}, ctx), gamma_fn(Cpx(Real(2.5)), ctx), tol));
    CHECK(close(upper_incomplete_gamma(Cpx(Real(1) / 2), Cpx(1), ctx),
                Cpx(R("0.278805585280661976499232611077439172088550082497174470158499")), tol));
    CHECK(close(upper_incomplete_gamma(Cpx(R("-2.5"), R("0.3")), Cpx(Real(3), Real(-1)), ctx),
                Cpx(R("-0.00035665059764398505655705035662199488821019798102679555186827"),
                    R("0.000347765995518317025066144176129150303250162354947066378960591")),
                tol));
    CHECK(close(upper_incomplete_gamma(Cpx(-3), Cpx(Real(2), Real(1)), ctx),
                Cpx(R("-0.00186205704696556144875195447357265963843484318929001307336587"),
                    R("-0.0011436888693130564733241787035215318150679848209058519222357")),
                tol));
    CHECK_THROWS_AS(upper_incomplete_gamma(Cpx(Real(0.5)), Cpx(-2), ctx), BranchError);
    // explicit side: continuity onto the cut from above
    Cpx above = upper_incomplete_gamma(Cpx(Real(0.5)), Cpx(Real(-2), Real(1e-30)), ctx);
    Cpx on = upper_incomplete_gamma(Cpx(Real(0.5)), Polar{Real(2), pi()}, ctx);
    CHECK(abs(above - on) < eps_digits(25));
}

TEST_CASE("semi-infinite quadrature") {
    PrecisionContext ctx(50);
    PrecisionGuard g(50);
    Real tol = eps_digits(44);
    auto q1 = integrate_semiinfinite([](const Real& t) { return Cpx(exp(-t)); }, Real(1), ctx);
    CHECK(abs(q1.value - Cpx(1)) <= tol);
    auto q2 = integrate_semiinfinite([](const Real& t) { return Cpx(exp(-t) / sqrt(t)); }, Real(1), ctx);
    CHECK(abs(q2.value - Cpx(sqrt(pi()))) <= tol);
    Real tp = 2 * pi();
    auto q3 = integrate_semiinfinite([&](const Real& t) { return Cpx(pow(t, Real(-2) / 3) * exp(-tp * t)); }, tp, ctx);
    Cpx want = gamma_fn(Cpx(Real(1) / 3), ctx) * pow(tp, Real(-1) / 3);
    CHECK(abs(q3.value - want) <= tol * abs(want));
    // monomial exactness property
    for (int k = 0; k <= 10; ++k) {
        Real lam = Real(k + 1) / 3;
        auto q = integrate_semiinfinite([&](const Real& t) { return Cpx(pow(t, k) * exp(-lam * t)); }, lam, ctx);
        Real want_k = boost::multiprecision::tgamma(Real(k + 1)) / pow(lam, k + 1);
        CHECK(abs(q.value.re - want_k) <= Real(ctx.quad_rel_tol()) * want_k);
    }
}

TEST_CASE("quadrature error estimate covers a precision bump") {
    PrecisionContext lo(30), hi(50);
    Real lo_val, lo_err;
    auto f = [](const Real& t) { return Cpx(log1p(t) * exp(-t) / sqrt(t)); };
    {
        PrecisionGuard g(30);
        auto q = integrate_semiinfinite(f, Real(1), lo);
        lo_val = q.value.re;
        lo_err = q.est_err;
    }
    PrecisionGuard g(50);
    auto q = integrate_semiinfinite(f, Real(1), hi);
    CHECK(abs(q.value.re - lo_val) <= lo_err + eps_digits(28));
}

TEST_CASE("Gauss panels on an oscillatory segment") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    Real w = 80;
    auto q = integrate_panels([&](const Real& s) { return expi(w * s); }, Real(0), Real(3), ctx, 8);
    Cpx want = (expi(w * 3) - Cpx(1)) / Cpx(Real(0), w);
    CHECK(abs(q.value - want) <= eps_digits(34));
}

TEST_CASE("precision context validation") {
    CHECK_THROWS_AS(PrecisionContext(10), DomainError);
    PrecisionContext c(60);
    CHECK(c.quad_rel_tol() >= 1e-55 * 0.999);
}
