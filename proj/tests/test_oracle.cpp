#include "doctest.h"

#include "debyekit/coeffs.hpp"
#include "debyekit/oracle.hpp"

using namespace dk;

namespace {

Real rel(const Cpx& a, const Cpx& b) { return abs(a - b) / abs(b); }

Cpx cpx(const char* re, const char* im) { return Cpx(Real(re), Real(im)); }

// prefactor of the oblique H1 expansion
Cpx h1_prefactor(const Polar& nu, const Real& beta) {
    Cpx nv = nu.value();
    Cpx I(Real(0), Real(1));
    return exp(I * nv * (tan(beta) - beta) - I * (pi() / 4)) / sqrt(nv * pi() * tan(beta) / Real(2));
}

}  // namespace

TEST_CASE("K of imaginary order against frozen values") {
    PrecisionContext ctx(50);
    PrecisionGuard g(50);
    CHECK(abs(k_imag_order(Real(0), Real(1), ctx) - Real("0.42102443824070833333562737921260903613621974822666047229897")) <
          Real("1e-48"));
    CHECK(abs(k_imag_order(Real(1), Real(2), ctx) - Real("0.0923854598903911815368644647853304405890445847033734233877292")) <
          Real("1e-48"));
    Real k = k_imag_order(Real(3), Real("4.5"), ctx);
    CHECK(abs(k - Real("0.00251857158085055098179658225753534500833250218763836100758261")) < Real("1e-50"));
}

TEST_CASE("iH on the imaginary line: positivity and precision agreement") {
    PrecisionGuard g(40);
    PrecisionContext c30(30), c45(45);
    for (const char* xs : {"1", "1.05", "1.5", "3"}) {
        for (const char* ts : {"0.05", "0.7", "4", "25", "90"}) {
            Real t(ts), x(xs);
            Real a = ihankel_line(t, x, c30);
            Real b = ihankel_line(t, x, c45);
            CHECK(a > 0);
            CHECK(abs(a - b) / b < Real("1e-28"));
        }
    }
    // complex-t continuation agrees on the real axis
    Real t("2.5"), x("1.3");
    Cpx z = ihankel_line_complex(Cpx(t), x, c30);
    CHECK(rel(z, Cpx(ihankel_line(t, x, c30))) < Real("1e-27"));
}

TEST_CASE("contour H1 against frozen values") {
    PrecisionContext ctx(50);
    PrecisionGuard g(50);
    Real x = 1 / cos(pi() / 4);
    auto a = hankel1_reference(Polar{Real(10), Real(0)}, x, ctx);
    CHECK(rel(a.value, cpx("0.0598741538862981911457143644497616589000364442829670901373502",
                           "0.243540248351847018562585974186574922947246268049847744988224")) < Real("1e-47"));
    auto b = hankel1_reference(Polar{Real(10), Real("0.3")}, x, ctx);
    CHECK(rel(b.value, cpx("0.0613212035289261284626678482783350314355567338242156963023852",
                           "0.116915484414836172366435903705324605476937291885910990874559")) < Real("1e-47"));
    auto c = hankel1_reference(Polar{Real(8), Real(0)}, Real(1), ctx);
    CHECK(rel(c.value, cpx("0.223454986351102954283663285851640146432214954923274264670858",
                           "-0.387669939977184968541641502707080096856890840507842951450517")) < Real("1e-47"));
    Polar nu{Real(8), Real("-0.4")};
    auto j = function_reference(Fn::J, nu, Real(1), ctx);
    auto y = function_reference(Fn::Y, nu, Real(1), ctx);
    CHECK(rel(j.value, cpx("0.221515202414475879203025893410021506074883763379365627999278",
                           "0.0296065822539934828518239356917037845429250280639214110180973")) < Real("1e-46"));
    CHECK(rel(y.value, cpx("-0.384174825151205668078915298990917524382809587966688178925566",
                           "-0.0516721824841167664212906410569004720821536141109304277842815")) < Real("1e-46"));
}

TEST_CASE("conjugate symmetry of the contour integral") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    Real x("1.7");
    auto a = function_reference(Fn::H1, Polar{Real(12), Real("0.5")}, x, ctx);
    auto b = function_reference(Fn::H2, Polar{Real(12), Real("-0.5")}, x, ctx);
    CHECK(rel(conj(a.value), b.value) < Real("1e-37"));
}

TEST_CASE("remainder integral closes the oblique expansion") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    Real beta = pi() / 4, x = 1 / cos(beta);
    for (const char* th : {"0", "0.6", "-0.3"}) {
        Polar nu{Real(10), Real(th)};
        Cpx nv = nu.value();
        auto ref = hankel1_reference(nu, x, ctx);
        for (int N : {1, 4, 9}) {
            Cpx s;
            for (int n = 0; n < N; ++n) s += u_at_beta(n, beta, ctx) * Cpx(n % 2 ? Real(-1) : Real(1)) / pow(nv, n);
            auto R = remainder_quadrature({Fn::H1, Regime::Oblique, nu, beta, N}, ctx);
            CHECK(rel(h1_prefactor(nu, beta) * (s + R.value), ref.value) < Real("1e-36"));
        }
    }
}

TEST_CASE("remainder integral closes the turning-point expansion") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    Polar nu{Real(9), Real("0.2")};
    auto ref = hankel1_reference(nu, Real(1), ctx);
    for (int N : {1, 3, 6}) {
        Cpx s;
        for (int n = 0; n < N; ++n) {
            Real a = Real(2 * n + 1) * pi() / 3;
            s += d_coeff(n).value() * expi(2 * a) * sin(a) * tgamma(Real(2 * n + 1) / 3) / nu.pow(Real(2 * n + 1) / 3);
        }
        s = s * (Real(-2) / (3 * pi()));
        auto R = remainder_quadrature({Fn::H1, Regime::Turning, nu, Real(0), N}, ctx);
        CHECK(rel(s + R.value, ref.value) < Real("1e-36"));
    }
}

TEST_CASE("coefficient integrals reproduce the exact coefficients") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    Real beta("0.9");
    for (int n = 0; n <= 5; ++n) {
        Cpx exact = u_at_beta(n, beta, ctx);
        auto q = u_coeff_integral(n, beta, ctx);
        CHECK(rel(q.value, exact) < Real("1e-35"));
    }
    for (int n = 0; n <= 5; ++n) {
        auto q = d_coeff_integral(n, ctx);
        CHECK(rel(q.value, Cpx(d_coeff(n).value())) < Real("1e-35"));
    }
}

TEST_CASE("rotated ray continues the remainder past the sector edge") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    Real beta = pi() / 4;
    Polar nu{Real(10), Real("-0.4")};
    RemainderQuery q{Fn::H1, Regime::Oblique, nu, beta, 5};
    auto a = remainder_quadrature(q, ctx);
    auto b = remainder_quadrature(q, ctx, Real("0.6"));
    CHECK(rel(a.value, b.value) < Real("1e-26"));
    q.nu.theta = -pi() / 2 - Real("0.2");
    CHECK_THROWS_AS(remainder_quadrature(q, ctx), SectorError);
    CHECK_NOTHROW(remainder_quadrature(q, ctx, Real("0.6")));
    CHECK_THROWS_AS(check_representation_sector(Fn::J, Real("1.6")), SectorError);
}
