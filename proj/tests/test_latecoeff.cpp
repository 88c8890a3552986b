// Late coefficients: the two worked-example tables, bound validity, Meissel's
// approximation and the choice of M.
#include "doctest.h"

#include "debyekit/coeffs.hpp"
#include "debyekit/latecoeff.hpp"

#include <cmath>
#include <vector>

using namespace dk;

namespace {

// agreement with a printed decimal to within one unit in its last place
bool printed(const Real& x, const char* s) {
    Real p(s);
    std::string t(s);
    auto e = t.find('e');
    std::string mant = t.substr(0, e);
    int ex = e == std::string::npos ? 0 : std::stoi(t.substr(e + 1));
    int decimals = static_cast<int>(mant.size() - mant.find('.') - 1);
    return abs(x - p) <= pow(Real(10), ex - decimals);
}

}  // namespace

TEST_CASE("table of U_50(i cot beta)") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    auto rows = table1(ctx);
    REQUIRE(rows.size() == 4);
    struct Want {
        const char *exact, *dingle, *derr, *approx, *aerr, *bound;
    };
    const Want want[] = {
        {"-0.25922998993906050847874e111", "-0.25922998993906052149604e111", "0.1301729e95",
         "-0.25922998993906052149604e111", "0.1301729e95", "0.2603745e95"},
        {"-0.14230192249287421747599e56", "-0.14230192249287422461949e56", "0.714350e39",
         "-0.14230192249287422461949e56", "0.714350e39", "0.1428874e40"},
        {"-0.22522390129012627337081e6", "-0.22522390005970895996288e6", "-0.123041731340794e-2",
         "-0.22522390129012628466504e6", "0.1129422e-10", "0.2259222e-10"},
        {"-0.44399210443101419183462e2", "-0.44399207348793668328156e2", "-0.3094307750855306e-5",
         "-0.44399210443101421410584e2", "0.2227122e-14", "0.4455002e-14"},
    };
    for (int i = 0; i < 4; ++i) {
        CAPTURE(i);
        const auto& r = rows[i];
        CHECK(printed(r.exact, want[i].exact));
        CHECK(printed(r.dingle, want[i].dingle));
        CHECK(printed(r.dingle_error, want[i].derr));
        CHECK(printed(r.approx, want[i].approx));
        CHECK(printed(r.approx_error, want[i].aerr));
        CHECK(printed(r.bound, want[i].bound));
        CHECK(abs(r.approx_error) <= r.bound);
    }
    CHECK(mantissa_format(rows[0].exact, 23) == "-0.25922998993906050847874 x 10^111");
}

TEST_CASE("table of d_2n") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    auto rows = table2(ctx);
    REQUIRE(rows.size() == 4);
    struct Want {
        const char *exact, *approx, *err, *bound, *rule;
    };
    const Want want[] = {
        {"-0.13204080504096204947934e-2", "-0.13533519099105530338724e-2", "0.329438595009325390791e-4",
         "0.741093493984769184813e-4", "late-d-first-omitted"},
        {"0.22835077129770834034682e-5", "0.22863435953438111985117e-5", "-0.28358823667277950434e-8",
         "0.82073950282859763109e-8", "late-d-first-omitted"},
        {"-0.17492836534785902720965e-13", "-0.17492810163968211380528e-13", "-0.26370817691340437e-19",
         "0.77781860849182240e-19", "late-d-two-term"},
        {"0.69006711932598958421355e-27", "0.69006711932934022685189e-27", "-0.335064263835e-38",
         "0.1051878923948e-37", "late-d-next-nonzero"},
    };
    for (int i = 0; i < 4; ++i) {
        CAPTURE(i);
        const auto& r = rows[i];
        CHECK(printed(r.exact, want[i].exact));
        CHECK(printed(r.approx, want[i].approx));
        CHECK(printed(r.error, want[i].err));
        CHECK(printed(r.bound, want[i].bound));
        CHECK(r.bound_rule == want[i].rule);
        CHECK(abs(r.error) <= r.bound);
    }
}

TEST_CASE("bounds hold across n, beta and M") {
    PrecisionContext ctx(40);
    PrecisionGuard g(40);
    for (int n : {10, 20, 50}) {
        for (Real beta : {pi() / 6, pi() / 3, 6 * pi() / 13, 7 * pi() / 15}) {
            Cpx exact = u_at_beta(n, beta, ctx);
            for (int M : {n / 4, n / 2}) {
                CAPTURE(n);
                CAPTURE(M);
                auto lp = u_late(n, beta, M, ctx);
                CHECK(abs(lp.value - exact) <= lp.err_bound);
                // Dingle's form is the first series alone
                CHECK(abs(u_late_dingle(n, beta, M, ctx) + lp.second - lp.value) <= eps_digits(35) * abs(exact));
            }
        }
        Real d = d_coeff(n).value();
        for (int M : {n / 4, n / 2}) {
            auto lp = d_late(n, M, ctx);
            CHECK(abs(lp.value.re - d) <= lp.err_bound);
        }
    }
}

TEST_CASE("M = 0 and argument checks") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    auto lp = u_late(8, pi() / 4, 0, ctx);
    CHECK(abs(lp.value) == 0);
    Real lam = tan(pi() / 4) - pi() / 4;
    Real b1 = tgamma(Real(8)) / (2 * pi() * pow(2 * lam, 8));
    Real b2 = tgamma(Real(8)) / (2 * pi() * pow(2 * (lam + pi()), 8));
    CHECK(abs(lp.err_bound - b1 - b2) <= eps_digits(25) * lp.err_bound);
    CHECK_THROWS_AS(u_late(8, pi() / 4, 8, ctx), DomainError);
    CHECK_THROWS_AS(u_late(0, pi() / 4, 0, ctx), DomainError);
    CHECK_THROWS_AS(d_late(5, 4, ctx), DomainError);
    CHECK_THROWS_AS(d_late(1, 0, ctx), DomainError);
}

TEST_CASE("Meissel's approximation") {
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    CHECK(abs(meissel_lambda(1, ctx).exact - Real(1) / 60) <= eps_digits(28));
    for (int n = 1; n <= 5; ++n) CHECK(meissel_lambda(n, ctx).exact > 0);
    // the ratio settles towards 1 once past its bump near n = 15
    Real prev = 1;
    for (int n : {20, 40, 80}) {
        auto m = meissel_lambda(n, ctx);
        Real dev = abs(m.exact / m.asymptotic - 1);
        CHECK(dev < prev);
        CHECK(dev < Real(0.002));
        prev = dev;
    }
    auto m10 = meissel_lambda(10, ctx);
    CHECK(abs(m10.exact / m10.asymptotic - 1) < Real(0.002));
}

TEST_CASE("choice of M") {
    PrecisionGuard g(30);
    for (Real beta : {pi() / 6, pi() / 3, 6 * pi() / 13}) {
        int m = optimal_M(50, LateKind::U, beta);
        CHECK(m >= 23);
        CHECK(m <= 27);
    }
    int md = optimal_M(10, LateKind::D);
    CHECK(md >= 4);
    CHECK(md <= 6);
    PrecisionContext ctx(30);
    int m = optimal_M(40, LateKind::U, pi() / 3);
    Real prev = u_late(40, pi() / 3, m + 2, ctx).err_bound;
    for (int M = m + 3; M <= 39; ++M) {
        Real b = u_late(40, pi() / 3, M, ctx).err_bound;
        CHECK(b > prev);
        prev = b;
    }
}

TEST_CASE("accuracy improves like 2^-n at the best M") {
    PrecisionContext ctx(60);
    PrecisionGuard g(60);
    Real beta = pi() / 3;
    std::vector<double> xs, ys;
    for (int n : {20, 30, 40, 50}) {
        int M = optimal_M(n, LateKind::U, beta);
        Cpx exact = u_at_beta(n, beta, ctx);
        Real rel = abs(u_late(n, beta, M, ctx).value - exact) / abs(exact);
        xs.push_back(n);
        ys.push_back(std::log(rel.convert_to<double>()));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / xs.size();
        my += ys[i] / ys.size();
    }
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = sxy / sxx;
    CAPTURE(slope);
    CHECK(std::abs(slope + std::log(2.0)) <= 0.15 * std::log(2.0));
}
