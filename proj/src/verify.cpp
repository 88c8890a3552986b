// verify.cpp - self-check suites shared by the CLI and the acceptance run.

#include "debyekit/verify.hpp"

#include "debyekit/coeffs.hpp"
#include "debyekit/debye.hpp"
#include "debyekit/hyper.hpp"
#include "debyekit/oracle.hpp"
#include "debyekit/terminant.hpp"

#include <random>

namespace dk {

namespace {

std::string sci(const Real& x) { return x.str(6, std::ios_base::scientific); }

CheckResult make(const std::string& suite, const std::string& name, bool pass, const Real& measured,
                 const Real& threshold, long count) {
    return {suite, name, pass, sci(measured), sci(threshold), count};
}

// ---------------------------------------------------------------- bounds

std::vector<CheckResult> suite_bounds(int digits, bool full) {
    const int d = std::max(30, std::min(digits, 40));
    PrecisionContext ctx(d);
    PrecisionGuard g(d);
    const Real p = pi();
    std::vector<Real> nus = full ? std::vector<Real>{Real(8), Real(15)} : std::vector<Real>{Real(10)};
    std::vector<Real> betas = full ? std::vector<Real>{p / 6, p / 3, 6 * p / 13, Real(0)}
                                   : std::vector<Real>{p / 3, Real(0)};  // 0 marks the turning point
    std::vector<double> thetas = full ? std::vector<double>{-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5}
                                      : std::vector<double>{-1.0, 0.0, 1.0};
    std::vector<double> outer = full ? std::vector<double>{2.0, 3.0, 4.5} : std::vector<double>{3.0};
    const int n_max = full ? 8 : 5;
    long count = 0, violations = 0;
    Real worst = 0;  // largest |error| / bound seen
    auto check = [&](const BoundedValue& b, const Cpx& ref) {
        ++count;
        Real e = abs(b.value - ref);
        if (e > b.abs_bound) ++violations;
        if (b.abs_bound > 0) worst = rmax(worst, e / b.abs_bound);
    };
    for (const Real& r : nus) {
        for (const Real& beta : betas) {
            const bool turning = beta == 0;
            const Regime rg = turning ? Regime::Turning : Regime::Oblique;
            const Real x = turning ? Real(1) : Real(1 / cos(beta));
            for (double th : thetas) {
                Polar nu{r, Real(th)};
                Cpx r1 = function_reference(Fn::H1, nu, x, ctx).value;
                Cpx r2 = function_reference(Fn::H2, nu, x, ctx).value;
                Cpx rj = (r1 + r2) / Real(2), ry = (r1 - r2) / Cpx(Real(0), Real(2));
                for (int N = 0; N <= n_max; ++N) {
                    check(debye_eval(Fn::H1, rg, nu, beta, N, ctx), r1);
                    check(debye_eval(Fn::H2, rg, nu, beta, N, ctx), r2);
                    check(debye_eval(Fn::J, rg, nu, beta, N, ctx), rj);
                    check(debye_eval(Fn::Y, rg, nu, beta, N, ctx), ry);
                }
            }
            // the Hankel functions beyond |theta| = pi/2
            for (double th : outer) {
                Polar n1{r, Real(th)}, n2{r, Real(-th)};
                Cpx r1 = function_reference(Fn::H1, n1, x, ctx).value;
                Cpx r2 = function_reference(Fn::H2, n2, x, ctx).value;
                for (int N = 0; N <= n_max; ++N) {
                    check(debye_eval(Fn::H1, rg, n1, beta, N, ctx), r1);
                    check(debye_eval(Fn::H2, rg, n2, beta, N, ctx), r2);
                }
            }
        }
    }
    return {make("bounds", "expansion error within abs_bound", violations == 0, Real(violations), Real(0), count),
            make("bounds", "largest error/bound ratio", worst <= 1, worst, Real(1), count)};
}

// ------------------------------------------------------------ resurgence

std::vector<CheckResult> suite_resurgence(int digits, bool full) {
    const int d = std::max(40, digits);
    PrecisionContext ctx(d);
    PrecisionGuard g(d);
    const Real p = pi();
    const Real beta = p / 3, x = 2;
    std::vector<int> nus = full ? std::vector<int>{5, 10, 20} : std::vector<int>{10};
    std::vector<CheckResult> out;
    const Real tol("1e-20");
    for (int v : nus) {
        for (int N : {3, 5}) {
            Polar nu{Real(v), Real(0)};
            Cpx nv = nu.value();
            // oblique: prefactor * (partial sum + remainder)
            Real lam = tan(beta) - beta;
            Cpx I(Real(0), Real(1));
            Cpx pref = exp(I * nv * lam - I * (p / 4)) / (nu.pow(Real(1) / 2) * sqrt(p * tan(beta) / 2));
            Cpx s;
            for (int n = 0; n < N; ++n) s += u_at_beta(n, beta, ctx) * Cpx(n % 2 ? Real(-1) : Real(1)) / pow(nv, n);
            Cpx R = remainder_quadrature({Fn::H1, Regime::Oblique, nu, beta, N}, ctx).value;
            Real e1 = abs(pref * (s + R) - hankel1_reference(nu, x, ctx).value);
            out.push_back(make("resurgence", "oblique nu=" + std::to_string(v) + " N=" + std::to_string(N), e1 <= tol,
                               e1, tol, 1));
            // turning point
            Cpx t;
            for (int n = 0; n < N; ++n) {
                Real a = Real(2 * n + 1) * p / 3;
                t += d_coeff(n).value() * expi(2 * a) * sin(a) * tgamma(Real(2 * n + 1) / 3) /
                     nu.pow(Real(2 * n + 1) / 3);
            }
            t = t * (Real(-2) / (3 * p));
            Cpx Rt = remainder_quadrature({Fn::H1, Regime::Turning, nu, Real(0), N}, ctx).value;
            Real e2 = abs(t + Rt - hankel1_reference(nu, Real(1), ctx).value);
            out.push_back(make("resurgence", "turning nu=" + std::to_string(v) + " N=" + std::to_string(N), e2 <= tol,
                               e2, tol, 1));
        }
    }
    return out;
}

// ---------------------------------------------------------------- coeffs

std::vector<CheckResult> suite_coeffs(int digits, bool) {
    const int d = std::max(20, digits);
    PrecisionContext ctx(d);
    PrecisionGuard g(d);
    const Real tol = eps_digits(d - 8);
    const Real p = pi();
    Real wb = 0, wp = 0;
    long cu = 0;
    std::vector<Cpx> xs;
    for (Real beta : {p / 6, p / 3, 6 * p / 13}) xs.push_back(Cpx(Real(0), cos(beta) / sin(beta)));
    xs.push_back(Cpx(Real(0), Real(1)));
    xs.push_back(Cpx(Real(2), Real(-1)));
    for (const Cpx& x : xs) {
        for (int n = 0; n <= 12; ++n) {
            Cpx a = u_eval(n, x, ctx);
            Real sc = abs(a) + 1;
            wb = rmax(wb, abs(u_via_bell(n, x, ctx) - a) / sc);
            wp = rmax(wp, abs(u_via_potential(n, x, ctx) - a) / sc);
            ++cu;
        }
    }
    Real db = 0, dn = 0;
    for (int n = 0; n <= 12; ++n) {
        Real v = d_coeff(n).value();
        db = rmax(db, abs(d_via_bell(n, ctx).re - v) / abs(v));
        dn = rmax(dn, abs(d_via_bernoulli(n, ctx).re - v) / abs(v));
    }
    auto tab = u_coeff_meijer(12);
    long mismatched = 0;
    for (int n = 0; n <= 12; ++n)
        if (u_from_meijer(n, tab).terms != u_poly(n).terms) ++mismatched;
    return {make("coeffs", "U_n Bell route vs recurrence", wb <= tol, wb, tol, cu),
            make("coeffs", "U_n Potential route vs recurrence", wp <= tol, wp, tol, cu),
            make("coeffs", "d_2n Bell route vs recurrence", db <= tol, db, tol, 13),
            make("coeffs", "d_2n Bernoulli route vs recurrence", dn <= tol, dn, tol, 13),
            make("coeffs", "Meijer table rebuilds U_n exactly", mismatched == 0, Real(mismatched), Real(0), 13)};
}

// ------------------------------------------------------------- terminant

std::vector<CheckResult> suite_terminant(int digits, std::uint64_t seed, bool) {
    const int d = std::max(20, digits);
    PrecisionContext ctx(d);
    PrecisionGuard g(d);
    const Real tol = eps_digits(d - 10);
    const Real P = pi();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    Real wi = 0, wc = 0;
    for (int i = 0; i < 20; ++i) {
        Real p(0.2 + 15 * U(rng));
        Real r(0.5 + 20 * U(rng));
        Real th = -P + Real(0.02) + (2 * P - Real(0.04)) * Real(U(rng));
        Polar z{r, th};
        Cpx t = terminant(p, z, ctx).value;
        wi = rmax(wi, abs(t - terminant_via_incgamma(p, z, ctx)) / (abs(t) + 1));
        // closure: both continuations, the left sides by the independent route
        Cpx e = expi(2 * P * p);
        Cpx lo = terminant_via_incgamma(p, Polar{r, th - 2 * P}, ctx);
        Cpx hi = terminant_via_incgamma(p, Polar{r, th + 2 * P}, ctx);
        wc = rmax(wc, abs(lo - e * (t - Cpx(1))) / (abs(lo) + 1));
        wc = rmax(wc, abs(hi - (t / e + Cpx(1))) / (abs(hi) + 1));
    }
    // decay envelope |T_p(z)| <= e^{-Re z - |z|} for p = |z|, shrinking with |z|
    long bad = 0;
    Real worst = 0;
    for (double th : {0.0, 1.5, -2.5}) {
        Real prev = 2;
        for (double r : {10.0, 20.0, 40.0}) {
            Polar z{Real(r), Real(th)};
            Real ratio = abs(terminant(Real(r), z, ctx).value) / exp(-z.value().re - Real(r));
            if (!(ratio < 1 && ratio <= prev)) ++bad;
            worst = rmax(worst, ratio);
            prev = ratio;
        }
    }
    return {make("terminant", "quadrature vs incomplete gamma", wi <= tol, wi, tol, 20),
            make("terminant", "connection formula closure", wc <= tol, wc, tol, 40),
            make("terminant", "decay envelope for p = |z|", bad == 0, worst, Real(1), 9)};
}

// ---------------------------------------------------------------- stokes

std::vector<CheckResult> suite_stokes(int digits, bool full) {
    const int d = std::max(30, digits);
    PrecisionContext ctx(d);
    PrecisionGuard g(d);
    const Real p = pi();
    const Real beta = p / 3;
    const int points = full ? 41 : 9;
    std::vector<Real> grid;
    for (int k = 0; k < points; ++k) grid.push_back(-p / 2 + Real(0.8) * (Real(2 * k) / (points - 1) - 1));
    std::vector<CheckResult> out;
    auto run = [&](Regime rg, const Real& nu, const Real& scale, const std::string& name) {
        auto pts = stokes_profile(rg, nu, beta, grid, ctx);
        Real worst = 0;
        for (const auto& s : pts) worst = rmax(worst, abs(s.measured - Cpx(s.predicted)));
        Real tol = 3 / sqrt(scale);
        out.push_back(make("stokes", name, worst <= tol, worst, tol, static_cast<long>(pts.size())));
    };
    Real nu = 20;
    run(Regime::Oblique, nu, nu * (tan(beta) - beta), "oblique |nu|=20 beta=pi/3 max deviation from erf");
    Real nt = full ? Real(20) : Real(10);
    run(Regime::Turning, nt, p * nt, std::string("turning |nu|=") + (full ? "20" : "10") + " max deviation from erf");
    return out;
}

// ---------------------------------------------------------- inequalities

std::vector<CheckResult> suite_inequalities(std::uint64_t seed, bool full) {
    PrecisionGuard g(20);
    const long n = full ? 10000 : 2000;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    const double p = 3.141592653589793;
    const Real slack = 1 + Real(1e-15);
    auto logu = [&](double lo, double hi) { return Real(std::pow(10.0, lo + (hi - lo) * U(rng))); };
    long v20 = 0, v47 = 0, v48 = 0, v90 = 0;
    Real w20 = 0, w47 = 0, w48 = 0, w90 = 0;
    for (long i = 0; i < n; ++i) {
        Real r = logu(-4, 4);
        Real phi(-2 * p + 4 * p * U(rng));
        Real a = 1 / abs(Cpx(1) - r * expi(phi)) / reciprocal_bound(phi);
        w20 = rmax(w20, a);
        if (a > slack) ++v20;
        Real th(-p / 2 + 2 * p * U(rng));
        Real b = hankel_turning_kernel(r, th) / hankel_sector_factor(th);
        w47 = rmax(w47, b);
        if (b > slack) ++v47;
        Real tb(-p / 2 + p * U(rng));
        Real c = bessel_turning_kernel(r, tb) / bessel_sector_factor(tb);
        w48 = rmax(w48, c);
        if (c > slack) ++v48;
        Real f = abs(reexpansion_slope(logu(-3, 3), logu(-3, 3), logu(-3, 3)));
        w90 = rmax(w90, f);
        if (f > 2) ++v90;
    }
    return {make("inequalities", "reciprocal bound 1/|1 - r e^{i phi}|", v20 == 0, w20, Real(1), n),
            make("inequalities", "Hankel turning kernel vs sector factor", v47 == 0, w47, Real(1), n),
            make("inequalities", "Bessel turning kernel vs sector factor", v48 == 0, w48, Real(1), n),
            make("inequalities", "re-expansion slope |f| <= 2", v90 == 0, w90, Real(2), n)};
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"bounds", "resurgence", "coeffs", "terminant", "stokes", "inequalities"};
    return names;
}

std::vector<CheckResult> verify_suite(const std::string& suite, int digits, std::uint64_t seed, bool full) {
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& s : verify_suite_names()) {
            auto r = verify_suite(s, digits, seed, full);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    if (suite == "bounds") return suite_bounds(digits, full);
    if (suite == "resurgence") return suite_resurgence(digits, full);
    if (suite == "coeffs") return suite_coeffs(digits, full);
    if (suite == "terminant") return suite_terminant(digits, seed, full);
    if (suite == "stokes") return suite_stokes(digits, full);
    if (suite == "inequalities") return suite_inequalities(seed, full);
    throw DomainError("unknown verify suite: " + suite);
}

}  // namespace dk
