// hyper.cpp - exponentially improved expansions and the Stokes profile.

#include "debyekit/hyper.hpp"

#include "debyekit/coeffs.hpp"
#include "debyekit/terminant.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace dk {

Singulants oblique_singulants(const Real& beta) {
    Real lam = tan(beta) - beta;
    return {Cpx(Real(0), 2 * lam), Cpx(Real(0), 2 * (lam + pi()))};
}

Singulants turning_singulants() { return {Cpx(Real(0), 2 * pi()), Cpx(Real(0), -2 * pi())}; }

namespace {

int work_digits_of(const PrecisionContext& ctx) { return ctx.digits() + 10; }

// c0 int_0^inf t^{m-1/2} e^{-t(lam + extra)} iH_{it}(it sec b) dt
Real u_part_integral(int m, const Real& beta, bool with_two_pi, const PrecisionContext& ctx) {
    using Key = std::tuple<int, std::string, int, bool>;
    static std::map<Key, Real> cache;
    static std::mutex mu;
    Key key{m, beta.str(40), ctx.digits(), with_two_pi};
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Real out;
    {
        const int wd = work_digits_of(ctx);
        PrecisionGuard g(wd);
        PrecisionContext wc(wd);
        Real b = at_prec(beta);
        Real x = 1 / cos(b), lam = tan(b) - b;
        Real rate = with_two_pi ? Real(lam + 2 * pi()) : lam;
        Real a = Real(m) - Real(1) / 2;
        auto f = [&](const Real& t) { return Cpx(pow(t, a) * exp(-rate * t) * ihankel_line(t, x, wc)); };
        QuadResult q = integrate_semiinfinite(f, rate + lam, wc);
        Real c0 = 1 / (2 * sqrt(2 * pi() / tan(b)));
        out = at_prec(c0 * q.value.re, ctx.digits());
    }
    std::lock_guard<std::mutex> lk(mu);
    cache[key] = out;
    return out;
}

void check_tilde(int m, const Real& beta) {
    if (m < 0 || m > 60) throw DomainError("tilde_u: m must be in 0..60");
    if (!(beta > 0 && beta < pi() / 2)) throw DomainError("beta must lie in (0, pi/2)");
}

int round_half_up(const Real& x) { return static_cast<int>(floor(x + Real(1) / 2).convert_to<double>()); }

}  // namespace

Cpx tilde_u(int m, const Real& beta, const PrecisionContext& ctx) {
    check_tilde(m, beta);
    Real v = u_part_integral(m, beta, true, ctx);
    switch (m % 4) {
        case 0: return Cpx(v);
        case 1: return Cpx(Real(0), v);
        case 2: return Cpx(-v);
        default: return Cpx(Real(0), -v);
    }
}

Real tilde_u_complement(int m, const Real& beta, const PrecisionContext& ctx) {
    check_tilde(m, beta);
    return u_part_integral(m, beta, false, ctx);
}

std::pair<int, int> improved_orders_oblique(const Real& nu_abs, const Real& beta, int rho, int sigma) {
    Real lam = tan(beta) - beta;
    return {round_half_up(2 * nu_abs * lam) + rho, round_half_up(2 * nu_abs * (lam + pi())) + sigma};
}

std::pair<int, int> improved_orders_turning(const Real& nu_abs, int rho, int sigma) {
    int n = round_half_up(pi() * nu_abs);
    return {n + rho, n + sigma};
}

namespace {

// pieces of the oblique expansion kept apart for the profile
struct ObliqueParts {
    Cpx pref;      // e^{i nu lam - i pi/4} / (nu pi tan b / 2)^{1/2}
    Cpx e1, e2;    // e^{-2 i nu lam}, e^{-2 i nu (lam + pi)}
    Polar z1, z2;  // -2 i nu lam, -2 i nu (lam + pi)
    Cpx inner;     // the two truncated sums
    Real tilde_tail;  // bound on the tilde terms left out past the cost guard
    std::vector<Cpx> first, second;  // i e1 U_k/nu^k T_{N-k}(z1), i e2 U_l/nu^l T_{M-l}(z2)
};

ObliqueParts oblique_parts(const Polar& nu, const Real& beta, int N, int M, int K, int L, const PrecisionContext& wc) {
    ObliqueParts o;
    const Real p = pi();
    const Cpx I(Real(0), Real(1));
    Real lam = tan(beta) - beta;
    Cpx nv = nu.value();
    o.pref = exp(I * nv * lam - I * (p / 4)) / (nu.pow(Real(1) / 2) * sqrt(p * tan(beta) / 2));
    o.e1 = exp(-(I * nv * (2 * lam)));
    o.e2 = exp(-(I * nv * (2 * (lam + p))));
    o.z1 = Polar{2 * nu.r * lam, nu.theta - p / 2};
    o.z2 = Polar{2 * nu.r * (lam + p), nu.theta - p / 2};
    Cpx sum;
    for (int n = 0; n < N; ++n) {
        Cpx t = u_at_beta(n, beta, wc) / nu.pow(Real(n));
        sum += n % 2 ? -t : t;
    }
    // tilde terms decrease in size all the way to M - 1, so whatever is left
    // after the last computed one is at most (terms left) * (last term)
    Real tail_eps = eps_digits(wc.digits() + 2);
    o.tilde_tail = 0;
    for (int m = N; m < M; ++m) {
        Cpx t = tilde_u(m, beta, wc) / nu.pow(Real(m));
        sum += m % 2 ? -t : t;
        if (abs(t) * (M - m) <= tail_eps * abs(sum)) break;
        if (m == 60) {
            o.tilde_tail = abs(t) * (M - 1 - m);
            break;
        }
    }
    o.inner = sum;
    for (int k = 0; k < K; ++k) {
        Cpx T = terminant(Real(N - k), o.z1, wc).value;
        o.first.push_back(I * o.e1 * u_at_beta(k, beta, wc) / nu.pow(Real(k)) * T);
    }
    for (int l = 0; l < L; ++l) {
        Cpx T = terminant(Real(M - l), o.z2, wc).value;
        o.second.push_back(I * o.e2 * u_at_beta(l, beta, wc) / nu.pow(Real(l)) * T);
    }
    return o;
}

// pieces of the turning-point expansion
struct TurningParts {
    Cpx head;
    Cpx lead_scale;  // i e^{-2 pi i nu} (2/(3 pi sqrt 3)) A_0 (e^{-pi i/3} + 1)
    std::vector<Cpx> km, kp, lm, lp;  // the four sums, term by term
};

Cpx turning_a(int k, const Polar& nu) {
    Real s = Real(2 * k + 1) / 3;
    return d_coeff(k).value() * sin(s * pi()) * tgamma(s) / nu.pow(s);
}

TurningParts turning_parts(const Polar& nu, int N, int M, int K, int L, const PrecisionContext& wc) {
    TurningParts o;
    const Real p = pi();
    const Cpx I(Real(0), Real(1));
    const Real s3 = sqrt(Real(3));
    Cpx nv = nu.value();
    Cpx a, b;
    for (int n = 0; n < N; ++n) a += d_coeff(3 * n).value() * tgamma(2 * n + Real(1) / 3) / nu.pow(Real(2 * n));
    for (int m = 0; m < M; ++m) b += d_coeff(3 * m + 2).value() * tgamma(2 * m + Real(5) / 3) / nu.pow(Real(2 * m));
    o.head = expi(-p / 3) / (s3 * p * nu.pow(Real(1) / 3)) * a - expi(p / 3) / (s3 * p * nu.pow(Real(5) / 3)) * b;
    const Real C = 2 / (3 * p * s3);
    Cpx em = exp(-(I * nv * (2 * p))), ep = exp(I * nv * (2 * p));
    Polar zm{2 * p * nu.r, nu.theta - p / 2}, zp{2 * p * nu.r, nu.theta + p / 2};
    for (int k = 0; k < K; ++k) {
        Real pk = 2 * N - Real(2 * k) / 3;
        Cpx A = turning_a(k, nu) * C;
        Cpx w = expi(2 * Real(2 * k + 1) * p / 3);
        o.km.push_back(I * expi(-p / 3) * em * A * terminant(pk, zm, wc).value);
        o.kp.push_back(-(I * ep * A * w * terminant(pk, zp, wc).value));
    }
    for (int l = 0; l < L; ++l) {
        Real pl = 2 * M - Real(2 * l - 4) / 3;
        Cpx A = turning_a(l, nu) * C;
        Cpx w = expi(2 * Real(2 * l + 1) * p / 3);
        o.lm.push_back(-(I * expi(p / 3) * em * A * terminant(pl, zm, wc).value));
        o.lp.push_back(I * ep * A * w * terminant(pl, zp, wc).value);
    }
    o.lead_scale = I * em * C * turning_a(0, nu) * (expi(-p / 3) + Cpx(1));
    return o;
}

Cpx total(const std::vector<Cpx>& v) {
    Cpx s;
    for (const Cpx& x : v) s += x;
    return s;
}

void check_improved_sector(const Real& theta) {
    if (theta < -3 * pi() / 2 || theta > 3 * pi() / 2)
        throw SectorError("improved expansion: arg nu must lie in [-3 pi/2, 3 pi/2]");
}

}  // namespace

ImprovedExpansion hankel1_improved_oblique(const Polar& nu_in, const Real& beta_in, int K, int L,
                                           const PrecisionContext& ctx, std::optional<int> N_opt,
                                           std::optional<int> M_opt) {
    check_improved_sector(nu_in.theta);
    if (nu_in.r < 5) throw DomainError("improved expansion: |nu| must be at least 5");
    if (!(beta_in > 0 && beta_in < pi() / 2)) throw DomainError("beta must lie in (0, pi/2)");
    auto [N0, M0] = improved_orders_oblique(nu_in.r, beta_in);
    int N = N_opt.value_or(N0), M = M_opt.value_or(M0);
    if (N < 1 || M < N) throw DomainError("improved expansion: need 1 <= N <= M");
    if (K < 0 || L < 0 || K >= N || L >= M) throw DomainError("improved expansion: need 0 <= K < N and 0 <= L < M");
    ImprovedExpansion out;
    out.N = N;
    out.M = M;
    out.K = K;
    out.L = L;
    out.sector = classify_sector(Fn::H1, Regime::Oblique, nu_in.theta, N);
    {
        const int wd = work_digits_of(ctx);
        PrecisionGuard g(wd);
        PrecisionContext wc(wd);
        Polar nu = at_prec(nu_in);
        Real beta = at_prec(beta_in);
        const Real p = pi();
        Real lam = tan(beta) - beta;
        ObliqueParts o = oblique_parts(nu, beta, N, M, K, L, wc);
        out.head = o.pref * o.inner;
        out.terminant_part = o.pref * (total(o.first) + total(o.second));
        out.value = out.head + out.terminant_part;
        Real uK = abs(u_at_beta(K, beta, wc)) / pow(nu.r, K);
        Real uL = abs(u_at_beta(L, beta, wc)) / pow(nu.r, L);
        Real ap = abs(o.pref);
        bool upper = nu.theta >= -p / 2;
        if (upper) {
            out.est_remainder = ap * (exp(-2 * nu.r * lam) * uK + exp(-2 * nu.r * (lam + p)) * uL + o.tilde_tail);
        } else {
            Real im = nu.value().im;
            out.est_remainder = ap * (exp(2 * im * lam) * uK + exp(2 * im * (lam + p)) * uL + o.tilde_tail);
        }
        // the computable bound from the proof
        const Cpx I(Real(0), Real(1));
        Cpx tK = terminant(Real(N - K), o.z1, wc).value;
        Cpx tL = terminant(Real(M - L), o.z2, wc).value;
        Real gK = uK * tgamma(Real(N - K)) / (2 * p * pow(2 * lam, N - K) * pow(nu.r, N - K));
        Real gL = uL * tgamma(Real(M - L)) / (2 * p * pow(2 * (lam + p), M - L) * pow(nu.r, M - L));
        Real bound;
        if (upper) {
            bound = uK * abs(o.e1 * tK) + gK + uL * abs(o.e2 * tL) + gL;
        } else {
            Polar flipped{nu.r, nu.theta + p};
            BoundedValue rK = hankel1_oblique(flipped, beta, K, wc);
            BoundedValue rL = hankel1_oblique(flipped, beta, L, wc);
            Real pf = abs(exp(I * flipped.value() * lam) / (flipped.pow(Real(1) / 2) * sqrt(p * tan(beta) / 2)));
            bound = abs(o.e1) * rK.abs_bound / pf + uK * abs(o.e1 * (tK + Cpx(1))) + gK +
                    abs(o.e2) * rL.abs_bound / pf + uL * abs(o.e2 * (tL + Cpx(1))) + gL;
        }
        out.rigorous_bound = ap * (bound + o.tilde_tail);
    }
    out.head = at_prec(out.head, ctx.digits());
    out.terminant_part = at_prec(out.terminant_part, ctx.digits());
    out.value = at_prec(out.value, ctx.digits());
    out.est_remainder = at_prec(out.est_remainder, ctx.digits());
    out.rigorous_bound = at_prec(*out.rigorous_bound, ctx.digits());
    return out;
}

ImprovedExpansion hankel1_improved_turning(const Polar& nu_in, int K, int L, const PrecisionContext& ctx,
                                           std::optional<int> N_opt, std::optional<int> M_opt) {
    check_improved_sector(nu_in.theta);
    if (K % 3 || L % 3 || K < 0 || L < 0) throw DomainError("improved expansion: K and L must be multiples of 3");
    auto [N0, M0] = improved_orders_turning(nu_in.r);
    int N = N_opt.value_or(N0), M = M_opt.value_or(M0);
    if (N < 1 || M < 1) throw DomainError("improved expansion: need N, M >= 1");
    if (K >= 3 * N || L >= 3 * M + 2) throw DomainError("improved expansion: need K < 3N and L < 3M + 2");
    ImprovedExpansion out;
    out.N = N;
    out.M = M;
    out.K = K;
    out.L = L;
    out.sector = classify_sector(Fn::H1, Regime::Turning, nu_in.theta, N);
    {
        const int wd = work_digits_of(ctx);
        PrecisionGuard g(wd);
        PrecisionContext wc(wd);
        Polar nu = at_prec(nu_in);
        const Real p = pi();
        TurningParts o = turning_parts(nu, N, M, K, L, wc);
        out.head = o.head;
        out.terminant_part = total(o.km) + total(o.kp) + total(o.lm) + total(o.lp);
        out.value = out.head + out.terminant_part;
        auto db = [&](int k) {
            Real s = Real(2 * k + 1) / 3;
            return abs(d_coeff(k).value()) * tgamma(s) / pow(nu.r, s);
        };
        Real shape = db(K) + db(L);
        Real th = nu.theta, im = nu.value().im;
        Real scale;
        if ((th >= -p / 2 && th <= p / 2) || (K == L && th >= -p / 2))
            scale = exp(-2 * p * nu.r);
        else if (th > p / 2)
            scale = exp(-2 * p * im);
        else
            scale = exp(2 * p * im);
        out.est_remainder = scale * shape;
    }
    out.head = at_prec(out.head, ctx.digits());
    out.terminant_part = at_prec(out.terminant_part, ctx.digits());
    out.value = at_prec(out.value, ctx.digits());
    out.est_remainder = at_prec(out.est_remainder, ctx.digits());
    return out;
}

namespace {

Real ratio_g(const Real& u) {
    if (abs(u - 1) < eps_digits(10)) {
        // removable singularity: g(1) = 2/3, g'(1) = -1/9
        return Real(2) / 3 - (u - 1) / 9;
    }
    return (1 - pow(u, Real(4) / 3)) / (1 - u * u);
}

}  // namespace

Real reexpansion_slope(const Real& r, const Real& tau, const Real& s) {
    if (!(r > 0 && tau > 0 && s > 0)) throw DomainError("reexpansion_slope: arguments must be positive");
    if (tau == 1) {
        // the tau-derivative at tau = 1: -u g'(u), u = s/r
        Real u = s / r, h = eps_digits(8) * (u + 1);
        return -u * (ratio_g(u + h) - ratio_g(u - h)) / (2 * h);
    }
    return (ratio_g(s / (r * tau)) - ratio_g(s / r)) / (tau - 1);
}

Real stokes_prediction(Regime regime, const Real& nu_abs, const Real& beta, const Real& theta) {
    Real scale = regime == Regime::Oblique ? Real(nu_abs * (tan(beta) - beta)) : Real(pi() * nu_abs);
    return (erf(Real((theta + pi() / 2) * sqrt(scale))) - 1) / 2;
}

std::vector<StokesPoint> stokes_profile(Regime regime, const Real& nu_abs, const Real& beta,
                                        const std::vector<Real>& theta_grid, const PrecisionContext& ctx) {
    if (nu_abs < 10) throw DomainError("stokes_profile: |nu| must be at least 10");
    const Real p = pi();
    for (const Real& th : theta_grid)
        if (abs(th + p / 2) > Real(1)) throw DomainError("stokes_profile: grid must stay within 1 of -pi/2");
    std::vector<StokesPoint> out;
    // the switched-on term is smaller than the function by about e^{-2 pi |nu|}
    // (turning) or e^{-2 |nu| (tan b - b)} (oblique); that much is lost to cancellation
    Real loss = regime == Regime::Oblique ? Real(2 * nu_abs * (tan(beta) - beta)) : Real(2 * p * nu_abs);
    const int wd = work_digits_of(ctx) + static_cast<int>(ceil(loss / log(Real(10))).convert_to<double>());
    for (const Real& th : theta_grid) {
        StokesPoint sp;
        sp.theta = th;
        sp.predicted = stokes_prediction(regime, nu_abs, beta, th);
        Cpx measured;
        {
            PrecisionGuard g(wd);
            PrecisionContext wc(wd);
            Polar nu{at_prec(nu_abs), at_prec(th)};
            // everything except the leading switched-on term is subtracted
            if (regime == Regime::Oblique) {
                Real b = at_prec(beta);
                auto [N, M] = improved_orders_oblique(nu.r, b);
                ObliqueParts o = oblique_parts(nu, b, N, M, 3, 3, wc);
                Cpx ref = function_reference(Fn::H1, nu, 1 / cos(b), wc).value;
                Cpx rest = o.inner + total(o.first) - o.first[0] + total(o.second);
                measured = (ref / o.pref - rest) / (Cpx(Real(0), Real(1)) * o.e1);
            } else {
                auto [N, M] = improved_orders_turning(nu.r);
                TurningParts o = turning_parts(nu, N, M, 3, 3, wc);
                Cpx ref = function_reference(Fn::H1, nu, Real(1), wc).value;
                Cpx rest = o.head + total(o.km) - o.km[0] + total(o.lm) - o.lm[0] + total(o.kp) + total(o.lp);
                measured = (ref - rest) / o.lead_scale;
            }
        }
        sp.measured = at_prec(measured, ctx.digits());
        out.push_back(sp);
    }
    return out;
}

}  // namespace dk
