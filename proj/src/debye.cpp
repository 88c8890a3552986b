// debye.cpp - Debye expansions with their sector-dependent error bounds.
//
// Every applicable bound for the sector is evaluated and the smallest one is
// reported together with the name of the rule that produced it.

#include "debyekit/debye.hpp"

#include "debyekit/coeffs.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace dk {

namespace {

Real inf() { return std::numeric_limits<Real>::infinity(); }

int work_digits_of(const PrecisionContext& ctx) {
    return std::max(ctx.digits(), static_cast<int>(Real::default_precision())) + 10;
}

// theta reduced to (-pi, pi]
Real reduce_angle(const Real& phi) {
    Real tp = 2 * pi();
    Real r = phi - tp * floor(phi / tp);  // [0, 2pi)
    if (r > pi()) r -= tp;
    return r;
}

struct Candidate {
    Real bound;
    std::string rule;
};

// smallest finite candidate; SectorError when none applies
Candidate pick(const std::vector<Candidate>& c, const std::string& what) {
    const Candidate* best = nullptr;
    for (const auto& k : c)
        if (isfinite(Cpx(k.bound)) && (!best || k.bound < best->bound)) best = &k;
    if (!best) throw SectorError(what + ": no error bound applies at this arg(nu) and N");
    return *best;
}

Real abs_u(int n, const Real& beta, const PrecisionContext& wc) { return abs(u_at_beta(n, beta, wc)); }

// |nu|^s for real s
Real rpow(const Real& r, const Real& s) { return exp(s * log(r)); }

bool in_open(const Real& t, const Real& a, const Real& b) { return t > a && t < b; }
bool in_closed(const Real& t, const Real& a, const Real& b) { return t >= a && t <= b; }

// sqrt(e (a)) style factor
Real root_e(const Real& a) { return sqrt(exp(Real(1)) * a); }

// H1-convention near-Stokes range of the Hankel bounds: [-pi/2, 0) or (pi, 3pi/2]
bool hankel_near_stokes(const Real& th) {
    const Real p = pi();
    return (th >= -p / 2 && th < 0) || (th > p && th <= 3 * p / 2);
}

bool hankel_in_sector(const Real& th) { return in_closed(th, -pi() / 2, 3 * pi() / 2); }

// one row of the turning-point bounds: |d_{2N+k}| Gamma((2N+1+k)/3) / |nu|^{(2N+1+k)/3}
Real turning_term(int N, int k, const Real& r) {
    Real s = Real(2 * N + 1 + k) / 3;
    return abs(d_coeff(N + k / 2).value()) * tgamma(s) / rpow(r, s);
}

Polar to_work(const Polar& nu) { return at_prec(nu); }

BoundedValue finish(BoundedValue v, const PrecisionContext& ctx) {
    v.value = at_prec(v.value, ctx.digits());
    v.abs_bound = at_prec(v.abs_bound, ctx.digits());
    if (v.xi) v.xi = at_prec(*v.xi, ctx.digits());
    return v;
}

void check_common(const Polar& nu, int N) {
    if (N < 0) throw DomainError("N must be non-negative");
    if (!(nu.r > 0)) throw DomainError("nu must be nonzero");
}

void check_beta(const Real& beta) {
    if (!(beta > 0 && beta < pi() / 2)) throw DomainError("beta must lie in (0, pi/2)");
}

// ------------------------------------------------------------ oblique H

BoundedValue hankel_oblique(bool second, const Polar& nu_in, const Real& beta_in, int N, const PrecisionContext& ctx) {
    check_common(nu_in, N);
    check_beta(beta_in);
    BoundedValue out;
    {
        PrecisionGuard g(work_digits_of(ctx));
        PrecisionContext wc(work_digits_of(ctx));
        Polar nu = to_work(nu_in);
        Real beta = at_prec(beta_in);
        const Real p = pi();
        // H2 shares the H1 rules at theta + pi
        Real th = second ? Real(nu.theta + p) : nu.theta;
        if (!hankel_in_sector(th))
            throw SectorError(std::string(second ? "H2" : "H1") +
                              ": arg(nu) outside the representation sector; use the continuation formulas");
        Real lam = tan(beta) - beta;
        Cpx I(Real(0), Real(1));
        Cpx nv = nu.value();
        Cpx root = nu.pow(Real(1) / 2) * sqrt(p * tan(beta) / 2);
        Cpx pre = second ? exp(-(I * nv * lam) + I * (p / 4)) / root : exp(I * nv * lam - I * (p / 4)) / root;
        Cpx sum;
        Real mag = 0;
        for (int n = 0; n < N; ++n) {
            Cpx term = u_at_beta(n, beta, wc) / nu.pow(Real(n));
            if (!second && n % 2) term = -term;
            sum += term;
            mag += abs(term);
        }
        Real base = abs_u(N, beta, wc) / rpow(nu.r, Real(N));
        std::vector<Candidate> c;
        Real f = hankel_sector_factor(th);
        if (isfinite(Cpx(f))) c.push_back({f * base, "hankel-sector"});
        if (hankel_near_stokes(th)) c.push_back({root_e(Real(N) + Real(3) / 2) * base, "hankel-near-stokes"});
        Candidate best = pick(c, second ? "H2" : "H1");
        out.value = pre * sum;
        out.N = N;
        out.abs_bound = abs(pre) * (best.bound + mag * eps_digits(ctx.digits() - 2));
        out.bound_rule = best.rule;
    }
    return finish(out, ctx);
}

// ------------------------------------------------------------ oblique J, Y

BoundedValue bessel_oblique(bool is_y, const Polar& nu_in, const Real& beta_in, int N, const PrecisionContext& ctx) {
    check_common(nu_in, N);
    check_beta(beta_in);
    BoundedValue out;
    {
        PrecisionGuard g(work_digits_of(ctx));
        PrecisionContext wc(work_digits_of(ctx));
        Polar nu = to_work(nu_in);
        Real beta = at_prec(beta_in);
        const Real p = pi();
        const Real th = nu.theta;
        if (abs(th) > p / 2)
            throw SectorError(std::string(is_y ? "Y" : "J") +
                              ": |arg(nu)| > pi/2 is outside the representation sector; use the continuation formulas");
        Real lam = tan(beta) - beta;
        Cpx I(Real(0), Real(1));
        Cpx xi = nu.value() * lam - Cpx(p / 4);
        Cpx cx = cos(xi), sx = sin(xi);
        Cpx pre = Cpx(sqrt(2 / (p * tan(beta)))) / nu.pow(Real(1) / 2);
        Cpx even, odd;
        Real mag_e = 0, mag_o = 0;
        for (int n = 0; n < N; ++n) {
            Cpx a = u_at_beta(2 * n, beta, wc) / nu.pow(Real(2 * n));
            Cpx b = u_at_beta(2 * n + 1, beta, wc) / nu.pow(Real(2 * n + 1));
            even += a;
            odd += b;
            mag_e += abs(a);
            mag_o += abs(b);
        }
        Cpx sum = is_y ? sx * even + I * cx * odd : cx * even - I * sx * odd;
        Real mag = (abs(cx) + abs(sx)) * (mag_e + mag_o);
        Real ue = abs_u(2 * N, beta, wc) / rpow(nu.r, Real(2 * N));
        Real uo = abs_u(2 * N + 1, beta, wc) / rpow(nu.r, Real(2 * N + 1));
        Real w_e = is_y ? abs(sx) : abs(cx), w_o = is_y ? abs(cx) : abs(sx);
        std::vector<Candidate> c;
        Real f = bessel_sector_factor(th);
        if (isfinite(Cpx(f))) c.push_back({f * (w_e * ue + w_o * uo), "bessel-sector"});
        Real at = abs(th);
        bool ns = N >= 1 ? (at > p / 4 && at <= p / 2)
                         : (at > p / 4 + atan(1 / sqrt(Real(2 * N + 2))) && at <= p / 2);
        if (ns) {
            Real b = root_e(Real(2 * N) + Real(5) / 2) / 2 * w_e * ue + root_e(Real(2 * N) + Real(7) / 2) / 2 * w_o * uo;
            c.push_back({b, "bessel-near-stokes"});
        }
        Candidate best = pick(c, is_y ? "Y" : "J");
        out.value = pre * sum;
        out.N = N;
        out.abs_bound = abs(pre) * (best.bound + mag * eps_digits(ctx.digits() - 2));
        out.bound_rule = best.rule;
        out.xi = xi;
    }
    return finish(out, ctx);
}

// ------------------------------------------------------------ turning point

Cpx turning_head(Fn fn, const Polar& nu, int N, Real& mag) {
    const Real p = pi();
    Cpx sum;
    mag = 0;
    for (int n = 0; n < N; ++n) {
        Real a = Real(2 * n + 1) * p / 3;
        Real s = sin(a);
        Cpx base = Cpx(d_coeff(n).value() * tgamma(Real(2 * n + 1) / 3)) / nu.pow(Real(2 * n + 1) / 3);
        Cpx t;
        switch (fn) {
            case Fn::H1: t = base * expi(2 * a) * (s * Real(-2) / (3 * p)); break;
            case Fn::H2: t = base * expi(-2 * a) * (s * Real(-2) / (3 * p)); break;
            case Fn::J: t = base * (s / (3 * p)); break;
            case Fn::Y: t = base * (s * s * Real(-2) / (3 * p)); break;
        }
        sum += t;
        mag += abs(t);
    }
    return sum;
}

BoundedValue hankel_turning(bool second, const Polar& nu_in, int N, const PrecisionContext& ctx) {
    check_common(nu_in, N);
    BoundedValue out;
    {
        PrecisionGuard g(work_digits_of(ctx));
        Polar nu = to_work(nu_in);
        const Real p = pi();
        Real th = second ? Real(nu.theta + p) : nu.theta;
        if (!hankel_in_sector(th))
            throw SectorError(std::string(second ? "H2" : "H1") +
                              ": arg(nu) outside the representation sector; use the continuation formulas");
        Real mag;
        Cpx head = turning_head(second ? Fn::H2 : Fn::H1, nu, N, mag);
        const Real k = 2 / (3 * p) * sqrt(Real(3)) / 2;
        Real A0 = k * turning_term(N, 0, nu.r), A2 = k * turning_term(N, 2, nu.r);
        Real plain, stokes;
        switch (N % 3) {
            case 1:
                plain = A2;
                stokes = sqrt(exp(Real(1)) / 3 * (Real(2 * N) + Real(13) / 2)) * A2;
                break;
            case 2:
                plain = A0;
                stokes = sqrt(exp(Real(1)) / 3 * (Real(2 * N) + Real(9) / 2)) * A0;
                break;
            default:
                plain = A0 + A2;
                stokes = sqrt(exp(Real(1)) / 3 * (Real(2 * N) + Real(9) / 2)) * A0 +
                         sqrt(exp(Real(1)) / 3 * (Real(2 * N) + Real(13) / 2)) * A2;
        }
        std::vector<Candidate> c;
        Real f = hankel_sector_factor(th);
        if (isfinite(Cpx(f))) c.push_back({f * plain, "turning-hankel-sector"});
        if (hankel_near_stokes(th)) c.push_back({stokes, "turning-hankel-near-stokes"});
        Candidate best = pick(c, second ? "H2" : "H1");
        out.value = head;
        out.N = N;
        out.abs_bound = best.bound + mag * eps_digits(ctx.digits() - 2);
        out.bound_rule = best.rule;
    }
    return finish(out, ctx);
}

BoundedValue bessel_turning(bool is_y, const Polar& nu_in, int N, const PrecisionContext& ctx) {
    check_common(nu_in, N);
    BoundedValue out;
    {
        PrecisionGuard g(work_digits_of(ctx));
        Polar nu = to_work(nu_in);
        const Real p = pi();
        const Real th = nu.theta;
        if (abs(th) > p / 2)
            throw SectorError(std::string(is_y ? "Y" : "J") +
                              ": |arg(nu)| > pi/2 is outside the representation sector; use the continuation formulas");
        Real mag;
        Cpx head = turning_head(is_y ? Fn::Y : Fn::J, nu, N, mag);
        const Real k = is_y ? Real(2 / (3 * p) * Real(3) / 4) : Real(1 / (3 * p) * sqrt(Real(3)) / 2);
        Real C0 = k * turning_term(N, 0, nu.r), C2 = k * turning_term(N, 2, nu.r), C4 = k * turning_term(N, 4, nu.r);
        auto ns = [&](double a) { return sqrt(exp(Real(1)) / 3 * (Real(2 * N) + Real(a))) / 2; };
        Real plain, stokes;
        Real narrow_arg;  // the near-Stokes bound holds for |theta| >= pi/4 + atan(narrow_arg^{-1/2})
        bool wide;        // ... or on all of pi/4 < |theta| <= pi/2
        bool have_stokes = true;
        switch (N % 3) {
            case 0:
                plain = is_y ? Real(C0 + C4) : Real(C0 + C4);
                stokes = ns(7.5) * C0 + ns(11.5) * C4;
                narrow_arg = Real(2 * N + 6) / 3;
                wide = N >= 3;
                have_stokes = N >= 3;
                break;
            case 1:
                plain = is_y ? C2 : Real(C2 + C4);
                stokes = is_y ? Real(ns(9.5) * C2) : Real(ns(9.5) * C2 + ns(11.5) * C4);
                narrow_arg = Real(2 * N + 8) / 3;
                wide = N >= 4;
                break;
            default:
                plain = is_y ? C0 : Real(C0 + C2);
                stokes = is_y ? Real(ns(7.5) * C0) : Real(ns(7.5) * C0 + ns(9.5) * C2);
                narrow_arg = Real(2 * N + 6) / 3;
                wide = is_y ? N >= 4 : N >= 5;
        }
        std::vector<Candidate> c;
        Real f = bessel_sector_factor(th);
        if (isfinite(Cpx(f))) c.push_back({f * plain, "turning-bessel-sector"});
        if (!is_y && N % 3 == 0 && abs(th) <= p / 4) c.push_back({C0, "turning-j-central"});
        Real at = abs(th);
        if (have_stokes && at <= p / 2 &&
            ((wide && at > p / 4) || at >= p / 4 + atan(1 / sqrt(narrow_arg))))
            c.push_back({stokes, "turning-bessel-near-stokes"});
        Candidate best = pick(c, is_y ? "Y" : "J");
        out.value = head;
        out.N = N;
        out.abs_bound = best.bound + mag * eps_digits(ctx.digits() - 2);
        out.bound_rule = best.rule;
    }
    return finish(out, ctx);
}

}  // namespace

// ------------------------------------------------------------ public API

Real reciprocal_bound(const Real& phi) {
    Real a = abs(reduce_angle(phi));
    if (a == 0) return inf();
    if (a < pi() / 2) return abs(1 / sin(a));
    return 1;
}

Real hankel_sector_factor(const Real& th) {
    const Real p = pi();
    if (th >= 0 && th <= p) return 1;
    if (in_open(th, -p / 2, Real(0)) || in_open(th, p, 3 * p / 2)) return abs(1 / cos(th));
    return inf();
}

Real bessel_sector_factor(const Real& th) {
    const Real p = pi();
    Real a = abs(th);
    if (a <= p / 4) return 1;
    if (a < p / 2) return abs(1 / sin(2 * th));
    return inf();
}

Real hankel_turning_kernel(const Real& r, const Real& th) {
    Cpx a = Cpx(1) + r * expi(-2 * th / 3);
    Cpx b = Cpx(1) + r * expi(2 * (pi() - th) / 3);
    return 1 / (abs(a) * abs(b));
}

Real bessel_turning_kernel(const Real& r, const Real& th) {
    Cpx a = Cpx(1) - pow(r, Real(2) / 3) * expi(-2 * th / 3);
    Cpx b = Cpx(1) + r * r * expi(-2 * th);
    return abs(a) / abs(b);
}

Sector classify_sector(Fn fn, Regime regime, const Real& theta, int N) {
    PrecisionGuard g(std::max(30, static_cast<int>(Real::default_precision())));
    Sector s;
    s.theta = theta;
    const Real p = pi();
    if (fn == Fn::H1 || fn == Fn::H2) {
        Real th = fn == Fn::H2 ? Real(theta + p) : theta;
        s.requires_continuation = !hankel_in_sector(th);
        s.central = th >= 0 && th <= p;
        s.near_stokes = !s.requires_continuation && hankel_near_stokes(th);
        return s;
    }
    Real a = abs(theta);
    s.requires_continuation = a > p / 2;
    s.central = a <= p / 4;
    if (s.requires_continuation || s.central) return s;
    if (regime == Regime::Oblique) {
        s.near_stokes = N >= 1 || a > p / 4 + atan(1 / sqrt(Real(2 * N + 2)));
    } else {
        bool is_y = fn == Fn::Y;
        switch (N % 3) {
            case 0: s.near_stokes = N >= 3; break;
            case 1: s.near_stokes = N >= 4 || a >= p / 4 + atan(1 / sqrt(Real(2 * N + 8) / 3)); break;
            default:
                s.near_stokes = (is_y ? N >= 4 : N >= 5) || a >= p / 4 + atan(1 / sqrt(Real(2 * N + 6) / 3));
        }
    }
    return s;
}

BoundedValue hankel1_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx) {
    return hankel_oblique(false, nu, beta, N, ctx);
}
BoundedValue hankel2_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx) {
    return hankel_oblique(true, nu, beta, N, ctx);
}
BoundedValue besselj_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx) {
    return bessel_oblique(false, nu, beta, N, ctx);
}
BoundedValue bessely_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx) {
    return bessel_oblique(true, nu, beta, N, ctx);
}
BoundedValue hankel1_turning(const Polar& nu, int N, const PrecisionContext& ctx) {
    return hankel_turning(false, nu, N, ctx);
}
BoundedValue hankel2_turning(const Polar& nu, int N, const PrecisionContext& ctx) {
    return hankel_turning(true, nu, N, ctx);
}
BoundedValue besselj_turning(const Polar& nu, int N, const PrecisionContext& ctx) {
    return bessel_turning(false, nu, N, ctx);
}
BoundedValue bessely_turning(const Polar& nu, int N, const PrecisionContext& ctx) {
    return bessel_turning(true, nu, N, ctx);
}

BoundedValue debye_eval(Fn fn, Regime regime, const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx) {
    if (regime == Regime::Oblique) {
        switch (fn) {
            case Fn::H1: return hankel1_oblique(nu, beta, N, ctx);
            case Fn::H2: return hankel2_oblique(nu, beta, N, ctx);
            case Fn::J: return besselj_oblique(nu, beta, N, ctx);
            case Fn::Y: return bessely_oblique(nu, beta, N, ctx);
        }
    }
    switch (fn) {
        case Fn::H1: return hankel1_turning(nu, N, ctx);
        case Fn::H2: return hankel2_turning(nu, N, ctx);
        case Fn::J: return besselj_turning(nu, N, ctx);
        case Fn::Y: return bessely_turning(nu, N, ctx);
    }
    throw DomainError("debye_eval: bad function");
}

Cpx continuation(Fn fn, int m, const Polar& nu_in, const BaseValues& base, const PrecisionContext& ctx, bool reflect,
                 bool integer_limit) {
    if (reflect && (fn == Fn::H1 || fn == Fn::H2))
        throw DomainError("continuation: the reflected form exists for J and Y only");
    Cpx out;
    {
        PrecisionGuard g(work_digits_of(ctx));
        Cpx nu = at_prec(nu_in).value();
        const Real p = pi();
        const Cpx I(Real(0), Real(1));
        Cpx s1 = sin(nu * p);
        Cpx c1 = cos(nu * p);
        bool integer = abs(s1) <= eps_digits(ctx.digits() - 5) * (1 + abs(nu));
        if (integer && !integer_limit)
            throw DomainError("continuation: nu is an integer; request the limiting form");
        // sin(k pi nu) / sin(pi nu), with its limit at integer nu
        auto ratio = [&](long k) {
            if (integer) return Cpx(Real(k)) * cos(nu * (p * k)) / c1;
            return sin(nu * (p * k)) / s1;
        };
        auto sinp = [&](long k) { return sin(nu * (p * k)); };
        Cpx e_m = exp(-(I * nu * p));
        Cpx e_p = exp(I * nu * p);
        Cpx H1 = at_prec(base.h1), H2 = at_prec(base.h2), J = at_prec(base.j), Y = at_prec(base.y);
        const long M = m;
        if (!reflect) {
            switch (fn) {
                case Fn::H1: out = -(ratio(2 * M - 1) * H1) - e_m * ratio(2 * M) * H2; break;
                case Fn::H2: out = ratio(2 * M + 1) * H2 + e_p * ratio(2 * M) * H1; break;
                case Fn::J: out = exp(I * nu * (2 * p * M)) * J; break;
                case Fn::Y:
                    out = exp(-(I * nu * (2 * p * M))) * Y + Cpx(Real(0), Real(2)) * ratio(2 * M) * c1 * J;
                    break;
            }
        } else if (fn == Fn::J) {
            out = exp(I * nu * (2 * p * M)) * J - I * sinp(2 * M) * H1 - I * e_m * sinp(2 * M + 1) * H2;
        } else {
            out = exp(-(I * nu * (2 * p * (M + 1)))) * Y + Cpx(Real(0), Real(2)) * e_m * ratio(2 * M + 1) * c1 * J -
                  sinp(2 * M) * H1 - e_m * sinp(2 * M + 1) * H2;
        }
    }
    return at_prec(out, ctx.digits());
}

Enclosure real_enclosure(Fn fn, Regime regime, const Real& nu_in, const Real& beta_in, int N,
                         const PrecisionContext& ctx) {
    if (fn != Fn::J && fn != Fn::Y) throw DomainError("real_enclosure: J or Y only");
    if (!(nu_in > 0)) throw DomainError("real_enclosure: nu must be real and positive");
    if (N < 0) throw DomainError("N must be non-negative");
    const bool is_y = fn == Fn::Y;
    Enclosure out;
    {
        PrecisionGuard g(work_digits_of(ctx));
        PrecisionContext wc(work_digits_of(ctx));
        Real nu = at_prec(nu_in);
        Polar pn{nu, Real(0)};
        std::vector<Real> coef;  // R * sign = sum coef_i * Theta_i, Theta_i in (0, 1)
        Real sign = 1, scale = 1, head;
        if (regime == Regime::Oblique) {
            Real beta = at_prec(beta_in);
            check_beta(beta);
            BoundedValue v = bessel_oblique(is_y, pn, beta, N, wc);
            Real xi = v.xi->re;
            scale = sqrt(2 / (pi() * nu * tan(beta)));
            head = v.value.re / scale;
            Real ue = abs_u(2 * N, beta, wc) / pow(nu, 2 * N);
            Real uo = abs_u(2 * N + 1, beta, wc) / pow(nu, 2 * N + 1);
            if (is_y)
                coef = {sin(xi) * ue, -cos(xi) * uo};
            else
                coef = {cos(xi) * ue, sin(xi) * uo};
            sign = N % 2 ? -1 : 1;
        } else {
            BoundedValue v = bessel_turning(is_y, pn, N, wc);
            head = v.value.re;
            const Real p = pi();
            const Real k = is_y ? Real(2 / (3 * p) * Real(3) / 4) : Real(1 / (3 * p) * sqrt(Real(3)) / 2);
            Real C0 = k * turning_term(N, 0, nu), C2 = k * turning_term(N, 2, nu), C4 = k * turning_term(N, 4, nu);
            Real even = N % 2 ? -1 : 1;
            switch (N % 3) {
                case 0:
                    coef = is_y ? std::vector<Real>{C0, C4} : std::vector<Real>{C0, -C4};
                    sign = is_y ? Real(-even) : even;
                    break;
                case 1:
                    coef = is_y ? std::vector<Real>{C2, -C4} : std::vector<Real>{C2, C4};
                    sign = even;
                    break;
                default:
                    coef = is_y ? std::vector<Real>{C0, -C2} : std::vector<Real>{C0, C2};
                    sign = -even;
            }
        }
        Real lo = 0, hi = 0;
        for (const Real& c : coef) {
            if (c < 0)
                lo += c;
            else
                hi += c;
        }
        // R = sign * (sum), so R lies in sign * [lo, hi]
        Real rlo = sign > 0 ? lo : Real(-hi), rhi = sign > 0 ? hi : Real(-lo);
        Real slack = (abs(head) + hi - lo) * eps_digits(ctx.digits() - 2);
        out.low = scale * (head + rlo) - scale * slack;
        out.high = scale * (head + rhi) + scale * slack;
    }
    return {at_prec(out.low, ctx.digits()), at_prec(out.high, ctx.digits())};
}

int optimal_N(Regime regime, const Real& nu_abs, const Real& beta) {
    double v = regime == Regime::Oblique ? (2 * nu_abs * (tan(beta) - beta)).convert_to<double>()
                                         : (pi() * nu_abs).convert_to<double>();
    return static_cast<int>(std::floor(v + 0.5));
}

}  // namespace dk
