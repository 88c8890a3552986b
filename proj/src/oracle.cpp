// oracle.cpp - reference values by quadrature.
//
// K_{it}(y) is integrated along Im u = gamma, where gamma sits on (or near)
// the saddle of the cosine kernel; there the integrand is non-oscillatory and
// of the same size as the result, so no digits are lost to cancellation.

#include "debyekit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace dk {

std::string fn_name(Fn f) {
    switch (f) {
        case Fn::H1: return "H1";
        case Fn::H2: return "H2";
        case Fn::J: return "J";
        case Fn::Y: return "Y";
    }
    return "?";
}

Fn parse_fn(const std::string& s) {
    if (s == "H1") return Fn::H1;
    if (s == "H2") return Fn::H2;
    if (s == "J") return Fn::J;
    if (s == "Y") return Fn::Y;
    throw DomainError("unknown function '" + s + "' (expected H1, H2, J or Y)");
}

Cpx PhaseFunction::operator()(const Cpx& t) const {
    Real x = turning ? Real(1) : Real(1 / cos(beta));
    return sinh(t) * x - t;
}

Cpx PhaseFunction::saddle() const { return turning ? Cpx() : Cpx(Real(0), beta); }

namespace {

constexpr double kEdge = 0.3;  // keep the shifted line this far from Im u = pi/2

// optimal line height: the saddle for x >= 1, Im u = pi/2 otherwise
Real saddle_height(const Real& x) { return x >= 1 ? Real(asin(1 / x)) : Real(pi() / 2); }

Real line_height(const Real& x) {
    Real gs = saddle_height(x);
    Real cap = pi() / 2 - Real(kEdge);
    return gs < cap ? gs : cap;
}

// digits lost to cancellation when the line sits below the saddle
int line_guard(const Real& t, const Real& x, const Real& gamma) {
    Real gs = saddle_height(x);
    Real h = (x * cos(gs) + gs) - (x * cos(gamma) + gamma);
    double g = (t * h / log(Real(10))).convert_to<double>();
    return static_cast<int>(std::max(0.0, g)) + 10;
}

// Trapezoidal rule over the whole real line for an integrand analytic in the
// strip |Im s| < d and double-exponentially small beyond |s| = L. The error
// falls like exp(-2 pi d / h), so a couple of halvings settle it.
Cpx line_trapezoid(const std::function<Cpx(const Real&)>& g, bool even, const Real& L, const Real& d,
                   double growth, const PrecisionContext& ctx) {
    const double D = ctx.digits() * std::log(10.0) + growth + 5;
    Real h = 2 * pi() * d / Real(D);
    Cpx sum = g(Real(0));
    auto add_nodes = [&](const Real& start, const Real& step) {
        Cpx acc;
        for (Real s = start; s <= L; s += step) {
            acc += g(s);
            if (!even) acc += g(Real(-s));
        }
        return acc;
    };
    sum += add_nodes(h, h) * (even ? Real(2) : Real(1));
    Cpx S = sum * h;
    for (int level = 0; level < 8; ++level) {
        sum += add_nodes(h / 2, h) * (even ? Real(2) : Real(1));
        h /= 2;
        Cpx Snew = sum * h;
        Real diff = abs(Snew - S);
        S = Snew;
        if (diff <= Real(ctx.quad_rel_tol()) * abs(S) || diff == 0) return even ? Cpx(S.re / 2) : S;
    }
    throw QuadratureError("line_trapezoid: no convergence");
}

// half-width beyond which e^{-A cosh s} is below 10^-(digits+5) of its peak
Real line_cutoff(const Real& A, int digits) {
    Real c = 1 + Real((digits + 5) * std::log(10.0)) / A;
    return acosh(c) + Real(0.5);
}

// int_0^inf e^{-A cosh s} cos(t s - B sinh s) ds, strip width d
Real shifted_cos_integral(const Real& t, const Real& A, const Real& B, const Real& d, const PrecisionContext& ctx) {
    auto f = [&](const Real& s) {
        Real e = exp(s), ei = 1 / e;
        Real ch = (e + ei) / 2, sh = (e - ei) / 2;
        return Cpx(exp(-A * ch) * cos(t * s - B * sh));
    };
    double growth = (t * d).convert_to<double>();
    return line_trapezoid(f, true, line_cutoff(A, ctx.digits()), d, growth, ctx).re;
}

// Small argument: K_{it}(y) = -pi Im I_{it}(y) / sinh(pi t), with the
// power series of I_{it}. Loses about log10(1/t) digits as t -> 0.
Real series_k_imag(const Real& t, const Real& y, int digits) {
    int guard = 10 + static_cast<int>(std::max(0.0, -std::log10((pi() * t).convert_to<double>())));
    Real out;
    {
        PrecisionGuard g(digits + guard);
        PrecisionContext wc(digits + guard);
        Real tt = at_prec(t), yy = at_prec(y);
        Cpx it(Real(0), tt);
        Cpx term = exp(it * log(yy / 2)) / gamma_fn(Cpx(1) + it, wc);
        Cpx sum = term;
        Real q = yy * yy / 4;
        Real tol = eps_digits(digits + guard);
        for (int k = 1; k < 10000; ++k) {
            term = term * q / (Real(k) * (Cpx(Real(k)) + it));
            sum += term;
            if (abs(term) <= tol * abs(sum)) break;
        }
        out = -pi() * sum.im / sinh(pi() * tt);
    }
    return at_prec(out, digits);
}

struct IHCache {
    std::mutex mu;
    std::map<std::pair<std::string, unsigned>, std::map<Real, Real>> tables;
};

IHCache& ih_cache() {
    static IHCache c;
    return c;
}

}  // namespace

Real k_imag_order(const Real& t, const Real& y, const PrecisionContext& ctx) {
    if (t < 0 || !(y > 0)) throw DomainError("k_imag_order: need t >= 0 and y > 0");
    Real gamma = 0;  // t = 0: K_0, no oscillation
    int guard = 10;
    if (t > 0) {
        Real x = y / t;
        gamma = line_height(x);
        guard = line_guard(t, x, gamma);
    }
    if (t > 0 && y <= 2) return series_k_imag(t, y, ctx.digits());
    Real out;
    {
        PrecisionGuard g(ctx.digits() + guard);
        PrecisionContext wc(ctx.digits() + guard);
        Real tt = at_prec(t), yy = at_prec(y), gm = at_prec(gamma);
        Real I = shifted_cos_integral(tt, yy * cos(gm), yy * sin(gm), pi() / 2 - gm, wc);
        out = exp(-tt * gm) * I;
    }
    return at_prec(out, ctx.digits());
}

Real ihankel_line(const Real& t, const Real& x, const PrecisionContext& ctx) {
    if (!(t > 0) || x < 1) throw DomainError("ihankel_line: need t > 0 and x >= 1");
    if (t > Real("1e15")) throw RangeError("ihankel_line: t beyond the supported exponent range");
    auto key = std::make_pair(x.str(40), static_cast<unsigned>(ctx.digits()));
    IHCache& C = ih_cache();
    {
        std::lock_guard<std::mutex> lock(C.mu);
        auto& tab = C.tables[key];
        auto it = tab.find(t);
        if (it != tab.end()) return it->second;
    }
    Real gamma = line_height(x);
    int guard = line_guard(t, x, gamma);
    Real out;
    if (t * x <= 2) {
        PrecisionGuard g(ctx.digits() + 5);
        Real tt = at_prec(t);
        out = 2 / pi() * exp(tt * pi() / 2) * series_k_imag(tt, tt * x, ctx.digits() + 5);
    } else {
        PrecisionGuard g(ctx.digits() + guard);
        PrecisionContext wc(ctx.digits() + guard);
        Real tt = at_prec(t), xx = at_prec(x), gm = at_prec(gamma);
        Real y = tt * xx;
        Real I = shifted_cos_integral(tt, y * cos(gm), y * sin(gm), pi() / 2 - gm, wc);
        out = 2 / pi() * exp(tt * (pi() / 2 - gm)) * I;
    }
    Real r = at_prec(out, ctx.digits());
    std::lock_guard<std::mutex> lock(C.mu);
    auto& tab = C.tables[key];
    if (tab.size() < 200000) tab.emplace(t, r);
    return r;
}

Cpx ihankel_line_complex(const Cpx& t, const Real& x, const PrecisionContext& ctx) {
    Real at = arg(t);
    Real cap = pi() / 2 - abs(at) - Real(kEdge);
    if (!(cap > 0)) throw DomainError("ihankel_line_complex: |arg t| too large");
    Real gs = asin(1 / x);
    Real gamma = gs < cap ? gs : cap;
    int guard = line_guard(abs(t), x, gamma) + 5;
    Cpx out;
    {
        PrecisionGuard g(ctx.digits() + guard);
        PrecisionContext wc(ctx.digits() + guard);
        Cpx tt = at_prec(t);
        Real xx = at_prec(x), gm = at_prec(gamma);
        Cpx y = tt * xx;
        auto E = [&](const Real& s) {
            Cpx u(s, gm);
            return exp(-(y * cosh(u)) + Cpx(Real(0), Real(1)) * tt * u);
        };
        Real A = abs(y) * cos(gm + abs(at));
        Real d = pi() / 2 - abs(at) - gm;
        double growth = (abs(tt) * d).convert_to<double>();
        Cpx I = line_trapezoid(E, false, line_cutoff(A, wc.digits()), d, growth, wc);
        // K = I/2 ; iH = (2/pi) e^{pi t/2} K
        out = exp(tt * (pi() / 2)) * I / pi();
    }
    return at_prec(out, ctx.digits());
}

// ---------------------------------------------------------- contour H1

namespace {

// Re and Im of nu (x sinh w - w) at w
Cpx hankel_exponent(const Cpx& nu, const Real& x, const Cpx& w) { return nu * (sinh(w) * x - w); }

}  // namespace

OracleValue hankel1_reference(const Polar& nu, const Real& x, const PrecisionContext& ctx) {
    if (x < 1) throw DomainError("hankel1_reference: x must be >= 1");
    if (abs(nu.theta) > 2 * pi()) throw SectorError("hankel1_reference: |arg nu| must be <= 2 pi");
    if (nu.r > 1000) throw SectorError("hankel1_reference: |nu| above the supported range 1e3");
    if (!(nu.r > 0)) throw DomainError("hankel1_reference: nu must be nonzero");

    // Cheap double-precision survey of the contour for guard digits and panel counts.
    const double th = nu.theta.convert_to<double>();
    const double r = nu.r.convert_to<double>();
    const double xd = x.convert_to<double>();
    const double v1 = th, v2 = M_PI - th;
    auto expo = [&](double s, double v, double& re, double& im) {
        // nu (x sinh w - w), w = s + iv
        double shr = std::sinh(s) * std::cos(v), shi = std::cosh(s) * std::sin(v);
        double ar = xd * shr - s, ai = xd * shi - v;
        double nr = r * std::cos(th), ni = r * std::sin(th);
        re = nr * ar - ni * ai;
        im = nr * ai + ni * ar;
    };
    const double lnten = std::log(10.0);
    const int D = ctx.digits();
    double maxre = -1e300;
    double re, im;
    // vertical segment
    double vphase = 0, prev_im = 0;
    const int NS = 400;
    for (int k = 0; k <= NS; ++k) {
        double v = v1 + (v2 - v1) * k / NS;
        expo(0, v, re, im);
        maxre = std::max(maxre, re);
        if (k) vphase += std::fabs(im - prev_im);
        prev_im = im;
    }
    // horizontal segments: find truncation point and phase variation
    auto survey = [&](double v, double sign, double& S, double& phase) {
        double s = 0;
        phase = 0;
        expo(0, v, re, prev_im);
        double step = 0.02;
        double m = re;
        while (true) {
            s += step;
            expo(sign * s, v, re, im);
            m = std::max(m, re);
            phase += std::fabs(im - prev_im);
            prev_im = im;
            if (re < maxre - (D + 25) * lnten && re < m) break;
            if (s > 60) throw SectorError("hankel1_reference: contour tail does not decay");
        }
        maxre = std::max(maxre, m);
        S = s;
    };
    double S1, P1, S3, P3;
    survey(v1, -1, S1, P1);
    survey(v2, +1, S3, P3);
    // expected size of the result: exp(Re(i nu (tan b - b))) / sqrt(|nu|)
    double lam = 0;
    if (xd > 1) {
        double b = std::acos(1 / xd);
        lam = std::tan(b) - b;
    }
    double expect = -r * std::sin(th) * lam - 0.5 * std::log(std::max(r, 1.0));
    int guard = static_cast<int>(std::max(0.0, (maxre - expect) / lnten)) + 12;

    for (int attempt = 0; attempt < 3; ++attempt, guard += 20) {
        OracleValue out;
        Cpx total;
        Real err = 0;
        {
            PrecisionGuard g(D + guard);
            PrecisionContext wc(D + guard);
            Polar n2 = at_prec(nu);
            Cpx nv = n2.value();
            Real xx = at_prec(x);
            Real a1(n2.theta), a2 = pi() - n2.theta;
            Cpx i1(Real(0), Real(1));
            auto g1 = [&](const Real& s) { return exp(hankel_exponent(nv, xx, Cpx(Real(-s), a1))); };
            auto g2 = [&](const Real& v) { return exp(hankel_exponent(nv, xx, Cpx(Real(0), v))) * i1; };
            auto g3 = [&](const Real& s) { return exp(hankel_exponent(nv, xx, Cpx(s, a2))); };
            auto q1 = integrate_panels(g1, Real(0), Real(S1), wc, static_cast<int>(P1 / 6) + 2);
            auto q2 = integrate_panels(g2, a1, a2, wc, static_cast<int>(vphase / 6) + 2);
            auto q3 = integrate_panels(g3, Real(0), Real(S3), wc, static_cast<int>(P3 / 6) + 2);
            total = (q1.value + q2.value + q3.value) / (Cpx(Real(0), pi()));
            err = (q1.est_err + q2.est_err + q3.est_err) / pi();
            // result much smaller than predicted: the guard was too thin
            double lr = log(abs(total)).convert_to<double>();
            if (lr < expect - 3 * lnten && attempt < 2) {
                guard += static_cast<int>((expect - lr) / lnten);
                continue;
            }
        }
        out.value = at_prec(total, D);
        out.est_err = at_prec(err, D);
        return out;
    }
    throw QuadratureError("hankel1_reference: could not stabilise the contour integral");
}

OracleValue hankel1_reference(const Cpx& nu, const Real& x, const PrecisionContext& ctx) {
    return hankel1_reference(Polar{abs(nu), arg(nu)}, x, ctx);
}

OracleValue function_reference(Fn fn, const Polar& nu, const Real& x, const PrecisionContext& ctx) {
    auto h1 = [&]() { return hankel1_reference(nu, x, ctx); };
    auto h2 = [&]() {
        // H2_nu(nu x) = conj(H1_{conj nu}(conj nu x)) for real x
        OracleValue v = hankel1_reference(Polar{nu.r, Real(-nu.theta)}, x, ctx);
        v.value = conj(v.value);
        return v;
    };
    switch (fn) {
        case Fn::H1: return h1();
        case Fn::H2: return h2();
        case Fn::J: {
            OracleValue a = h1(), b = h2();
            return {(a.value + b.value) / Real(2), (a.est_err + b.est_err) / 2};
        }
        case Fn::Y: {
            OracleValue a = h1(), b = h2();
            return {(a.value - b.value) / Cpx(Real(0), Real(2)), (a.est_err + b.est_err) / 2};
        }
    }
    throw DomainError("function_reference: bad function");
}

// ------------------------------------------------------ remainder integrals

void check_representation_sector(Fn fn, const Real& theta) {
    const Real p = pi();
    bool ok = false;
    switch (fn) {
        case Fn::H1: ok = theta > -p / 2 && theta < 3 * p / 2; break;
        case Fn::H2: ok = theta > -3 * p / 2 && theta < p / 2; break;
        case Fn::J:
        case Fn::Y: ok = abs(theta) < p / 2; break;
    }
    if (!ok) throw SectorError("arg(nu) outside the sector of the integral representation for " + fn_name(fn));
}

namespace {

struct RotatedSector {
    Real lo, hi;
};

RotatedSector representation_sector(Fn fn, const Real& phi) {
    const Real p = pi();
    switch (fn) {
        case Fn::H1: return {-p / 2 - phi, 3 * p / 2 - phi};
        case Fn::H2: return {-3 * p / 2 - phi, p / 2 - phi};
        default: return {-p / 2 - phi, p / 2 - phi};
    }
}

// int_0^inf t^a w(t) iH(t) K(t) dt along arg t = -phi, where
// w(t) = e^{-lam t}(1 + e^{-2 pi t}) (oblique) or e^{-2 pi t} (turning).
struct Kernel {
    std::function<Cpx(const Cpx&)> k;
};

OracleValue ray_integral(const Real& a_pow, bool turning, const Real& x, const Real& lam, const Real& phi,
                         const std::function<Cpx(const Cpx&)>& kernel, const PrecisionContext& ctx) {
    const Real two_pi = 2 * pi();
    const Real decay = turning ? two_pi : Real(2 * lam);
    if (phi == 0) {
        auto f = [&](const Real& t) {
            Real w = turning ? exp(-two_pi * t) : Real(exp(-lam * t) * (1 + exp(-two_pi * t)));
            Real ih = ihankel_line(t, x, ctx);
            return kernel(Cpx(t)) * (pow(t, a_pow) * w * ih);
        };
        auto q = integrate_semiinfinite(f, decay, ctx);
        return {q.value, q.est_err};
    }
    Cpx rot = expi(-phi);
    auto f = [&](const Real& tau) {
        Cpx t = rot * tau;
        Cpx w = turning ? exp(-(t * two_pi)) : exp(-(t * lam)) * (Cpx(1) + exp(-(t * two_pi)));
        Cpx ih = ihankel_line_complex(t, x, ctx);
        Cpx ta = Polar{tau, Real(-phi)}.pow(a_pow);
        return kernel(t) * ta * w * ih * rot;
    };
    auto q = integrate_semiinfinite(f, decay * cos(phi), ctx);
    return {q.value, q.est_err};
}

}  // namespace

OracleValue remainder_quadrature(const RemainderQuery& q, const PrecisionContext& ctx, const Real& rotation) {
    if (q.N < 0) throw DomainError("remainder_quadrature: N must be >= 0");
    RotatedSector sec = representation_sector(q.fn, rotation);
    if (!(q.nu.theta > sec.lo && q.nu.theta < sec.hi))
        throw SectorError("remainder_quadrature: arg(nu) outside the sector of the representation for " + fn_name(q.fn));
    if (abs(rotation) > Real(1.2)) throw DomainError("remainder_quadrature: rotation too large");

    const int D = ctx.digits();
    OracleValue out;
    {
        PrecisionGuard g(D + 10);
        PrecisionContext wc(D + 10);
        const Real p = pi();
        const Cpx I(Real(0), Real(1));
        Polar nu = at_prec(q.nu);
        Cpx nv = nu.value();
        const int N = q.N;
        const Real phi = at_prec(rotation);

        if (q.regime == Regime::Oblique) {
            Real beta = at_prec(q.beta);
            if (!(beta > 0 && beta < p / 2)) throw DomainError("remainder_quadrature: beta must be in (0, pi/2)");
            Real x = 1 / cos(beta);
            Real lam = tan(beta) - beta;
            Real c0 = 1 / (2 * sqrt(2 * p * cos(beta) / sin(beta)));
            if (q.fn == Fn::H1 || q.fn == Fn::H2) {
                // H2 uses R_N at nu e^{pi i}, i.e. nu -> -nu in the kernel
                Cpx nn = q.fn == Fn::H1 ? nv : -nv;
                auto ker = [&](const Cpx& t) { return Cpx(1) / (Cpx(1) + I * t / nn); };
                OracleValue v = ray_integral(Real(N) - Real(0.5), false, x, lam, phi, ker, wc);
                Cpx pre = Cpx(c0) / pow(I * nn, N);
                out = {pre * v.value, abs(pre) * v.est_err};
            } else {
                Cpx xi = nv * lam - Cpx(p / 4);
                auto ker = [&](const Cpx& t) {
                    Cpx u = t / nv;
                    return Cpx(1) / (Cpx(1) + u * u);
                };
                OracleValue a = ray_integral(Real(2 * N) - Real(0.5), false, x, lam, phi, ker, wc);
                OracleValue b = ray_integral(Real(2 * N) + Real(0.5), false, x, lam, phi, ker, wc);
                Real sg = (N % 2) ? Real(-c0) : c0;
                Cpx pa = Cpx(sg) / pow(nv, 2 * N), pb = Cpx(sg) / pow(nv, 2 * N + 1);
                Cpx ta = pa * a.value, tb = pb * b.value;
                Cpx v = q.fn == Fn::J ? cos(xi) * ta + sin(xi) * tb : sin(xi) * ta - cos(xi) * tb;
                Real e = abs(pa) * a.est_err + abs(pb) * b.est_err;
                e *= abs(cos(xi)) + abs(sin(xi));
                out = {v, e};
            }
        } else {
            // turning point: cube-root kernels, H = -i (iH)
            Polar nn = nu;
            if (q.fn == Fn::H2) nn.theta += p;  // -R_N(nu e^{pi i})
            const Real s3 = Real(2 * N + 1) / 3;
            Cpx nu_s = nn.pow(s3);
            Cpx nu_m23 = nn.pow(Real(-2) / 3);
            Cpx w_p = expi(2 * p / 3), w_m = expi(-2 * p / 3);
            Cpx e_p = expi(Real(2 * N + 1) * p / 3), e_m = expi(-Real(2 * N + 1) * p / 3);
            auto rho = [&](const Cpx& t) {
                // (t/nu)^{2/3} with t on the ray arg t = -phi
                Polar tp{abs(t), Real(-phi)};
                return tp.pow(Real(2) / 3) * nu_m23;
            };
            std::function<Cpx(const Cpx&)> ker;
            Cpx pre;
            Real sg = (N % 2) ? Real(-1) : Real(1);
            if (q.fn == Fn::H1 || q.fn == Fn::H2) {
                ker = [&](const Cpx& t) {
                    Cpx r = rho(t);
                    return e_p / (Cpx(1) + r * w_p) + Cpx(1) / (Cpx(1) + r);
                };
                pre = Cpx(sg / (3 * p)) / nu_s;
                if (q.fn == Fn::H2) pre = -pre;
            } else if (q.fn == Fn::J) {
                ker = [&](const Cpx& t) {
                    Cpx r = rho(t);
                    return e_p / (Cpx(1) + r * w_p) - e_m / (Cpx(1) + r * w_m);
                };
                pre = Cpx(sg / (6 * p)) / nu_s;
            } else {
                ker = [&](const Cpx& t) {
                    Cpx r = rho(t);
                    return e_p / (Cpx(1) + r * w_p) + e_m / (Cpx(1) + r * w_m) + Cpx(2) / (Cpx(1) + r);
                };
                pre = Cpx(sg / (6 * p)) / (nu_s * I);
            }
            OracleValue v = ray_integral(Real(2 * N - 2) / 3, true, Real(1), Real(0), phi, ker, wc);
            // the integral carries iH; the representation uses H = -i iH
            Cpx val = pre * v.value * (-I);
            out = {val, abs(pre) * v.est_err};
        }
    }
    return {at_prec(out.value, ctx.digits()), at_prec(out.est_err, ctx.digits())};
}

OracleValue u_coeff_integral(int n, const Real& beta, const PrecisionContext& ctx) {
    if (n < 0 || n > 8) throw DomainError("u_coeff_integral: n must be in 0..8");
    OracleValue out;
    {
        PrecisionGuard g(ctx.digits() + 10);
        PrecisionContext wc(ctx.digits() + 10);
        Real b = at_prec(beta);
        Real x = 1 / cos(b), lam = tan(b) - b;
        auto one = [](const Cpx&) { return Cpx(1); };
        OracleValue v = ray_integral(Real(n) - Real(0.5), false, x, lam, Real(0), one, wc);
        Cpx in = pow(Cpx(Real(0), Real(1)), n);
        Real c0 = 1 / (2 * sqrt(2 * pi() * cos(b) / sin(b)));
        out = {in * v.value * c0, v.est_err * c0};
    }
    return {at_prec(out.value, ctx.digits()), at_prec(out.est_err, ctx.digits())};
}

OracleValue d_coeff_integral(int n, const PrecisionContext& ctx) {
    if (n < 0 || n > 8) throw DomainError("d_coeff_integral: n must be in 0..8");
    OracleValue out;
    {
        PrecisionGuard g(ctx.digits() + 10);
        PrecisionContext wc(ctx.digits() + 10);
        auto one = [](const Cpx&) { return Cpx(1); };
        OracleValue v = ray_integral(Real(2 * n - 2) / 3, true, Real(1), Real(0), Real(0), one, wc);
        Real pre = 1 / tgamma(Real(2 * n + 1) / 3);
        if (n % 2) pre = -pre;
        out = {v.value * pre, v.est_err * abs(pre)};
    }
    return {at_prec(out.value, ctx.digits()), at_prec(out.est_err, ctx.digits())};
}

}  // namespace dk
