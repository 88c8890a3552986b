// terminant.cpp - scaled Terminant function by quadrature, by the incomplete
// gamma reduction, and through its erf-type uniform approximation.

#include "debyekit/terminant.hpp"

namespace dk {

std::string method_name(TerminantMethod m) {
    switch (m) {
        case TerminantMethod::Definition: return "definition-quadrature";
        case TerminantMethod::Connected: return "connection-quadrature";
        case TerminantMethod::IncGamma: return "incgamma";
        case TerminantMethod::ErfAsymptotic: return "erf-asymptotic";
    }
    return "?";
}

namespace {

int work_digits_of(const PrecisionContext& ctx) { return ctx.digits() + 10; }

void check_p(const Real& p) {
    if (!(p > 0)) throw DomainError("terminant: p must be positive");
}

// prefactor e^{pi i p} z^{1-p} e^{-z} / (2 pi i)
Cpx prefactor(const Real& p, const Polar& z) {
    Cpx e = expi(pi() * p) * z.pow(1 - p) * exp(-z.value());
    return e / Cpx(Real(0), 2 * pi());
}

// int_0^inf t^{p-1} e^{-t} / (z + t) dt along the ray arg t = alpha
QuadResult ray_integral(const Real& p, const Cpx& z, const Real& alpha, const PrecisionContext& wc) {
    Cpx rot = expi(alpha);
    Cpx phase = expi(alpha * p);  // e^{i(p-1) alpha} from t^{p-1}, times e^{i alpha} from dt
    auto f = [&](const Real& s) -> Cpx {
        Cpx t = rot * s;
        return phase * exp(-t) * pow(s, p - 1) / (z + t);
    };
    return integrate_semiinfinite(f, cos(alpha), wc);
}

// the defining integral continued to -pi <= arg z <= pi by turning the ray
// away from the pole at t = -z
TerminantEval definition(const Real& p, const Polar& z, const PrecisionContext& ctx) {
    TerminantEval out;
    out.p = p;
    out.z = z;
    out.method = TerminantMethod::Definition;
    const int wd = work_digits_of(ctx);
    PrecisionGuard g(wd);
    PrecisionContext wc(wd, ctx.quad_rel_tol() * 1e-3);
    Real pp = at_prec(p);
    Polar zz = at_prec(z);
    const Real lim = pi() / 2 - Real(1) / 4;
    Real alpha = zz.theta / 2;
    if (alpha > lim) alpha = lim;
    if (alpha < -lim) alpha = -lim;
    QuadResult q = ray_integral(pp, zz.value(), alpha, wc);
    Cpx pre = prefactor(pp, zz);
    out.value = at_prec(pre * q.value, ctx.digits());
    out.est_err = at_prec(abs(pre) * q.est_err, ctx.digits());
    return out;
}

}  // namespace

TerminantEval terminant(const Real& p, const Polar& z, const PrecisionContext& ctx) {
    check_p(p);
    if (!(z.r > 0)) throw DomainError("terminant: z must be nonzero");
    const Real P = pi();
    if (z.theta >= 3 * P || z.theta <= -3 * P)
        throw SectorError("terminant: arg z must lie in (-3 pi, 3 pi)");
    if (z.theta >= -P && z.theta <= P) return definition(p, z, ctx);
    const bool below = z.theta < -P;
    TerminantEval base = definition(p, Polar{z.r, below ? Real(z.theta + 2 * P) : Real(z.theta - 2 * P)}, ctx);
    TerminantEval out = base;
    out.z = z;
    out.method = TerminantMethod::Connected;
    {
        PrecisionGuard g(work_digits_of(ctx));
        Cpx e = expi(2 * P * at_prec(p));
        Cpx b = at_prec(base.value);
        out.value = at_prec(below ? e * (b - Cpx(1)) : b / e + Cpx(1), ctx.digits());
    }
    return out;
}

Cpx terminant_via_incgamma(const Real& p, const Polar& z, const PrecisionContext& ctx) {
    check_p(p);
    if (!(z.r > 0)) throw DomainError("terminant: z must be nonzero");
    Cpx out;
    {
        const int wd = work_digits_of(ctx);
        PrecisionGuard g(wd);
        PrecisionContext wc(wd);
        Real pp = at_prec(p);
        Polar zz = at_prec(z);
        Cpx G = upper_incomplete_gamma(Cpx(1 - pp), zz, wc);
        out = expi(pi() * pp) * tgamma(pp) * G / Cpx(Real(0), 2 * pi());
    }
    return at_prec(out, ctx.digits());
}

SmoothingMap c_of_phi(const Real& phi, const PrecisionContext& ctx) {
    const int wd = work_digits_of(ctx);
    SmoothingMap out;
    out.phi = phi;
    Cpx c;
    {
        PrecisionGuard g(wd);
        const Real psi = at_prec(phi) - pi();
        if (abs(psi) >= 2 * pi()) throw DomainError("c_of_phi: |phi - pi| must be below 2 pi");
        const Cpx I(Real(0), Real(1));
        // 1 + i s - e^{i s}, summed as a series for small s to avoid cancellation
        auto w = [&](const Real& s) {
            if (abs(s) >= 1) return Cpx(1) + I * s - expi(s);
            Cpx term = I * s, sum;
            for (int k = 2; k < 400; ++k) {
                term = term * I * s / Real(k);
                sum -= term;
                if (abs(term) <= eps_digits(wd + 2) * abs(sum)) break;
            }
            return sum;
        };
        auto newton = [&](Cpx x, const Real& s) {
            Cpx target = w(s);
            for (int it = 0; it < 200; ++it) {
                Cpx dx = (x * x / Real(2) - target) / x;
                x -= dx;
                if (abs(dx) <= eps_digits(wd - 2) * abs(x)) return x;
            }
            throw DomainError("c_of_phi: Newton iteration did not converge");
        };
        auto series = [&](const Real& s) {
            Cpx s2 = Cpx(s * s);
            return Cpx(s) + I * s2 / Real(6) - Cpx(s * s * s / 36) - I * Cpx(s * s * s * s / 270);
        };
        if (abs(psi) < eps_digits(wd)) {
            c = Cpx(psi);
        } else if (abs(psi) < Real(1) / 2) {
            c = newton(series(psi), psi);
        } else {
            // march along the real line so the iteration stays on the branch fixed near psi = 0
            Real s = psi > 0 ? Real(0.4) : Real(-0.4);
            c = newton(series(s), s);
            int steps = static_cast<int>(ceil(abs(psi - s) / Real(0.2)).convert_to<double>());
            Real h = (psi - s) / steps;
            for (int k = 0; k < steps; ++k) {
                Cpx slope = (I - I * expi(s)) / c;  // dc/dpsi
                s += h;
                Cpx guess = c + slope * h;
                Cpx next = newton(guess, s);
                if (abs(next - guess) > abs(h) * abs(slope) / 2 + Real(1e-3))
                    throw DomainError("c_of_phi: iteration jumped to the other branch");
                c = next;
            }
        }
    }
    out.c = at_prec(c, ctx.digits());
    return out;
}

namespace {

void check_smoothing_sector(const Polar& z) {
    if (z.theta <= -3 * pi() || z.theta >= pi())
        throw SectorError("smoothing approximation needs -3 pi < arg z < pi");
}

}  // namespace

Cpx smoothing_normalized(const Polar& z, const PrecisionContext& ctx) {
    check_smoothing_sector(z);
    Cpx out;
    {
        const int wd = work_digits_of(ctx);
        PrecisionGuard g(wd);
        PrecisionContext wc(wd);
        Cpx c = c_of_phi(-at_prec(z.theta), wc).c;
        Cpx arg = -conj(c) * sqrt(at_prec(z.r) / 2);
        out = Cpx(Real(-1) / 2) + erf_fn(arg, wc) / Real(2);
    }
    return at_prec(out, ctx.digits());
}

Cpx smoothing_asymptotic(const Real& p, const Polar& z, const PrecisionContext& ctx) {
    check_p(p);
    Cpx n = smoothing_normalized(z, ctx);
    PrecisionGuard g(work_digits_of(ctx));
    return at_prec(expi(2 * pi() * at_prec(p)) * at_prec(n), ctx.digits());
}

Real smoothing_error_scale(const Polar& z, const PrecisionContext& ctx) {
    check_smoothing_sector(z);
    PrecisionGuard g(work_digits_of(ctx));
    Cpx c = c_of_phi(-at_prec(z.theta), ctx).c;
    Cpx c2 = c * c;
    Real r = at_prec(z.r);
    return at_prec(exp(-r * c2.re / 2) / sqrt(r), ctx.digits());
}

}  // namespace dk
