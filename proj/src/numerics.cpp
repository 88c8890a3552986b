// numerics.cpp - multiprecision kernels: complex arithmetic, Gamma, erf,
// incomplete Gamma and the two quadrature rules everything else sits on.

#include "debyekit/numerics.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

namespace dk {

// ------------------------------------------------------------- precision

PrecisionContext::PrecisionContext(int digits)
    : PrecisionContext(digits, std::pow(10.0, -(digits - 5))) {}

PrecisionContext::PrecisionContext(int digits, double quad_rel_tol) : digits_(digits), tol_(quad_rel_tol) {
    if (digits < 15) throw DomainError("precision: digits must be >= 15");
    if (!(quad_rel_tol > 0)) throw DomainError("precision: quad_rel_tol must be positive");
    // never ask quadrature for more than the arithmetic can deliver
    tol_ = std::max(tol_, std::pow(10.0, -(digits - 5)));
}

PrecisionContext PrecisionContext::with_digits(int d) const {
    return PrecisionContext(d, std::pow(10.0, -(d - 5)));
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real euler_gamma() {
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

Real ln10() { return log(Real(10)); }

Real eps_digits(int digits) { return pow(Real(10), -digits); }

Real from_rational_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------- complex

Cpx& Cpx::operator*=(const Cpx& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Cpx& Cpx::operator/=(const Cpx& o) {
    // Smith's algorithm keeps intermediate magnitudes sane
    if (abs(o.re) >= abs(o.im)) {
        Real q = o.im / o.re, d = o.re + o.im * q;
        Real r = (re + im * q) / d;
        im = (im - re * q) / d;
        re = std::move(r);
    } else {
        Real q = o.re / o.im, d = o.re * q + o.im;
        Real r = (re * q + im) / d;
        im = (im * q - re) / d;
        re = std::move(r);
    }
    return *this;
}

Cpx operator+(Cpx a, const Cpx& b) { return a += b; }
Cpx operator-(Cpx a, const Cpx& b) { return a -= b; }
Cpx operator*(Cpx a, const Cpx& b) { return a *= b; }
Cpx operator/(Cpx a, const Cpx& b) { return a /= b; }
Cpx operator*(Cpx a, const Real& s) { return a *= s; }
Cpx operator*(const Real& s, Cpx a) { return a *= s; }
Cpx operator/(Cpx a, const Real& s) { return a /= s; }
Cpx operator-(const Cpx& a) { return Cpx(-a.re, -a.im); }

const Cpx& I_unit() {
    thread_local Cpx i;
    thread_local unsigned prec = 0;
    if (prec != Real::default_precision()) {
        prec = Real::default_precision();
        i = Cpx(Real(0), Real(1));
    }
    return i;
}

Cpx conj(const Cpx& z) { return Cpx(z.re, -z.im); }
Real abs(const Cpx& z) { return hypot(z.re, z.im); }
Real norm(const Cpx& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Cpx& z) { return atan2(z.im, z.re); }
Cpx polar(const Real& r, const Real& theta) { return Cpx(r * cos(theta), r * sin(theta)); }
Cpx expi(const Real& theta) { return Cpx(cos(theta), sin(theta)); }

Cpx exp(const Cpx& z) {
    Real m = exp(z.re);
    return Cpx(m * cos(z.im), m * sin(z.im));
}

Cpx log(const Cpx& z) { return Cpx(log(abs(z)), arg(z)); }

Cpx sqrt(const Cpx& z) {
    Real m = abs(z);
    if (m == 0) return Cpx();
    if (z.re >= 0) {
        Real t = sqrt((m + z.re) / 2);
        return Cpx(t, z.im / (2 * t));
    }
    Real t = sqrt((m - z.re) / 2);
    Real s = z.im < 0 ? Real(-t) : t;
    return Cpx(abs(z.im) / (2 * t), s);
}

Cpx pow(const Cpx& z, const Cpx& w) {
    if (z.re == 0 && z.im == 0) {
        if (w.re > 0) return Cpx();
        throw DomainError("pow: 0 to a non-positive power");
    }
    return exp(w * log(z));
}

Cpx pow(const Cpx& z, long n) {
    if (n < 0) return Cpx(1) / pow(z, -n);
    Cpx r(1), b = z;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

Cpx sin(const Cpx& z) { return Cpx(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)); }
Cpx cos(const Cpx& z) { return Cpx(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)); }
Cpx sinh(const Cpx& z) { return Cpx(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)); }
Cpx cosh(const Cpx& z) { return Cpx(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)); }
bool isfinite(const Cpx& z) { return boost::multiprecision::isfinite(z.re) && boost::multiprecision::isfinite(z.im); }

std::string to_string(const Real& x, int digits) { return x.str(digits, std::ios::scientific); }

Cpx Polar::pow(const Real& s) const { return polar(boost::multiprecision::pow(r, s), s * theta); }
Cpx Polar::log() const { return Cpx(boost::multiprecision::log(r), theta); }

// ----------------------------------------------------- special functions

namespace {

// B_0..B_m exact, cached (grows on demand).
const std::vector<mpq_class>& bernoulli_table(int m) {
    static std::mutex mu;
    static std::vector<mpq_class> B{mpq_class(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(B.size()) <= m) {
        int n = static_cast<int>(B.size());
        // sum_{k<=n} C(n+1,k) B_k = 0
        mpq_class s = 0;
        mpz_class c = 1;  // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            s += mpq_class(c) * B[k];
            c = c * (n + 1 - k) / (k + 1);
        }
        B.push_back(-s / mpq_class(n + 1));
    }
    return B;
}

Real q_to_real(const mpq_class& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

// kernels honour whichever is larger: the ambient precision or the context
int work_digits(const PrecisionContext& ctx) {
    return std::max(ctx.digits(), static_cast<int>(Real::default_precision()));
}

bool is_nonpositive_integer(const Cpx& z) { return z.im == 0 && z.re <= 0 && z.re == floor(z.re); }

// log Gamma by Stirling after an upward shift; Re z >= 1/2 assumed.
Cpx lgamma_shifted(const Cpx& z, int digits) {
    double need = 0.4 * (digits + 10);
    Cpx w = z;
    Cpx prod(1);
    while (abs(w) < need || w.re < need / 2) {
        prod *= w;
        w += Cpx(1);
    }
    Cpx lw = log(w);
    Cpx s = (w - Cpx(Real(0.5))) * lw - w + Cpx(log(2 * pi()) / 2);
    Cpx winv = Cpx(1) / w;
    Cpx w2inv = winv * winv;
    Cpx pw = winv;
    Real tol = eps_digits(digits + 5);
    for (int k = 1;; ++k) {
        const auto& B = bernoulli_table(2 * k);
        Cpx term = pw * (q_to_real(B[2 * k]) / (Real(2 * k) * Real(2 * k - 1)));
        s += term;
        if (abs(term) < tol * abs(s)) break;
        if (k > 4 * digits) throw DomainError("gamma: Stirling series failed to converge");
        pw *= w2inv;
    }
    return s - log(prod);
}

}  // namespace

Cpx gamma_fn(const Cpx& z, const PrecisionContext& ctx) {
    if (is_nonpositive_integer(z)) throw DomainError("gamma: pole at non-positive integer");
    if (z.im == 0) return Cpx(boost::multiprecision::tgamma(z.re));
    int d = work_digits(ctx) + 10;
    Cpx r;
    {
        PrecisionGuard g(d);
        Cpx zz = at_prec(z);
        if (zz.re < Real(0.5)) {
            // reflection
            Cpx one_minus = Cpx(1) - zz;
            Cpx gm = exp(lgamma_shifted(one_minus, d));
            r = Cpx(pi()) / (sin(Cpx(pi()) * zz) * gm);
        } else {
            r = exp(lgamma_shifted(zz, d));
        }
    }
    return at_prec(r);
}

namespace {

Cpx erf_series(const Cpx& z, int digits) {
    Cpx z2 = z * z;
    Real az2 = norm(z);
    double guard = std::max(0.0, static_cast<double>((az2 + z2.re) / log(Real(10))));
    PrecisionGuard g(digits + static_cast<int>(guard) + 10);
    Cpx zz = at_prec(z);
    Cpx mz2 = -(zz * zz);
    Cpx a = zz, s = zz;
    Real tol = eps_digits(digits + 5);
    for (long n = 1;; ++n) {
        a = a * mz2 / Real(n);
        Cpx t = a / Real(2 * n + 1);
        s += t;
        if (n > az2 && abs(t) <= tol * abs(s)) break;
    }
    Cpx r = s * (2 / sqrt(pi()));
    return r;
}

// erfc by the Laplace continued fraction (Re z > 0), modified Lentz.
Cpx erfc_cf(const Cpx& z, int digits) {
    PrecisionGuard g(digits + 10);
    Cpx zz = at_prec(z);
    Real tiny = eps_digits(digits * 3);
    Real tol = eps_digits(digits + 5);
    Cpx f = zz, C = zz, D(0);
    for (long n = 1; n < 2000000; ++n) {
        Real an = Real(n) / 2;
        D = zz + an * D;
        if (abs(D) < tiny) D = Cpx(tiny);
        C = zz + Cpx(an) / C;
        if (abs(C) < tiny) C = Cpx(tiny);
        D = Cpx(1) / D;
        Cpx delta = C * D;
        f *= delta;
        if (abs(delta - Cpx(1)) < tol) {
            return exp(-(zz * zz)) / (sqrt(pi()) * f);
        }
    }
    throw DomainError("erf: continued fraction did not converge");
}

}  // namespace

Cpx erf_fn(const Cpx& z, const PrecisionContext& ctx) {
    if (z.re < 0) return -erf_fn(-z, ctx);
    int d = work_digits(ctx);
    Real az = abs(z);
    Cpx r;
    if (az > 3 && z.re >= az / 2) {
        Cpx c = erfc_cf(z, d);
        PrecisionGuard g(d + 10);
        r = Cpx(1) - c;
    } else {
        r = erf_series(z, d);
    }
    return at_prec(r);
}

namespace {

// Gamma(a, z) at the current working precision with given guard.
Cpx igamma_work(const Cpx& a, const Polar& z, int digits) {
    Real tol = eps_digits(digits + 5);
    Cpx zv = z.value();
    Real az = z.r;
    PrecisionContext ctx(std::max(15, digits));
    if (is_nonpositive_integer(a)) {
        long n = static_cast<long>(-a.re);
        // E1 by its Maclaurin series, then downward in the order
        Cpx s(0), term(1);
        for (long k = 1;; ++k) {
            term = term * (-zv) / Real(k);
            Cpx t = term / Real(k);
            s += t;
            if (k > az && abs(t) <= tol * (abs(s) + 1)) break;
        }
        Cpx g = Cpx(-euler_gamma()) - z.log() - s;
        Cpx emz = exp(-zv);
        for (long k = 1; k <= n; ++k) {
            // Gamma(-k) = (z^{-k} e^{-z} - Gamma(-k+1)) / k
            g = (pow(zv, -k) * emz - g) / Real(k);
        }
        return g;
    }
    Cpx S;
    if (zv.re >= 0) {
        // e^{-z} sum z^k / (a)_{k+1}
        Cpx term = Cpx(1) / a, sum = term;
        for (long k = 1;; ++k) {
            term = term * zv / (a + Cpx(Real(k)));
            sum += term;
            if (k > 2 * az && abs(term) <= tol * abs(sum)) break;
            if (k > 100000) throw DomainError("incomplete gamma: series failed");
        }
        S = exp(-zv) * sum;
    } else {
        Cpx term(1), sum = Cpx(1) / a;
        for (long k = 1;; ++k) {
            term = term * (-zv) / Real(k);
            Cpx t = term / (a + Cpx(Real(k)));
            sum += t;
            if (k > 2 * az && abs(t) <= tol * abs(sum)) break;
            if (k > 100000) throw DomainError("incomplete gamma: series failed");
        }
        S = sum;
    }
    Cpx za = exp(a * z.log());
    return gamma_fn(a, ctx) - za * S;
}

}  // namespace

Cpx upper_incomplete_gamma(const Cpx& a, const Polar& z, const PrecisionContext& ctx) {
    if (z.r == 0) {
        if (a.re > 0) return gamma_fn(a, ctx);
        throw DomainError("incomplete gamma: z = 0 with Re a <= 0");
    }
    int d = work_digits(ctx);
    double zr = z.r.convert_to<double>();
    int guard = static_cast<int>(2 * zr / std::log(10.0)) + 10;
    double am = std::hypot(a.re.convert_to<double>(), a.im.convert_to<double>());
    guard += static_cast<int>(am * std::log10(1 + zr) / 2);
    Cpx prev;
    bool have = false;
    for (int attempt = 0; attempt < 6; ++attempt, guard += 30) {
        PrecisionGuard g(d + guard);
        Cpx aa = at_prec(a);
        Polar zz = at_prec(z);
        Cpx cur = igamma_work(aa, zz, d + guard);
        if (have && abs(cur - prev) <= eps_digits(d + 2) * abs(cur)) {
            PrecisionGuard g2(d);
            return at_prec(cur);
        }
        prev = cur;
        have = true;
    }
    throw DomainError("incomplete gamma: precision escalation did not settle");
}

Cpx upper_incomplete_gamma(const Cpx& a, const Cpx& z, const PrecisionContext& ctx) {
    if (z.im == 0 && z.re < 0) throw BranchError("incomplete gamma: z on the negative real axis; give arg(z) explicitly");
    return upper_incomplete_gamma(a, Polar{abs(z), arg(z)}, ctx);
}

// -------------------------------------------------------------- quadrature

QuadResult integrate_semiinfinite(const Integrand& f, const Real& decay_rate, const PrecisionContext& ctx) {
    if (!(decay_rate > 0)) throw DomainError("integrate_semiinfinite: decay rate must be positive");
    const Real scale = 1 / decay_rate;
    const Real halfpi = pi() / 2;
    const Real cut = eps_digits(ctx.digits() + 10);
    const Real noise = eps_digits(static_cast<int>(Real::default_precision()) - 3);
    const Real h0 = Real(1) / 4;
    const int jlim = 40;  // |tau| <= 10
    QuadResult out;

    auto term = [&](const Real& tau) {
        Real t = scale * exp(halfpi * sinh(tau));
        Real w = t * halfpi * cosh(tau);
        ++out.evaluations;
        if (t == 0) return Cpx();
        return f(t) * w;
    };

    // Level 0: scan outwards to fix the truncation window.
    Cpx sum = term(Real(0));
    Real runmax = abs(sum), absum = runmax;
    int jmax = 0, jmin = 0;
    Real prev = runmax;
    for (int j = 1; j <= jlim; ++j) {
        Cpx v = term(h0 * j);
        Real a = abs(v);
        sum += v;
        absum += a;
        runmax = rmax(runmax, a);
        jmax = j;
        if (a <= cut * runmax && a <= prev && j > 2) break;
        prev = a;
    }
    prev = abs(sum);
    for (int j = 1; j <= jlim; ++j) {
        Cpx v = term(-h0 * j);
        Real a = abs(v);
        sum += v;
        absum += a;
        runmax = rmax(runmax, a);
        jmin = -j;
        if (a <= cut * runmax && j > 2) break;
        prev = a;
    }
    Cpx S = sum * h0;
    const Real tlo = h0 * jmin, thi = h0 * jmax;
    Real h = h0;
    Real prev_diff = 0;
    for (int level = 1; level <= 12; ++level) {
        h /= 2;
        Cpx add;
        for (Real tau = tlo + h; tau < thi; tau += 2 * h) {
            Cpx v = term(tau);
            absum += abs(v);
            add += v;
        }
        Cpx Snew = S / Real(2) + add * h;
        Real diff = abs(Snew - S);
        S = Snew;
        Real floor_ = noise * absum * h;
        const Real want = rmax(Real(ctx.quad_rel_tol()) * abs(S), floor_);
        if (level >= 3 && diff <= want) {
            out.value = S;
            out.est_err = rmax(diff, floor_);
            return out;
        }
        // double-exponential rules gain digits geometrically per halving: with
        // relative differences 10^-a then 10^-b (b > 1.5a) the next is ~10^-(b^2/a)
        if (level >= 3 && prev_diff > 0 && diff > 0 && abs(S) > 0) {
            double a = -log10(prev_diff / abs(S)).convert_to<double>();
            double b = -log10(diff / abs(S)).convert_to<double>();
            if (a > 2 && b > 1.5 * a) {
                Real next = abs(S) * pow(Real(10), Real(-b * std::min(b / a, 1.5)));
                if (next * 100 <= want) {
                    out.value = S;
                    out.est_err = rmax(next, floor_);
                    return out;
                }
            }
        }
        prev_diff = diff;
    }
    throw QuadratureError("integrate_semiinfinite: refinements disagree beyond tolerance");
}

namespace {

struct GLRule {
    std::vector<Real> x, w;
};

const GLRule& gauss_legendre(int m) {
    thread_local std::map<std::pair<int, unsigned>, GLRule> cache;
    auto key = std::make_pair(m, Real::default_precision());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    GLRule rule;
    const Real p = pi();
    Real tol = eps_digits(static_cast<int>(Real::default_precision()) - 2);
    for (int k = 1; k <= m; ++k) {
        Real x = cos(p * (Real(k) - Real(0.25)) / (Real(m) + Real(0.5)));
        Real dp;
        for (int it2 = 0; it2 < 100; ++it2) {
            Real p0 = 1, p1 = x;
            for (int j = 2; j <= m; ++j) {
                Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) <= tol) break;
        }
        // derivative at the converged node
        Real p0 = 1, p1 = x;
        for (int j = 2; j <= m; ++j) {
            Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1);
        rule.x.push_back(x);
        rule.w.push_back(2 / ((1 - x * x) * dp * dp));
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace

QuadResult integrate_panels(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                            int panels) {
    QuadResult out;
    if (a == b) return out;
    int m = static_cast<int>(0.6 * ctx.digits()) + 10;
    const GLRule& rule = gauss_legendre(m);
    auto gl = [&](const Real& lo, const Real& hi) {
        Real c = (lo + hi) / 2, r = (hi - lo) / 2;
        Cpx s;
        for (std::size_t k = 0; k < rule.x.size(); ++k) s += f(c + r * rule.x[k]) * rule.w[k];
        out.evaluations += static_cast<long>(rule.x.size());
        return s * r;
    };
    struct Piece {
        Real lo, hi;
        Cpx whole;
        int depth;
    };
    std::vector<Piece> work;
    panels = std::max(1, panels);
    Real len = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        Real lo = a + len * i, hi = (i + 1 == panels) ? b : a + len * (i + 1);
        work.push_back({lo, hi, gl(lo, hi), 0});
    }
    Real scale = 0;
    for (auto& p : work) scale += abs(p.whole);
    const Real tol = Real(ctx.quad_rel_tol());
    const Real noise = eps_digits(static_cast<int>(Real::default_precision()) - 5);
    const Real total = abs(b - a);
    Cpx acc;
    Real err = 0;
    while (!work.empty()) {
        Piece p = std::move(work.back());
        work.pop_back();
        Real mid = (p.lo + p.hi) / 2;
        Cpx l = gl(p.lo, mid), r = gl(mid, p.hi);
        Cpx halves = l + r;
        Real diff = abs(halves - p.whole);
        Real share = abs(p.hi - p.lo) / total;
        scale = rmax(scale, abs(halves));
        if (diff <= rmax(tol * scale * share, noise * scale)) {
            acc += halves;
            err += diff;
            continue;
        }
        if (p.depth > 40) throw QuadratureError("integrate_panels: bisection depth exceeded");
        work.push_back({mid, p.hi, r, p.depth + 1});
        work.push_back({p.lo, mid, l, p.depth + 1});
    }
    out.value = acc;
    out.est_err = err;
    return out;
}

}  // namespace dk
