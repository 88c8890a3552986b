// latecoeff.cpp - late-coefficient asymptotics and the worked-example tables.

#include "debyekit/latecoeff.hpp"

#include "debyekit/coeffs.hpp"

#include <sstream>

namespace dk {

namespace {

int work_digits_of(const PrecisionContext& ctx) { return ctx.digits() + 20; }

// Gamma(n - m)/Gamma(n) for m = 0..M by downward recurrence
std::vector<Real> gamma_ratios(int n, int M) {
    std::vector<Real> g(M + 1);
    g[0] = 1;
    for (int m = 0; m < M; ++m) g[m + 1] = g[m] / (n - m - 1);
    return g;
}

struct USeries {
    Cpx first, second;
    Real bound1, bound2;
};

// (-1)^n Gamma(n) / (2 pi (2 i s)^n) sum_{m<M} (2 i s)^m U_m Gamma(n-m)/Gamma(n)
// and its remainder bound, for s = tan b - b and s = tan b - b + pi
USeries u_series(int n, const Real& beta, int M, const PrecisionContext& wc) {
    USeries out;
    Real lam = tan(beta) - beta;
    std::vector<Real> g = gamma_ratios(n, M);
    const Cpx I(Real(0), Real(1));
    Real gn = tgamma(Real(n));
    auto one = [&](const Real& s, Cpx& value, Real& bound) {
        Cpx w = I * (2 * s);  // 2 i s
        Cpx sum, wm(1);
        for (int m = 0; m < M; ++m) {
            sum += wm * u_at_beta(m, beta, wc) * g[m];
            wm = wm * w;
        }
        // (2 i s)^n = (2 s)^n i^n
        Real mag = gn / (2 * pi() * pow(2 * s, n));
        Cpx in = (n % 4 == 0) ? Cpx(1) : (n % 4 == 1) ? I : (n % 4 == 2) ? Cpx(-1) : -I;
        Cpx pre = Cpx(n % 2 ? -mag : mag) / in;
        value = pre * sum;
        bound = mag * pow(2 * s, M) * abs(u_at_beta(M, beta, wc)) * g[M];
    };
    one(lam, out.first, out.bound1);
    one(lam + pi(), out.second, out.bound2);
    return out;
}

void check_u(int n, const Real& beta, int M) {
    if (n < 1) throw DomainError("u_late: n must be at least 1");
    if (M < 0 || M > n - 1) throw DomainError("u_late: M must lie in 0..n-1");
    if (!(beta > 0 && beta < pi() / 2)) throw DomainError("beta must lie in (0, pi/2)");
}

void check_d(int n, int M) {
    if (n < 2) throw DomainError("d_late: n must be at least 2");
    if (M < 0 || M > n - 2) throw DomainError("d_late: M must lie in 0..n-2");
}

// (2 pi)^{2m/3} |d_2m| Gamma((2m+1)/3) Gamma(2(n-m)/3) / Gamma((2n+1)/3)
Real d_bound_term(int n, int m) {
    return pow(2 * pi(), Real(2 * m) / 3) * abs(d_coeff(m).value()) * tgamma(Real(2 * m + 1) / 3) *
           tgamma(Real(2 * (n - m)) / 3) / tgamma(Real(2 * n + 1) / 3);
}

}  // namespace

LatePrediction u_late(int n, const Real& beta, int M, const PrecisionContext& ctx) {
    check_u(n, beta, M);
    LatePrediction out;
    out.n = n;
    out.M = M;
    out.bound_rule = "inverse-factorial-both-singulants";
    {
        PrecisionGuard g(work_digits_of(ctx));
        PrecisionContext wc(work_digits_of(ctx));
        USeries s = u_series(n, at_prec(beta), M, wc);
        out.first = s.first;
        out.second = s.second;
        out.value = s.first + s.second;
        out.err_bound = s.bound1 + s.bound2;
    }
    out.first = at_prec(out.first, ctx.digits());
    out.second = at_prec(out.second, ctx.digits());
    out.value = at_prec(out.value, ctx.digits());
    out.err_bound = at_prec(out.err_bound, ctx.digits());
    return out;
}

Cpx u_late_dingle(int n, const Real& beta, int M, const PrecisionContext& ctx) {
    return u_late(n, beta, M, ctx).first;
}

LatePrediction d_late(int n, int M, const PrecisionContext& ctx) {
    check_d(n, M);
    LatePrediction out;
    out.n = n;
    out.M = M;
    {
        PrecisionGuard g(work_digits_of(ctx));
        const Real p = pi();
        const Real s3 = sqrt(Real(3));
        Real gn = tgamma(Real(2 * n + 1) / 3);
        Real sum = 0;
        for (int m = 0; m < M; ++m) {
            if (m % 3 == 1) continue;  // sin((2m+1) pi/3) = 0
            Real t = 2 * s3 / 3 * pow(2 * p, Real(2 * m) / 3) * d_coeff(m).value() * sin(Real(2 * m + 1) * p / 3) *
                     tgamma(Real(2 * m + 1) / 3) * tgamma(Real(2 * (n - m)) / 3) / gn;
            sum += m % 2 ? -t : t;
        }
        Real pre = 1 / (s3 * p * pow(2 * p, Real(2 * n) / 3));
        if (n % 2) pre = -pre;
        out.first = Cpx(pre * sum);
        out.value = out.first;
        Real b;
        switch (M % 3) {
            case 0:
                b = d_bound_term(n, M) + d_bound_term(n, M + 1);
                out.bound_rule = "late-d-two-term";
                break;
            case 1:
                b = d_bound_term(n, M + 1);
                out.bound_rule = "late-d-next-nonzero";
                break;
            default:
                b = d_bound_term(n, M);
                out.bound_rule = "late-d-first-omitted";
        }
        out.err_bound = abs(pre) * b;
    }
    out.first = at_prec(out.first, ctx.digits());
    out.value = at_prec(out.value, ctx.digits());
    out.err_bound = at_prec(out.err_bound, ctx.digits());
    return out;
}

MeisselLambda meissel_lambda(int n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("meissel_lambda: n must be at least 1");
    MeisselLambda out;
    {
        PrecisionGuard g(work_digits_of(ctx));
        Real e = pow(Real(6), -Real(2 * n + 1) / 3) * d_coeff(n).value() / (2 * n + 1);
        out.exact = n % 2 ? Real(-e) : e;
        out.asymptotic = 1 / (cbrt(Real(18)) * tgamma(Real(2) / 3) * pow(n + Real(1) / 3, Real(4) / 3) *
                              pow(12 * pi(), Real(2 * n) / 3));
    }
    out.exact = at_prec(out.exact, ctx.digits());
    out.asymptotic = at_prec(out.asymptotic, ctx.digits());
    return out;
}

int optimal_M(int n, LateKind kind, const Real& beta) {
    if (n < 2) throw DomainError("optimal_M: n must be at least 2");
    PrecisionContext ctx(30);
    PrecisionGuard g(30);
    int top = kind == LateKind::U ? n - 1 : n - 2;
    int best = 0;
    Real best_b = -1;
    for (int M = 0; M <= top; ++M) {
        Real b = kind == LateKind::U ? u_late(n, beta, M, ctx).err_bound : d_late(n, M, ctx).err_bound;
        if (best_b < 0 || b < best_b) {
            best_b = b;
            best = M;
        }
    }
    return best;
}

std::vector<Table1Row> table1(const PrecisionContext& ctx_in) {
    PrecisionContext ctx(std::max(ctx_in.digits(), 40));
    PrecisionGuard g(ctx.digits());
    const std::pair<const char*, Real> rows[] = {
        {"pi/6", pi() / 6}, {"pi/3", pi() / 3}, {"6pi/13", 6 * pi() / 13}, {"7pi/15", 7 * pi() / 15}};
    std::vector<Table1Row> out;
    for (const auto& [label, beta] : rows) {
        Table1Row r;
        r.beta_label = label;
        r.beta = beta;
        r.exact = u_at_beta(r.n, beta, ctx).re;
        LatePrediction lp = u_late(r.n, beta, r.M, ctx);
        r.dingle = lp.first.re;
        r.approx = lp.value.re;
        r.dingle_error = r.exact - r.dingle;
        r.approx_error = r.exact - r.approx;
        r.bound = lp.err_bound;
        out.push_back(r);
    }
    return out;
}

std::vector<Table2Row> table2(const PrecisionContext& ctx_in) {
    PrecisionContext ctx(std::max(ctx_in.digits(), 40));
    PrecisionGuard g(ctx.digits());
    std::vector<Table2Row> out;
    for (auto [n, M] : {std::pair{5, 2}, {10, 5}, {25, 12}, {50, 25}}) {
        Table2Row r;
        r.n = n;
        r.M = M;
        r.exact = d_coeff(n).value();
        LatePrediction lp = d_late(n, M, ctx);
        r.approx = lp.value.re;
        r.error = r.exact - r.approx;
        r.bound = lp.err_bound;
        r.bound_rule = lp.bound_rule;
        out.push_back(r);
    }
    return out;
}

std::string mantissa_format(const Real& x, int sig) {
    if (x == 0) return "0";
    std::string s = x.str(sig - 1, std::ios_base::scientific);  // -d.ddde+XX
    auto e = s.find('e');
    std::string mant = s.substr(0, e);
    int ex = std::stoi(s.substr(e + 1));
    bool neg = mant[0] == '-';
    std::string digits;
    for (char c : mant)
        if (c >= '0' && c <= '9') digits += c;
    std::ostringstream os;
    os << (neg ? "-" : "") << "0." << digits << " x 10^" << ex + 1;
    return os.str();
}

}  // namespace dk
