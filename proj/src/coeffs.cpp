// coeffs.cpp - exact generation of U_n(x) and d_{2n}.
//
// Every route here works in rational arithmetic; floats appear only where a
// Gamma ratio is deliberately evaluated numerically so that the cross-check
// routes stay independent of the primary recurrences.

#include "debyekit/coeffs.hpp"

#include <mpfr.h>

#include <deque>
#include <memory>
#include <mutex>
#include <sstream>

namespace dk {

// ------------------------------------------------------------ polynomials

namespace {

void trim(QPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty()) p.push_back(0);
}

mpq_class factorial_q(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return mpq_class(f);
}

mpq_class binom_q(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return mpq_class(b);
}

QPoly integrate0(const QPoly& p) {  // int_0^x
    QPoly r(p.size() + 1, mpq_class(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        r[k + 1] = p[k] / mpq_class(static_cast<long>(k + 1));
    }
    trim(r);
    return r;
}

QPoly derivative(const QPoly& p) {
    if (p.size() <= 1) return QPoly{0};
    QPoly r(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * static_cast<long>(k);
    trim(r);
    return r;
}

}  // namespace

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    trim(r);
    return r;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly qpoly_scale(const QPoly& a, const mpq_class& s) {
    QPoly r(a);
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

bool qpoly_equal(const QPoly& a, const QPoly& b) {
    QPoly x(a), y(b);
    trim(x);
    trim(y);
    return x == y;
}

Real to_real(const mpq_class& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Cpx qpoly_eval(const QPoly& p, const Cpx& x) {
    Cpx acc;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * x;
        acc += Cpx(to_real(p[k]));
    }
    return acc;
}

std::string qpoly_to_string(const QPoly& p, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        mpq_class c = p[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        os << mpq_class(abs(c)).get_str();
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

QPoly UPolynomial::dense() const {
    QPoly p(3 * n + 1, mpq_class(0));
    for (const auto& [k, c] : terms) p[k] = c;
    trim(p);
    return p;
}

// ------------------------------------------------------------------ U_n

namespace {

UPolynomial to_upoly(int n, const QPoly& p) {
    UPolynomial u;
    u.n = n;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) u.terms[static_cast<int>(k)] = p[k];
    return u;
}

}  // namespace

const UPolynomial& u_poly(int n) {
    if (n < 0) throw DomainError("u_poly: n must be >= 0");
    static std::mutex mu;
    static std::deque<UPolynomial> memo;
    static std::deque<QPoly> dense;
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) {
        dense.push_back(QPoly{1});
        memo.push_back(to_upoly(0, dense.back()));
    }
    const QPoly half_x2_1mx2{0, 0, mpq_class(1, 2), 0, mpq_class(-1, 2)};
    const QPoly one_m5t2{mpq_class(1, 8), 0, mpq_class(-5, 8)};
    while (static_cast<int>(memo.size()) <= n) {
        const QPoly& prev = dense.back();
        QPoly next = qpoly_add(qpoly_mul(half_x2_1mx2, derivative(prev)), integrate0(qpoly_mul(one_m5t2, prev)));
        dense.push_back(next);
        memo.push_back(to_upoly(static_cast<int>(memo.size()), next));
    }
    return memo[static_cast<std::size_t>(n)];
}

std::vector<std::vector<mpq_class>> u_coeff_meijer(int n_max) {
    std::vector<std::vector<mpq_class>> u(static_cast<std::size_t>(n_max + 1));
    u[0] = {mpq_class(1)};
    for (int n = 1; n <= n_max; ++n) {
        u[n].assign(static_cast<std::size_t>(n + 1), mpq_class(0));
        for (int k = 0; k <= n; ++k) {
            mpq_class a = k <= n - 1 ? u[n - 1][k] : mpq_class(0);
            mpq_class b = k >= 1 ? u[n - 1][k - 1] : mpq_class(0);
            mpq_class f(2 * n + 4 * k - 1, 4 * (2 * n - 1) * (n + 2 * k));
            f.canonicalize();
            u[n][k] = f * (mpq_class(2 * n + 4 * k - 1) * a - mpq_class(2 * n + 4 * k - 5) * b);
        }
    }
    return u;
}

UPolynomial u_from_meijer(int n, const std::vector<std::vector<mpq_class>>& table) {
    // U_n = (2n)!/(2^{2n} n!) x^n sum_k u_{n,k} x^{2k}
    mpq_class pre = factorial_q(2 * n) / (factorial_q(n) * mpq_class(mpz_class(1) << (2 * n)));
    UPolynomial u;
    u.n = n;
    for (int k = 0; k <= n; ++k) {
        mpq_class c = pre * table[n][k];
        if (c != 0) u.terms[n + 2 * k] = c;
    }
    return u;
}

Cpx u_eval(int n, const Cpx& x, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.digits() + 10);
    Cpx xx = at_prec(x);
    Cpx v = qpoly_eval(u_poly(n).dense(), xx);
    PrecisionGuard g2(ctx.digits());
    return at_prec(v);
}

Cpx u_at_beta(int n, const Real& beta, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.digits() + 10);
    Real b = at_prec(beta);
    Cpx x(Real(0), cos(b) / sin(b));
    return u_eval(n, x, ctx);
}

// ---------------------------------------------------- Bell / Potential

SeriesCoeffs series_coeffs(SeriesKind kind, int k_max) {
    SeriesCoeffs s{kind, {}};
    for (int i = 0; i <= k_max; ++i) {
        if (kind == SeriesKind::A) {
            if (i % 2 == 0) s.values.push_back(QPoly{1 / factorial_q(i + 2)});
            else s.values.push_back(QPoly{0, -1 / factorial_q(i + 2)});
        } else {
            if (i % 2 == 0) s.values.push_back(QPoly{1 / factorial_q(i + 3)});
            else s.values.push_back(QPoly{0});
        }
    }
    return s;
}

const PolyTables& poly_tables(SeriesKind kind, int n_max) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<PolyTables>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), n_max);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;

    auto t = std::make_unique<PolyTables>();
    t->kind = kind;
    t->n_max = n_max;
    SeriesCoeffs s = series_coeffs(kind, n_max + 1);
    const mpq_class a0 = s.values[0][0];
    std::vector<QPoly> normalised;
    for (auto& v : s.values) normalised.push_back(qpoly_scale(v, 1 / a0));

    std::size_t N = static_cast<std::size_t>(n_max + 1);
    t->bell.assign(N, std::vector<QPoly>(N, QPoly{0}));
    t->bell[0][0] = QPoly{1};
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) {
            QPoly acc{0};
            for (int j = 1; j <= n - k + 1; ++j) acc = qpoly_add(acc, qpoly_mul(s.values[j], t->bell[n - j][k - 1]));
            t->bell[n][k] = acc;
        }
    t->potential.assign(N, std::vector<QPoly>(N, QPoly{0}));
    t->potential[0][0] = QPoly{1};
    for (int k = 1; k <= n_max; ++k)
        for (int n = 0; n <= n_max; ++n) {
            QPoly acc{0};
            for (int j = 0; j <= n; ++j) acc = qpoly_add(acc, qpoly_mul(normalised[j], t->potential[k - 1][n - j]));
            t->potential[k][n] = acc;
        }
    return *memo.emplace(key, std::move(t)).first->second;
}

Cpx u_via_bell(int n, const Cpx& x, const PrecisionContext& ctx) {
    if (n == 0) return Cpx(1);
    const PolyTables& T = poly_tables(SeriesKind::A, 2 * n);
    PrecisionGuard g(ctx.digits() + 20);
    Cpx xx = at_prec(x);
    Real sp = sqrt(pi());
    Cpx sum;
    for (int k = 0; k <= 2 * n; ++k) {
        Real w = pow(Real(2), k) * tgamma(Real(n + k) + Real(0.5)) / (sp * tgamma(Real(k + 1)));
        if (k % 2) w = -w;
        sum += qpoly_eval(T.bell[2 * n][k], xx) * w;
    }
    Cpx v = sum * pow(Cpx(2) * xx, n);
    if (n % 2) v = -v;
    PrecisionGuard g2(ctx.digits());
    return at_prec(v);
}

Cpx u_via_potential(int n, const Cpx& x, const PrecisionContext& ctx) {
    if (n == 0) return Cpx(1);
    const PolyTables& T = poly_tables(SeriesKind::A, 2 * n);
    PrecisionGuard g(ctx.digits() + 20);
    Cpx xx = at_prec(x);
    Cpx sum;
    for (int k = 0; k <= 2 * n; ++k) {
        Real w = to_real(binom_q(2 * n, k)) / Real(2 * n + 2 * k + 1);
        if (k % 2) w = -w;
        sum += qpoly_eval(T.potential[k][2 * n], xx) * w;
    }
    Real pre = 2 * tgamma(Real(3 * n) + Real(1.5)) / (sqrt(pi()) * tgamma(Real(2 * n + 1)));
    Cpx v = sum * pre * pow(Cpx(2) * xx, n);
    if (n % 2) v = -v;
    PrecisionGuard g2(ctx.digits());
    return at_prec(v);
}

mpq_class rising(const mpq_class& a, int k) {
    mpq_class r = 1;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

QPoly comtet_potential(SeriesKind kind, const mpq_class& rho, int k) {
    if (k < 0) throw DomainError("comtet_potential: k must be >= 0");
    mpq_class r(rho);
    r.canonicalize();
    if (r.get_den() == 1 && r >= 0 && r <= k) throw DomainError("comtet_potential: pole of the Gamma ratio (rho a nonnegative integer <= k)");
    if (k == 0) return QPoly{1};
    const PolyTables& T = poly_tables(kind, k);
    mpq_class mr = -r;
    mpq_class pre = rising(mr, k + 1) / factorial_q(k);
    QPoly acc{0};
    for (int j = 0; j <= k; ++j) {
        mpq_class w = binom_q(k, j) / (mr + j);
        if (j % 2) w = -w;
        acc = qpoly_add(acc, qpoly_scale(T.potential[j][k], w));
    }
    return qpoly_scale(acc, pre);
}

// ---------------------------------------------------------------- d_{2n}

Real DCoefficient::value() const { return to_real(rat) * pow(cbrt(Real(6)), j); }

std::string DCoefficient::to_string() const {
    std::string s = rat.get_str();
    if (j == 1) s += "*6^(1/3)";
    if (j == 2) s += "*6^(2/3)";
    return s;
}

namespace {

// P_n of the linear recurrence, kept with their antiderivatives.
struct Lauwerier {
    std::deque<QPoly> P, intP;
    std::deque<DCoefficient> d;
};

}  // namespace

const DCoefficient& d_coeff(int n) {
    if (n < 0) throw DomainError("d_coeff: n must be >= 0");
    static std::mutex mu;
    static Lauwerier L;
    std::lock_guard<std::mutex> lock(mu);
    static std::vector<mpq_class> inv_fact;  // 1/(2k+3)!
    while (static_cast<int>(L.d.size()) <= n) {
        int m = static_cast<int>(L.d.size());
        QPoly Pm;
        if (m == 0) {
            Pm = QPoly{1};
        } else {
            while (static_cast<int>(inv_fact.size()) <= m) inv_fact.push_back(1 / factorial_q(2 * static_cast<int>(inv_fact.size()) + 3));
            Pm = QPoly{0};
            for (int k = 1; k <= m; ++k) Pm = qpoly_add(Pm, qpoly_scale(L.intP[m - k], -inv_fact[k]));
        }
        L.P.push_back(Pm);
        L.intP.push_back(integrate0(Pm));
        // int_0^inf t^{s-1+j} e^{-t/6} dt = Gamma(s+j) 6^{s+j}, s = (2m+1)/3
        mpq_class s(2 * m + 1, 3);
        s.canonicalize();
        mpq_class acc = 0, six_j = 1;
        for (std::size_t jj = 0; jj < Pm.size(); ++jj) {
            if (Pm[jj] != 0) acc += Pm[jj] * rising(s, static_cast<int>(jj)) * six_j;
            six_j *= 6;
        }
        int q = (2 * m + 1) / 3, r = (2 * m + 1) % 3;
        mpz_class six_q;
        mpz_ui_pow_ui(six_q.get_mpz_t(), 6, static_cast<unsigned long>(q));
        DCoefficient dc;
        dc.n = m;
        dc.rat = acc * mpq_class(six_q);
        dc.j = r;
        L.d.push_back(dc);
    }
    return L.d[static_cast<std::size_t>(n)];
}

Cpx d_via_bell(int n, const PrecisionContext& ctx) {
    const PolyTables& T = poly_tables(SeriesKind::B, std::max(2 * n, 1));
    PrecisionGuard g(ctx.digits() + 20);
    Real s = Real(2 * n + 1) / 3;
    Real sum = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        Real w = pow(Real(6), k) * tgamma(s + k) / tgamma(Real(k + 1));
        if (k % 2) w = -w;
        sum += to_real(T.bell[2 * n][k][0]) * w;
    }
    Real v = pow(Real(6), s) / tgamma(s) * sum;
    PrecisionGuard g2(ctx.digits());
    return Cpx(Real(v));
}

mpq_class generalized_bernoulli(int m, int kappa, const mpq_class& lambda) {
    if (m < 0) throw DomainError("generalized_bernoulli: m must be >= 0");
    std::size_t L = static_cast<std::size_t>(m + 1);
    auto mul = [&](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
        std::vector<mpq_class> r(L, mpq_class(0));
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = 0; i + j < L; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    // (e^z - 1)/z
    std::vector<mpq_class> e1(L);
    for (std::size_t k = 0; k < L; ++k) e1[k] = 1 / factorial_q(static_cast<int>(k) + 1);
    std::vector<mpq_class> base = e1;
    if (kappa > 0) {
        // reciprocal series: z/(e^z - 1)
        std::vector<mpq_class> inv(L, mpq_class(0));
        inv[0] = 1;
        for (std::size_t k = 1; k < L; ++k) {
            mpq_class s = 0;
            for (std::size_t j = 1; j <= k; ++j) s += e1[j] * inv[k - j];
            inv[k] = -s;
        }
        base = inv;
    }
    std::vector<mpq_class> pw(L, mpq_class(0));
    pw[0] = 1;
    for (int i = 0; i < std::abs(kappa); ++i) pw = mul(pw, base);
    std::vector<mpq_class> ex(L);
    mpq_class lp = 1;
    for (std::size_t k = 0; k < L; ++k) {
        ex[k] = lp / factorial_q(static_cast<int>(k));
        lp *= lambda;
    }
    pw = mul(pw, ex);
    return pw[static_cast<std::size_t>(m)] * factorial_q(m);
}

Cpx d_via_bernoulli(int n, const PrecisionContext& ctx) {
    // A_{k,2n} = sum_j (-1)^{k-j} C(k,j) 2^{2n+2k} 6^k/(2n+2k)! B^{(-j)}_{2n+2k}(-j/2)
    std::vector<mpq_class> A(static_cast<std::size_t>(2 * n + 1));
    for (int k = 0; k <= 2 * n; ++k) {
        mpq_class acc = 0;
        mpz_class p2, p6;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * n + 2 * k));
        mpz_ui_pow_ui(p6.get_mpz_t(), 6, static_cast<unsigned long>(k));
        mpq_class w = mpq_class(p2 * p6) / factorial_q(2 * n + 2 * k);
        for (int j = 0; j <= k; ++j) {
            mpq_class lam(-j, 2);
            lam.canonicalize();
            mpq_class b = generalized_bernoulli(2 * n + 2 * k, -j, lam);
            mpq_class t = binom_q(k, j) * w * b;
            acc += ((k - j) % 2) ? mpq_class(-t) : t;
        }
        A[k] = acc;
    }
    PrecisionGuard g(ctx.digits() + 20);
    Real s = Real(2 * n + 1) / 3;
    Real sum = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        Real w = to_real(binom_q(2 * n, k) * A[k]) / Real(2 * n + 3 * k + 1);
        sum += (k % 2) ? Real(-w) : w;
    }
    Real v = pow(Real(6), s) / tgamma(Real(2 * n + 1)) * 3 * tgamma(4 * s) / tgamma(s) * sum;
    PrecisionGuard g2(ctx.digits());
    return Cpx(Real(v));
}

}  // namespace dk
