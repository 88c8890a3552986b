// numerics.hpp - multiprecision reals/complexes, special functions, quadrature.
#ifndef DEBYEKIT_NUMERICS_HPP
#define DEBYEKIT_NUMERICS_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <stdexcept>
#include <string>

namespace dk {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// ---------------------------------------------------------------- errors

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
/// z on a branch cut with no side specified.
struct BranchError : std::domain_error {
    using std::domain_error::domain_error;
};
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Requested arg(nu) lies outside the sector where a representation/bound holds.
struct SectorError : std::domain_error {
    using std::domain_error::domain_error;
};
struct RangeError : std::range_error {
    using std::range_error::range_error;
};

// ------------------------------------------------------------- precision

/// Working precision for all floating computation. Immutable once built.
class PrecisionContext {
public:
    explicit PrecisionContext(int digits = 60);
    PrecisionContext(int digits, double quad_rel_tol);

    int digits() const { return digits_; }
    double quad_rel_tol() const { return tol_; }
    /// Same tolerance policy, more digits.
    PrecisionContext with_digits(int d) const;

private:
    int digits_;
    double tol_;
};

/// Sets the (thread-local) default MPFR precision for the scope.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline Real rmax(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real rmin(const Real& a, const Real& b) { return b < a ? b : a; }
/// Copy of x rounded to `digits` (default: the ambient precision). Plain
/// copies keep the source precision, which would silently cap work precision.
inline Real at_prec(const Real& x, unsigned digits = Real::default_precision()) { return Real(x, digits); }

Real pi();
Real euler_gamma();
Real ln10();
Real eps_digits(int digits);  // 10^-digits
Real from_rational_string(const std::string& s);

// ---------------------------------------------------------------- complex

/// Complex number at context precision (no mpc available, so a thin pair).
struct Cpx {
    Real re, im;
    Cpx() : re(0), im(0) {}
    Cpx(const Real& r) : re(r), im(0) {}  // NOLINT implicit on purpose
    Cpx(const Real& r, const Real& i) : re(r), im(i) {}
    Cpx(int r) : re(r), im(0) {}  // NOLINT
    Cpx(double r) : re(r), im(0) {}  // NOLINT

    Cpx& operator+=(const Cpx& o) { re += o.re; im += o.im; return *this; }
    Cpx& operator-=(const Cpx& o) { re -= o.re; im -= o.im; return *this; }
    Cpx& operator*=(const Cpx& o);
    Cpx& operator/=(const Cpx& o);
    Cpx& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Cpx& operator/=(const Real& s) { re /= s; im /= s; return *this; }
};

Cpx operator+(Cpx a, const Cpx& b);
Cpx operator-(Cpx a, const Cpx& b);
Cpx operator*(Cpx a, const Cpx& b);
Cpx operator/(Cpx a, const Cpx& b);
Cpx operator*(Cpx a, const Real& s);
Cpx operator*(const Real& s, Cpx a);
Cpx operator/(Cpx a, const Real& s);
Cpx operator-(const Cpx& a);

const Cpx& I_unit();
Cpx conj(const Cpx& z);
Real abs(const Cpx& z);
Real norm(const Cpx& z);
Real arg(const Cpx& z);
Cpx polar(const Real& r, const Real& theta);
Cpx expi(const Real& theta);  // e^{i theta}
Cpx exp(const Cpx& z);
Cpx log(const Cpx& z);  // principal
Cpx sqrt(const Cpx& z);  // principal
Cpx pow(const Cpx& z, const Cpx& w);  // principal
Cpx pow(const Cpx& z, long n);
Cpx sin(const Cpx& z);
Cpx cos(const Cpx& z);
Cpx sinh(const Cpx& z);
Cpx cosh(const Cpx& z);
bool isfinite(const Cpx& z);
std::string to_string(const Real& x, int digits);

/// A nonzero complex number carried with an explicit (not reduced) argument, so
/// powers can be continued past the principal branch.
struct Polar {
    Real r;
    Real theta;
    Cpx value() const { return polar(r, theta); }
    Cpx pow(const Real& s) const;  // r^s e^{i s theta}
    Cpx log() const;
};

inline Cpx at_prec(const Cpx& z, unsigned digits = Real::default_precision()) {
    return Cpx(at_prec(z.re, digits), at_prec(z.im, digits));
}
inline Polar at_prec(const Polar& z, unsigned digits = Real::default_precision()) {
    return Polar{at_prec(z.r, digits), at_prec(z.theta, digits)};
}

// ----------------------------------------------------- special functions

Cpx gamma_fn(const Cpx& z, const PrecisionContext& ctx);
Cpx erf_fn(const Cpx& z, const PrecisionContext& ctx);
/// Gamma(a, z), principal branch; throws BranchError on the negative real axis.
Cpx upper_incomplete_gamma(const Cpx& a, const Cpx& z, const PrecisionContext& ctx);
/// Gamma(a, z) with the argument of z given explicitly (analytic continuation in z).
Cpx upper_incomplete_gamma(const Cpx& a, const Polar& z, const PrecisionContext& ctx);

// -------------------------------------------------------------- quadrature

struct QuadResult {
    Cpx value;
    Real est_err;
    long evaluations = 0;
};

using Integrand = std::function<Cpx(const Real&)>;

/// int_0^inf f(t) dt for |f| <~ t^alpha e^{-decay_rate t}, alpha > -1.
/// Exp-sinh double-exponential rule, step halving until two levels agree.
QuadResult integrate_semiinfinite(const Integrand& f, const Real& decay_rate,
                                  const PrecisionContext& ctx);

/// int_a^b f(s) ds for a smooth (possibly oscillatory) integrand: adaptive
/// Gauss-Legendre panels, starting from `panels` equal pieces.
QuadResult integrate_panels(const Integrand& f, const Real& a, const Real& b,
                            const PrecisionContext& ctx, int panels = 1);

}  // namespace dk

#endif
