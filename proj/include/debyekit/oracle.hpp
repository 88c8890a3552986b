// oracle.hpp - independent reference values: K_{it}, iH^{(1)}_{it}(itx),
// a contour-integral H^{(1)}_nu(nu x), and the resurgence remainder integrals.
#ifndef DEBYEKIT_ORACLE_HPP
#define DEBYEKIT_ORACLE_HPP

#include "debyekit/numerics.hpp"

#include <string>

namespace dk {

enum class Fn { H1, H2, J, Y };
enum class Regime { Oblique, Turning };

std::string fn_name(Fn f);
Fn parse_fn(const std::string& s);

/// f(t, beta) = sec(beta) sinh t - t, or sinh t - t at the turning point.
struct PhaseFunction {
    bool turning = false;
    Real beta = 0;
    Cpx operator()(const Cpx& t) const;
    /// saddle t = i beta (0 at the turning point)
    Cpx saddle() const;
};

struct OracleValue {
    Cpx value;
    Real est_err;
};

/// K_{it}(y) for real t >= 0, y > 0.
Real k_imag_order(const Real& t, const Real& y, const PrecisionContext& ctx);
/// iH^{(1)}_{it}(itx) = (2/pi) e^{pi t/2} K_{it}(tx) for t > 0, x >= 1 (memoised).
Real ihankel_line(const Real& t, const Real& x, const PrecisionContext& ctx);
/// Same function continued to complex t, |arg t| < pi/2 - 0.3.
Cpx ihankel_line_complex(const Cpx& t, const Real& x, const PrecisionContext& ctx);

/// H^{(1)}_nu(nu x) from the Sommerfeld-type integral, with arg(nu) carried
/// explicitly so the value continues past the principal sector. |theta| <= 2 pi.
OracleValue hankel1_reference(const Polar& nu, const Real& x, const PrecisionContext& ctx);
OracleValue hankel1_reference(const Cpx& nu, const Real& x, const PrecisionContext& ctx);
/// H1, H2, J or Y at argument nu x built from hankel1_reference.
OracleValue function_reference(Fn fn, const Polar& nu, const Real& x, const PrecisionContext& ctx);

struct RemainderQuery {
    Fn fn = Fn::H1;
    Regime regime = Regime::Oblique;
    Polar nu;
    Real beta = 0;  // oblique only
    int N = 0;
};

/// R_N from its integral representation. `rotation` turns the t-ray to
/// arg t = -rotation (analytic continuation of the same integral).
OracleValue remainder_quadrature(const RemainderQuery& q, const PrecisionContext& ctx, const Real& rotation = Real(0));

/// U_n(i cot beta) and d_{2n} recovered from their integral representations.
OracleValue u_coeff_integral(int n, const Real& beta, const PrecisionContext& ctx);
OracleValue d_coeff_integral(int n, const PrecisionContext& ctx);

/// The checks a caller must pass before the integral representations apply.
void check_representation_sector(Fn fn, const Real& theta);

}  // namespace dk

#endif
