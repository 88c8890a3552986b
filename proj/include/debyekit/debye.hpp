// debye.hpp - truncated Debye expansions of H1, H2, J, Y at argument nu*x
// (x = sec beta > 1, or x = 1) with computable error bounds.
#ifndef DEBYEKIT_DEBYE_HPP
#define DEBYEKIT_DEBYE_HPP

#include "debyekit/numerics.hpp"
#include "debyekit/oracle.hpp"

#include <optional>
#include <string>

namespace dk {

/// Where arg(nu) sits relative to the representation of one function.
struct Sector {
    Real theta;
    bool central = false;                // plain bound factor is 1
    bool near_stokes = false;            // a rotated-ray bound applies
    bool requires_continuation = false;  // outside the closed representation sector
};

Sector classify_sector(Fn fn, Regime regime, const Real& theta, int N);

struct BoundedValue {
    Cpx value;
    int N = 0;
    Real abs_bound;
    std::string bound_rule;
    std::optional<Cpx> xi;  // J and Y at x > 1
};

struct Enclosure {
    Real low, high;
};

BoundedValue hankel1_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx);
BoundedValue hankel2_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx);
/// N counts coefficient pairs (U_{2n}, U_{2n+1}).
BoundedValue besselj_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx);
BoundedValue bessely_oblique(const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx);

BoundedValue hankel1_turning(const Polar& nu, int N, const PrecisionContext& ctx);
BoundedValue hankel2_turning(const Polar& nu, int N, const PrecisionContext& ctx);
BoundedValue besselj_turning(const Polar& nu, int N, const PrecisionContext& ctx);
BoundedValue bessely_turning(const Polar& nu, int N, const PrecisionContext& ctx);

/// Dispatch on (fn, regime); beta is ignored at the turning point.
BoundedValue debye_eval(Fn fn, Regime regime, const Polar& nu, const Real& beta, int N, const PrecisionContext& ctx);

/// Function values at nu in the fundamental sectors.
struct BaseValues {
    Cpx h1, h2, j, y;
};

/// Value at nu e^{2 pi i m}, or with `reflect` at nu e^{(2m+1) pi i} (J, Y only).
/// Integer nu needs `integer_limit`, which takes the limiting form of the
/// sin-ratio weights.
Cpx continuation(Fn fn, int m, const Polar& nu, const BaseValues& base, const PrecisionContext& ctx,
                 bool reflect = false, bool integer_limit = false);

/// Two-sided bracket for real nu > 0 (J and Y).
Enclosure real_enclosure(Fn fn, Regime regime, const Real& nu, const Real& beta, int N, const PrecisionContext& ctx);

/// Truncation near the least term: round(2|nu|(tan b - b)) or round(pi |nu|), ties up.
int optimal_N(Regime regime, const Real& nu_abs, const Real& beta);

// The elementary inequalities behind the bounds, exposed for property checks.

/// Right-hand side of 1/|1 - r e^{i phi}| <= csc|phi| or 1.
Real reciprocal_bound(const Real& phi);
/// sec-or-1 factor of the Hankel bounds (H1 convention; H2 uses theta + pi).
Real hankel_sector_factor(const Real& theta);
/// csc(2 theta)-or-1 factor of the Bessel bounds.
Real bessel_sector_factor(const Real& theta);
/// 1/(|1 + r e^{-2 theta i/3}| |1 + r e^{2(pi - theta) i/3}|), bounded by hankel_sector_factor.
Real hankel_turning_kernel(const Real& r, const Real& theta);
/// |1 - r^{2/3} e^{-2 theta i/3}| / |1 + r^2 e^{-2 theta i}|, bounded by bessel_sector_factor.
Real bessel_turning_kernel(const Real& r, const Real& theta);

}  // namespace dk

#endif
