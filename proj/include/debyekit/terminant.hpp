// terminant.hpp - the scaled Terminant function
//   T_p(z) = e^{pi i p} z^{1-p} e^{-z} / (2 pi i) int_0^inf t^{p-1} e^{-t} / (z + t) dt
// on -3 pi < arg z < 3 pi, and its uniform erf approximation near arg z = -pi.
#ifndef DEBYEKIT_TERMINANT_HPP
#define DEBYEKIT_TERMINANT_HPP

#include "debyekit/numerics.hpp"

#include <string>

namespace dk {

enum class TerminantMethod { Definition, Connected, IncGamma, ErfAsymptotic };
std::string method_name(TerminantMethod m);

struct TerminantEval {
    Real p;
    Polar z;
    Cpx value;
    TerminantMethod method = TerminantMethod::Definition;
    Real est_err;
};

/// Quadrature of the defining integral for |arg z| <= pi; outside that the
/// connection formula T_p(z) = e^{2 pi i p}(T_p(z e^{2 pi i}) - 1) is used.
TerminantEval terminant(const Real& p, const Polar& z, const PrecisionContext& ctx);

/// e^{pi i p} Gamma(p) Gamma(1 - p, z) / (2 pi i), with arg z carried explicitly.
Cpx terminant_via_incgamma(const Real& p, const Polar& z, const PrecisionContext& ctx);

struct SmoothingMap {
    Real phi;
    Cpx c;
};

/// Root of c^2/2 = 1 + i(phi - pi) - e^{i(phi - pi)} on the branch with
/// c ~ (phi - pi) + i(phi - pi)^2/6 near phi = pi.  |phi - pi| < 2 pi.
SmoothingMap c_of_phi(const Real& phi, const PrecisionContext& ctx);

/// -1/2 + erf(-conj(c(-arg z)) sqrt(|z|/2))/2, the leading approximation of
/// e^{-2 pi i p} T_p(z) for p ~ |z|.
Cpx smoothing_normalized(const Polar& z, const PrecisionContext& ctx);
/// The same approximation multiplied back by e^{2 pi i p}, i.e. of T_p(z).
Cpx smoothing_asymptotic(const Real& p, const Polar& z, const PrecisionContext& ctx);
/// e^{-|z| Re c(-arg z)^2 / 2} / sqrt|z|: the scale of the approximation error.
Real smoothing_error_scale(const Polar& z, const PrecisionContext& ctx);

}  // namespace dk

#endif
