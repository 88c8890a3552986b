// hyper.hpp - exponentially improved expansions of H1 at nu sec(beta) and at
// nu, and the Stokes transition profile across arg nu = -pi/2.
#ifndef DEBYEKIT_HYPER_HPP
#define DEBYEKIT_HYPER_HPP

#include "debyekit/debye.hpp"

#include <optional>
#include <vector>

namespace dk {

/// Phase differences to the adjacent saddles.
struct Singulants {
    Cpx F1, F2;  // 2i(tan b - b), 2i(tan b - b + pi); turning: 2 pi i, -2 pi i
};
Singulants oblique_singulants(const Real& beta);
Singulants turning_singulants();

/// Tilde-U_m(i cot beta): the part of U_m's integral carrying e^{-2 pi t}.
Cpx tilde_u(int m, const Real& beta, const PrecisionContext& ctx);
/// The complementary part V_m, so that |U_m| = V_m + |tilde-U_m|.
Real tilde_u_complement(int m, const Real& beta, const PrecisionContext& ctx);

struct ImprovedExpansion {
    int N = 0, M = 0, K = 0, L = 0;
    Cpx head;            // truncated sums (with the tilde-U sum at x > 1)
    Cpx terminant_part;  // the re-expansion sums
    Cpx value;           // head + terminant_part
    /// Order-of-magnitude remainder (the bound shape with constant 1).
    Real est_remainder;
    /// Computable bound on the remainder where one is available (x > 1).
    std::optional<Real> rigorous_bound;
    Sector sector;
};

/// Truncation indices from |nu|: N = round(2|nu|(tan b - b)) + rho, M = round(2|nu|(tan b - b + pi)) + sigma.
std::pair<int, int> improved_orders_oblique(const Real& nu_abs, const Real& beta, int rho = 0, int sigma = 0);
/// N = M = round(pi |nu|) (+ rho, sigma).
std::pair<int, int> improved_orders_turning(const Real& nu_abs, int rho = 0, int sigma = 0);

/// -3pi/2 <= arg nu <= 3pi/2, |nu| >= 5, K < N, L < M. N, M default to the prescription.
ImprovedExpansion hankel1_improved_oblique(const Polar& nu, const Real& beta, int K, int L, const PrecisionContext& ctx,
                                           std::optional<int> N = std::nullopt, std::optional<int> M = std::nullopt);
/// K, L multiples of 3.
ImprovedExpansion hankel1_improved_turning(const Polar& nu, int K, int L, const PrecisionContext& ctx,
                                           std::optional<int> N = std::nullopt, std::optional<int> M = std::nullopt);

struct StokesPoint {
    Real theta;
    Cpx measured;
    Real predicted;
};

/// Coefficient of the switched-on exponential, normalised by its leading
/// term, measured from reference values on a grid of arg nu around -pi/2.
std::vector<StokesPoint> stokes_profile(Regime regime, const Real& nu_abs, const Real& beta,
                                        const std::vector<Real>& theta_grid, const PrecisionContext& ctx);
/// f(r, tau, s) in g(s/(r tau)) = g(s/r) + (tau - 1) f, g(u) = (1 - u^{4/3})/(1 - u^2);
/// |f| <= 2 for positive arguments.
Real reexpansion_slope(const Real& r, const Real& tau, const Real& s);

/// -1/2 + erf((theta + pi/2) sqrt(scale))/2, scale = |nu|(tan b - b) or pi |nu|.
Real stokes_prediction(Regime regime, const Real& nu_abs, const Real& beta, const Real& theta);

}  // namespace dk

#endif
