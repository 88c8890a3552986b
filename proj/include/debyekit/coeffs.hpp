// coeffs.hpp - exact Debye coefficients U_n(x) and d_{2n}, with independent
// generation routes used to cross-check each other.
#ifndef DEBYEKIT_COEFFS_HPP
#define DEBYEKIT_COEFFS_HPP

#include "debyekit/numerics.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace dk {

/// Dense polynomial with rational coefficients, c[k] multiplies x^k.
using QPoly = std::vector<mpq_class>;

QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_scale(const QPoly& a, const mpq_class& s);
bool qpoly_equal(const QPoly& a, const QPoly& b);
Cpx qpoly_eval(const QPoly& p, const Cpx& x);
std::string qpoly_to_string(const QPoly& p, const char* var = "x");

Real to_real(const mpq_class& q);

/// U_n(x): degree 3n, exponents n, n+2, ..., 3n.
struct UPolynomial {
    int n = 0;
    std::map<int, mpq_class> terms;
    QPoly dense() const;
};

/// d_{2n} = rat * 6^(j/3).
struct DCoefficient {
    int n = 0;
    mpq_class rat;
    int j = 0;
    Real value() const;  // at ambient precision
    std::string to_string() const;
};

enum class SeriesKind { A, B };  // A: x(t - sinh t) + cosh t - 1,  B: sinh t - t

/// Power-series coefficients a_k (polynomials in x) or b_k (constants).
struct SeriesCoeffs {
    SeriesKind kind;
    std::vector<QPoly> values;
};

/// bell[n][k] = B_{n,k}; potential[k][n] = A_{k,n} of the normalised series.
struct PolyTables {
    SeriesKind kind;
    int n_max;
    std::vector<std::vector<QPoly>> bell;
    std::vector<std::vector<QPoly>> potential;
};

SeriesCoeffs series_coeffs(SeriesKind kind, int k_max);
/// Memoised; entries up to index n_max in both table directions.
const PolyTables& poly_tables(SeriesKind kind, int n_max);

const UPolynomial& u_poly(int n);
/// u_{n,k} for 0 <= n <= n_max, 0 <= k <= n.
std::vector<std::vector<mpq_class>> u_coeff_meijer(int n_max);
UPolynomial u_from_meijer(int n, const std::vector<std::vector<mpq_class>>& table);

Cpx u_eval(int n, const Cpx& x, const PrecisionContext& ctx);
/// U_n(i cot beta)
Cpx u_at_beta(int n, const Real& beta, const PrecisionContext& ctx);
Cpx u_via_bell(int n, const Cpx& x, const PrecisionContext& ctx);
Cpx u_via_potential(int n, const Cpx& x, const PrecisionContext& ctx);

/// A_{rho,k} from integer-parameter potentials; polynomial in x for kind A.
QPoly comtet_potential(SeriesKind kind, const mpq_class& rho, int k);

const DCoefficient& d_coeff(int n);
Cpx d_via_bell(int n, const PrecisionContext& ctx);
Cpx d_via_bernoulli(int n, const PrecisionContext& ctx);

/// B_m^{(kappa)}(lambda), exact.
mpq_class generalized_bernoulli(int m, int kappa, const mpq_class& lambda);

/// Rising factorial (a)_k, exact.
mpq_class rising(const mpq_class& a, int k);

}  // namespace dk

#endif
