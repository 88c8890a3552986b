// latecoeff.hpp - inverse factorial expansions for the late coefficients
// U_n(i cot beta) and d_2n with bounds on their remainders, Dingle's formal
// series, Meissel's approximation, and the two tables of worked examples.
#ifndef DEBYEKIT_LATECOEFF_HPP
#define DEBYEKIT_LATECOEFF_HPP

#include "debyekit/numerics.hpp"

#include <string>
#include <vector>

namespace dk {

struct LatePrediction {
    int n = 0, M = 0;
    Cpx value;
    Real err_bound;
    Cpx first, second;  // contributions of the two singulants (second is 0 for d_2n)
    std::string bound_rule;
};

/// Both singulant series truncated at M, 0 <= M <= n - 1.
LatePrediction u_late(int n, const Real& beta, int M, const PrecisionContext& ctx);
/// First series only (Dingle's form).
Cpx u_late_dingle(int n, const Real& beta, int M, const PrecisionContext& ctx);
/// 0 <= M <= n - 2, n >= 2; bound picked by M mod 3.
LatePrediction d_late(int n, int M, const PrecisionContext& ctx);

struct MeisselLambda {
    Real exact, asymptotic;
};
MeisselLambda meissel_lambda(int n, const PrecisionContext& ctx);

enum class LateKind { U, D };
/// Argmin of the remainder bound over the admissible M.
int optimal_M(int n, LateKind kind, const Real& beta = Real(0));

struct Table1Row {
    std::string beta_label;  // "pi/6"
    Real beta;
    int n = 50, M = 25;
    Real exact, dingle, dingle_error, approx, approx_error, bound;
};
struct Table2Row {
    int n = 0, M = 0;
    Real exact, approx, error, bound;
    std::string bound_rule;
};
std::vector<Table1Row> table1(const PrecisionContext& ctx);
std::vector<Table2Row> table2(const PrecisionContext& ctx);

/// "-0.25922998993906052149604 x 10^111": mantissa in [0.1, 1) with `sig`
/// significant digits.
std::string mantissa_format(const Real& x, int sig);

}  // namespace dk

#endif
