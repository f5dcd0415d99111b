#ifndef CONETRACE_IRRATIONALITY_HPP
#define CONETRACE_IRRATIONALITY_HPP

#include <vector>

namespace conetrace {

// Taylor-coefficient diagnostics for the expansion of F at alpha = 0:
// the magnitudes V_j, the Bernoulli ratios D_j, the proven lower-bound
// chain, and the root column whose growth witnesses convergence radius 0.
// Everything is a finite-j surrogate; no limits are asserted.

struct TaylorDiagRow {
    int j = 0;              // odd
    double i_j = 0.0;       // I_j (closed form)
    double i_j2 = 0.0;      // I_{j+2}
    double v_j = 0.0;       // > 0
    double d_j = 0.0;       // (j+2)(j+3)/pi^2 * |B_{j+1}|/|B_{j+3}|
    double lower_bound = 0.0;
    double taylor_coeff = 0.0;  // V_j * B_{j+3}
    double root = 0.0;          // |taylor_coeff|^{1/(j+3)}
};

/// V_j for odd j in [1, 41].
double v_j(int j);

/// D_j = (j+2)(j+3)/pi^2 * |B_{j+1}|/|B_{j+3}| for odd j >= 1.
double d_j(int j);

/// Proven positive lower bound on V_j:
///   2^{j-1} pi^{j+3} |B_{j+3}| / ((j+3)! (j+3)) * (7/9) (2^{j+3}-1)/(3^{j+1}-1),
/// assembled in log space.
double lower_bound(int j);

/// Rows for j = 1, 3, ..., j_max (odd j_max <= 41).
std::vector<TaylorDiagRow> report(int j_max);

}  // namespace conetrace

#endif
