#ifndef CONETRACE_HFUN_HPP
#define CONETRACE_HFUN_HPP

namespace conetrace {

// The family h_{k,alpha}(z) = sum_{n>=0} alpha^k n^k (1-z)^{n alpha} on the
// real interval z in [0,1], together with its singular/regular split at the
// simple pole z = 0, the auxiliary Bernoulli series P_alpha^{(k)}, the
// alpha-independent backbone Phi_k / Phi_k-hat, and the normalized regular
// part h-hat_{k,alpha}(z) = (h^reg(z) - h^reg(0))/z.
//
// All functions are pure; the shared Bernoulli table is read-only after
// first use, so concurrent calls are safe.

enum class EvalMethod { auto_select, direct, series, oracle, endpoint };

/// Parameter pack for the family: derivative order k (closed forms exist for
/// k in {0,1,2}) and alpha = 1/f'(0) > 0.
struct HParams {
    int k = 0;
    double alpha = 1.0;
};

/// Validates k >= 0, alpha > 0 (and k <= 2 when closed_form is requested).
HParams make_hparams(int k, double alpha, bool closed_form = true);

struct HEval {
    double value = 0.0;
    EvalMethod method = EvalMethod::direct;
    long terms_used = 0;
    double err_est = 0.0;
    bool truncated = false;       // term cap hit before the tail bound held
    bool precision_loss = false;  // direct path forced at small z; err_est reflects it
};

/// Evaluation geometry for fixed alpha.
struct EvalDomain {
    double alpha;
    double r_alpha;   // radius of the pole-free disc V_alpha
    double R_alpha;   // radius 2*pi/alpha of the Bernoulli series P_alpha
    double z_switch;  // h_hat switches from series to direct beyond this z
};
EvalDomain make_eval_domain(double alpha);

const char* to_string(EvalMethod m);

/// Closed-form h_{k,alpha}(z) for z in (0,1), k in {0,1,2}.
double h_direct(int k, double alpha, double z);

/// Brute-force partial sums of the defining series, truncated by a geometric
/// tail bound; independent of every closed-form code path.
HEval h_oracle(int k, double alpha, double z, double tol);

/// Singular part (1/alpha) h_{k,1}(z) for z in (0,1), k in {0,1,2}.
double h_sing(int k, double alpha, double z);

/// h^reg_{k,alpha}(0) = B_{k+1} (1 - alpha^{k+1}) / (alpha (k+1)).
double h_reg_at_zero(int k, double alpha);

/// P_alpha^{(k)}(L) = sum_j B_{j+k+1} alpha^{j+k+1} L^j / (j! (j+k+1)),
/// for |L| < 2*pi/alpha; capped at 200 terms.
HEval p_series(int k, double alpha, double L, double tol);

/// Phi_k(z) for z in [0,1): direct closed form away from 0, the series
/// identity Phi_k = -P_1^{(k)}(log(1-z)) near 0.
double phi(int k, double z);

/// Phi-hat_k(z) = (Phi_k(z) - Phi_k(0))/z on [0,1], continuous endpoints.
double phi_hat(int k, double z);

/// h-hat_{k,alpha}(z) on [0,1] with automatic series/direct selection.
HEval h_hat(int k, double alpha, double z, double tol);
HEval h_hat(int k, double alpha, double z, double tol, EvalMethod force);

/// h-hat parameterized by w = 1-z. Near z = 1 the family approaches its
/// endpoint limit only like 1/log(w), so integrators must pass the exact
/// endpoint offset w instead of a z that rounds to 1.
HEval h_hat_w(int k, double alpha, double one_minus_z, double tol);

/// Phi-hat_k parameterized by w = 1-z, same rationale as h_hat_w.
double phi_hat_w(int k, double one_minus_z);

}  // namespace conetrace

#endif
