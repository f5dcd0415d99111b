#ifndef CONETRACE_QUADRATURE_HPP
#define CONETRACE_QUADRATURE_HPP

#include <functional>

namespace conetrace {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;  // absolute
    long n_evals = 0;
    // err_est <= tol*(1+|value|) was achieved; the requested tolerance is
    // relative once |value| exceeds 1.
    bool converged = false;
};

struct IntegrateOptions {
    /// Route to the tanh-sinh transform, which tolerates integrable
    /// algebraic/logarithmic singularities at either endpoint.
    bool endpoint_singular = false;
    int max_panels = 1 << 14;   // Gauss-Kronrod subdivision cap
    int max_levels = 12;        // tanh-sinh halving cap
};

using Integrand = std::function<double(double)>;

/// Integrand that also receives the exact distances (x - a) and (b - x)
/// as produced by the node transform, so endpoint-singular factors can be
/// evaluated without cancellation. Only the tanh-sinh path supplies
/// sub-epsilon distances; the Gauss-Kronrod path passes plain differences.
using EndpointAwareIntegrand = std::function<double(double x, double dist_a, double dist_b)>;

/// Deterministic adaptive integration of f over [a, b].
/// Result satisfies |value - integral| <= max(err_est, tol*(1+|value|))
/// with high reliability; identical inputs give identical outputs.
QuadResult integrate(const Integrand& f, double a, double b, double tol);
QuadResult integrate(const Integrand& f, double a, double b, double tol,
                     const IntegrateOptions& opts);
QuadResult integrate(const EndpointAwareIntegrand& f, double a, double b, double tol,
                     const IntegrateOptions& opts);

}  // namespace conetrace

#endif
