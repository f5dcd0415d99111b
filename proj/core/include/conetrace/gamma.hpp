#ifndef CONETRACE_GAMMA_HPP
#define CONETRACE_GAMMA_HPP

namespace conetrace {

/// log Gamma(x) for x > 0; throws std::domain_error otherwise.
/// Relative error <= 1e-13 on [0.5, 200].
double log_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0; throws std::domain_error otherwise.
/// Absolute error <= 1e-12 on [0.5, 200].
double digamma(double x);

}  // namespace conetrace

#endif
