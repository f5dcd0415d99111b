#ifndef CONETRACE_COEFFICIENTS_HPP
#define CONETRACE_COEFFICIENTS_HPP

#include <stdexcept>
#include <utility>

#include "conetrace/quadrature.hpp"
#include "conetrace/rational.hpp"

namespace conetrace {

/// The singularity germ: f'(0) > 0 and f''(0) of the profile function,
/// with the derived quantities alpha = 1/f'(0) and k_f = -f''(0)/f'(0).
struct ConeData {
    double fprime0 = 1.0;
    double fsecond0 = 0.0;
    double alpha = 1.0;
    double k_f = 0.0;
};

/// Heat-trace coefficients of the cone point. c0 and c_half vanish
/// identically; b_half vanishes whenever k_f = 0 or alpha = 1.
struct HeatCoefficients {
    double b0 = 0.0;
    double b_half = 0.0;
    double c0 = 0.0;
    double c_half = 0.0;
    double c1 = 0.0;
};

/// Resolvent-trace coefficients for a fixed power m >= 2. b0m is
/// m-independent and equals b0.
struct ResolventCoefficients {
    int m = 2;
    double b0m = 0.0;
    double b1m = 0.0;
    double c2m = 0.0;
};

/// Raised when a computation depends on a quadrature that did not converge.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// All heat-side coefficients of one cone germ.
HeatCoefficients heat_coefficients(const ConeData& cone, double tol);

/// The resolvent-side triple for a fixed power m >= 2.
ResolventCoefficients resolvent_coefficients(const ConeData& cone, int m, double tol);

/// b0 = (1/12)(1/f'(0) - f'(0)).
double b0(const ConeData& cone);

/// Exact-rational b0 for rational f'(0).
BigRational b0_exact(const BigRational& fprime0);

/// c1 = -(1/60) f''(0)^2 / f'(0).
double c1(const ConeData& cone);

/// c_{2,m} = (m/30) f''(0)^2 / f'(0), m >= 2.
double c2m(const ConeData& cone, int m);

/// F(alpha) = integral_0^1 alpha (h-hat_{2,a} - 1/4 h-hat_{0,a})(1-u^2) du.
/// The integral is split so the series evaluation covers [u_split, 1] with
/// margin; the direct path covers [0, u_split].
QuadResult big_f(double alpha, double tol);

/// b_{1/2} = -(2 k_f / sqrt(pi)) F(alpha) / alpha.
QuadResult b_half_quad(const ConeData& cone, double tol);
double b_half(const ConeData& cone, double tol);

/// h_alpha(s) = integral_0^1 (2 h-hat_{2,a} - 1/2 h-hat_{0,a})(t)
///              (1-t)^{s/2-1/2} t^{-s} dt, for real s in (-1,1).
QuadResult h_alpha_at_quad(double alpha, double s, double tol);
double h_alpha_at(double alpha, double s, double tol);

/// psi_m(s) = Gamma(m+1/2+s/2) Gamma(-s/2) / Gamma(-s); psi_m(0) = 2 Gamma(m+1/2).
double psi_m(int m, double s);

/// b_{1,m} = -k_f psi_m(0) h_alpha(0) / (4 sqrt(pi) (m-1)!), m >= 2.
QuadResult b1m_quad(const ConeData& cone, int m, double tol);
double b1m(const ConeData& cone, int m, double tol);

/// Resolvent-to-heat conversion for the pair (b_{j,m}, c_{j,m}):
///   b_{j/2} = (m-1)!/Gamma(m+j/2) b_{j,m} + (m-1)! Gamma'(m+j/2)/(2 Gamma(m+j/2)^2) c_{j,m}
///   c_{j/2} = -(m-1)!/(2 Gamma(m+j/2)) c_{j,m}
std::pair<double, double> heat_from_resolvent(int j, int m, double bjm, double cjm);

/// I_j = integral_0^1 (log(u^2))^j / (1-u^2) du by endpoint-aware quadrature.
QuadResult i_j_quad_result(int j, double tol);
double i_j_quad(int j, double tol);

/// Closed form for odd j = 2n-1: I_{2n-1} = 2^{2n-1} (1-2^{2n})/(4n) pi^{2n} |B_{2n}|.
double i_j_closed(int j);

/// Magnitude factor V_j of the alpha^{j+3} Taylor coefficient of F at 0,
///   V_j = -( I_j/(j!(j+3)) - I_{j+2}/(4 (j+3)!) ),  j odd.
/// The two terms agree to ~3^{-j} relative, so the difference is formed in
/// 50-digit arithmetic and rounded once.
double taylor_v(int j);

/// The alpha-independent constant of the small-alpha expansion,
/// C0 = -integral_0^1 (Phi-hat_2 - 1/4 Phi-hat_0)(1-u^2) du,
/// computed once per process at tolerance 1e-11 and cached.
double asymptotic_constant();

/// Order-r truncation of the small-alpha expansion of F:
///   C0 + (I_1/48) alpha^2 + sum_{j=1}^r V_j B_{j+3} alpha^{j+3}.
/// Even-j terms vanish (B_{j+3} = 0) but their I_j are still evaluated by
/// quadrature so tables can report them.
double asymptotic_f(double alpha, int r, double tol);

}  // namespace conetrace

#endif
