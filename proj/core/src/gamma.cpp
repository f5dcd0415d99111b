#include "conetrace/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace conetrace {
namespace {

// Stirling-series coefficients B_{2k}/(2k(2k-1)) for log Gamma,
// valid once the argument has been shifted to >= 8.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

double log_gamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

// Digamma asymptotic coefficients B_{2k}/(2k), used for x >= 12.
constexpr double kDigammaAsym[] = {
    1.0 / 12.0,   -1.0 / 120.0,   1.0 / 252.0,  -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
};

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    if (x >= 8.0) return log_gamma_stirling(x);
    // Shift into the Stirling range: log G(x) = log G(x+n) - log(x (x+1)...(x+n-1)).
    double shift = 1.0;
    double y = x;
    while (y < 8.0) {
        shift *= y;
        y += 1.0;
    }
    return log_gamma_stirling(y) - std::log(shift);
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double p = inv2;
    for (double c : kDigammaAsym) {
        series += c * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 * inv - series;
}

}  // namespace conetrace
