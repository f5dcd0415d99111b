#ifndef CONETRACE_GEOMETRY_HPP
#define CONETRACE_GEOMETRY_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "conetrace/coefficients.hpp"

namespace conetrace {

/// One sample of the profile function: arc-length r from the tip and
/// f(r) = circumference/(2 pi) of the distance circle at r.
struct ProfileSample {
    double r = 0.0;
    double f_r = 0.0;
};

/// Limit behavior of the Gaussian curvature K = -f''/f at the tip.
enum class CurvatureClass { finite, plus_infinity, minus_infinity };

/// Embedded-surface-of-revolution data. Embeddable iff f'(0) <= 1;
/// phi = arcsin(f'(0)); the profile-curve curvature at the tip is defined
/// only for phi < pi/2.
struct EmbeddingData {
    bool embeddable = false;
    bool kappa0_defined = false;
    double phi = 0.0;
    double kappa0 = 0.0;
};

class ProfileParseError : public std::runtime_error {
  public:
    ProfileParseError(int line, const std::string& what);
    int line() const { return line_; }

  private:
    int line_;
};

class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Build ConeData from the germ (f'(0), f''(0)); f'(0) <= 0 is rejected.
ConeData from_derivatives(double fprime0, double fsecond0);

EmbeddingData embedding(const ConeData& cone);

CurvatureClass curvature_class(const ConeData& cone);

const char* to_string(CurvatureClass c);

/// Least-squares fit of f(r) ~ a r + b r^2/2 (+ c r^3/6), constrained
/// through the origin; degree in {2,3}; needs degree+1 samples with
/// strictly increasing r. Returns from_derivatives(a, b).
ConeData from_profile_samples(const std::vector<ProfileSample>& samples, int degree);

/// Profile CSV: header "r,f", one sample per row, '.' decimal separator.
std::vector<ProfileSample> parse_profile_csv(std::istream& in);
std::vector<ProfileSample> load_profile_csv(const std::string& path);

}  // namespace conetrace

#endif
