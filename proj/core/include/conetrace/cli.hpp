#ifndef CONETRACE_CLI_HPP
#define CONETRACE_CLI_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace conetrace::cli {

/// Invalid flags or flag values; the front end maps this to exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One record of named results with parallel error estimates and provenance
/// ("closed_form" | "quadrature" | "series"); every result key has both.
struct OutputRecord {
    std::string schema_version = "1";
    std::map<std::string, std::string> inputs;
    std::map<std::string, double> results;
    std::map<std::string, double> err_ests;
    std::map<std::string, std::string> provenance;

    void add(const std::string& key, double value, double err, const std::string& prov);
    std::string to_json() const;
    std::string to_csv() const;
};

/// Fixed "%.17g" rendering; the determinism contract for all CSV output.
std::string format_double(double v);

struct CoeffsOptions {
    double fprime0 = 0.0;
    double fsecond0 = 0.0;
    int m = 2;
    double tol = 1e-10;
    std::string format = "json";
};
OutputRecord make_coeffs_record(const CoeffsOptions& opts);
void run_coeffs(const CoeffsOptions& opts, std::ostream& out);

struct ScanOptions {
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    int steps = 0;
    double tol = 1e-10;
    std::string spacing = "linear";
};
void run_scan(const ScanOptions& opts, std::ostream& out);

struct AsymptoticsOptions {
    std::vector<double> alphas;
    int order = 3;
    double tol = 1e-10;
};
void run_asymptotics(const AsymptoticsOptions& opts, std::ostream& out);

struct IrrationalityOptions {
    int jmax = 41;
};
void run_irrationality(const IrrationalityOptions& opts, std::ostream& out);

struct ProfileOptions {
    std::string input;
    int degree = 3;
    int m = 2;
    double tol = 1e-10;
    std::string format = "json";
};
void run_profile(const ProfileOptions& opts, std::ostream& out);

struct HfunOptions {
    int k = 0;
    double alpha = 1.0;
    double z = 0.5;
    std::string method = "auto";
    double tol = 1e-10;
};
void run_hfun(const HfunOptions& opts, std::ostream& out);

}  // namespace conetrace::cli

#endif
