#include "conetrace/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "conetrace/coefficients.hpp"
#include "conetrace/geometry.hpp"
#include "conetrace/hfun.hpp"
#include "conetrace/irrationality.hpp"

namespace conetrace::cli {
namespace {

constexpr const char* kClosedForm = "closed_form";
constexpr const char* kQuadrature = "quadrature";
constexpr const char* kSeries = "series";

void check(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

// Row-parallel map preserving input order; each job must be pure.
template <typename Fn>
void parallel_rows(int n, const Fn& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    if (n < 16 || hw < 2) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    const int n_threads = static_cast<int>(std::min<unsigned>(hw, 8));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([=]() {
            for (int i = t; i < n; i += n_threads) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void OutputRecord::add(const std::string& key, double value, double err,
                       const std::string& prov) {
    results[key] = value;
    err_ests[key] = err;
    provenance[key] = prov;
}

std::string OutputRecord::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["inputs"] = inputs;
    j["results"] = results;
    j["err_ests"] = err_ests;
    j["provenance"] = provenance;
    return j.dump(2) + "\n";
}

std::string OutputRecord::to_csv() const {
    std::string out = "key,value,err_est,provenance\n";
    for (const auto& [key, value] : results) {
        out += key + "," + format_double(value) + "," + format_double(err_ests.at(key)) + "," +
               provenance.at(key) + "\n";
    }
    return out;
}

OutputRecord make_coeffs_record(const CoeffsOptions& opts) {
    check(opts.fprime0 > 0.0, "coeffs: requires --fprime0 > 0");
    check(opts.m >= 2, "coeffs: requires --m >= 2");
    check(opts.tol > 0.0, "coeffs: requires --tol > 0");
    const ConeData cone = from_derivatives(opts.fprime0, opts.fsecond0);

    OutputRecord rec;
    rec.inputs["fprime0"] = format_double(cone.fprime0);
    rec.inputs["fsecond0"] = format_double(cone.fsecond0);
    rec.inputs["m"] = std::to_string(opts.m);
    rec.inputs["tol"] = format_double(opts.tol);

    rec.add("alpha", cone.alpha, 0.0, kClosedForm);
    rec.add("k_f", cone.k_f, 0.0, kClosedForm);
    rec.add("b0", b0(cone), 0.0, kClosedForm);
    rec.add("c0", 0.0, 0.0, kClosedForm);
    rec.add("c_half", 0.0, 0.0, kClosedForm);
    rec.add("c1", c1(cone), 0.0, kClosedForm);
    rec.add("b0m", b0(cone), 0.0, kClosedForm);
    rec.add("c2m", c2m(cone, opts.m), 0.0, kClosedForm);

    const QuadResult bh = b_half_quad(cone, opts.tol);
    if (!bh.converged) throw ConvergenceError("coeffs: b_half quadrature did not converge");
    rec.add("b_half", bh.value, bh.err_est, kQuadrature);
    const QuadResult b1 = b1m_quad(cone, opts.m, opts.tol);
    if (!b1.converged) throw ConvergenceError("coeffs: b1m quadrature did not converge");
    rec.add("b1m", b1.value, b1.err_est, kQuadrature);

    const EmbeddingData emb = embedding(cone);
    rec.inputs["embeddable"] = emb.embeddable ? "true" : "false";
    if (emb.embeddable) {
        rec.add("phi", emb.phi, 0.0, kClosedForm);
        if (emb.kappa0_defined) rec.add("kappa0", emb.kappa0, 0.0, kClosedForm);
    }
    rec.inputs["curvature_class"] = to_string(curvature_class(cone));
    return rec;
}

void run_coeffs(const CoeffsOptions& opts, std::ostream& out) {
    check(opts.format == "json" || opts.format == "csv",
          "coeffs: --format must be json or csv");
    const OutputRecord rec = make_coeffs_record(opts);
    out << (opts.format == "json" ? rec.to_json() : rec.to_csv());
}

void run_scan(const ScanOptions& opts, std::ostream& out) {
    check(opts.alpha_min > 0.0 && opts.alpha_min < opts.alpha_max,
          "scan: requires 0 < --alpha-min < --alpha-max");
    check(opts.steps >= 2, "scan: requires --steps >= 2");
    check(opts.tol > 0.0, "scan: requires --tol > 0");
    check(opts.spacing == "linear" || opts.spacing == "geometric",
          "scan: --spacing must be linear or geometric");

    const int n = opts.steps;
    std::vector<double> alphas(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        alphas[static_cast<size_t>(i)] =
            opts.spacing == "linear"
                ? opts.alpha_min + t * (opts.alpha_max - opts.alpha_min)
                : opts.alpha_min * std::pow(opts.alpha_max / opts.alpha_min, t);
    }
    std::vector<QuadResult> rows(static_cast<size_t>(n));
    parallel_rows(n, [&](int i) {
        rows[static_cast<size_t>(i)] = big_f(alphas[static_cast<size_t>(i)], opts.tol);
    });

    out << "alpha,F,err_est\n";
    for (int i = 0; i < n; ++i) {
        const QuadResult& r = rows[static_cast<size_t>(i)];
        if (!r.converged) throw ConvergenceError("scan: quadrature did not converge");
        out << format_double(alphas[static_cast<size_t>(i)]) << ',' << format_double(r.value)
            << ',' << format_double(r.err_est) << '\n';
    }
}

void run_asymptotics(const AsymptoticsOptions& opts, std::ostream& out) {
    check(!opts.alphas.empty(), "asymptotics: requires a nonempty --alphas list");
    check(opts.order >= 1 && opts.order <= 41,
          "asymptotics: requires --order in [1, 41]");
    check(opts.tol > 0.0, "asymptotics: requires --tol > 0");
    for (double a : opts.alphas) check(a > 0.0, "asymptotics: all alphas must be > 0");

    const int n = static_cast<int>(opts.alphas.size());
    std::vector<QuadResult> f_rows(static_cast<size_t>(n));
    parallel_rows(n, [&](int i) {
        f_rows[static_cast<size_t>(i)] = big_f(opts.alphas[static_cast<size_t>(i)], opts.tol);
    });

    out << "alpha,F,F_asym,residual\n";
    for (int i = 0; i < n; ++i) {
        const double alpha = opts.alphas[static_cast<size_t>(i)];
        const QuadResult& f = f_rows[static_cast<size_t>(i)];
        if (!f.converged) throw ConvergenceError("asymptotics: quadrature did not converge");
        const double fa = asymptotic_f(alpha, opts.order, opts.tol);
        out << format_double(alpha) << ',' << format_double(f.value) << ','
            << format_double(fa) << ',' << format_double(f.value - fa) << '\n';
    }
}

void run_irrationality(const IrrationalityOptions& opts, std::ostream& out) {
    check(opts.jmax >= 1 && opts.jmax % 2 == 1 && opts.jmax <= 41,
          "irrationality: requires odd --jmax <= 41");
    const std::vector<TaylorDiagRow> rows = report(opts.jmax);
    out << "j,i_j,i_j2,v_j,d_j,lower_bound,taylor_coeff,root\n";
    for (const TaylorDiagRow& r : rows) {
        out << r.j << ',' << format_double(r.i_j) << ',' << format_double(r.i_j2) << ','
            << format_double(r.v_j) << ',' << format_double(r.d_j) << ','
            << format_double(r.lower_bound) << ',' << format_double(r.taylor_coeff) << ','
            << format_double(r.root) << '\n';
    }
}

void run_profile(const ProfileOptions& opts, std::ostream& out) {
    check(!opts.input.empty(), "profile: requires --input FILE");
    check(opts.degree == 2 || opts.degree == 3, "profile: --degree must be 2 or 3");
    const std::vector<ProfileSample> samples = load_profile_csv(opts.input);
    const ConeData cone = from_profile_samples(samples, opts.degree);

    CoeffsOptions copts;
    copts.fprime0 = cone.fprime0;
    copts.fsecond0 = cone.fsecond0;
    copts.m = opts.m;
    copts.tol = opts.tol;
    copts.format = opts.format;
    check(opts.format == "json" || opts.format == "csv",
          "profile: --format must be json or csv");
    OutputRecord rec = make_coeffs_record(copts);
    rec.inputs["profile_file"] = opts.input;
    rec.inputs["degree"] = std::to_string(opts.degree);
    rec.inputs["n_samples"] = std::to_string(samples.size());
    rec.inputs["fprime0_fit"] = format_double(cone.fprime0);
    rec.inputs["fsecond0_fit"] = format_double(cone.fsecond0);
    out << (opts.format == "json" ? rec.to_json() : rec.to_csv());
}

void run_hfun(const HfunOptions& opts, std::ostream& out) {
    check(opts.k >= 0 && opts.k <= 2, "hfun: requires --k in {0,1,2}");
    check(opts.alpha > 0.0, "hfun: requires --alpha > 0");
    check(opts.z >= 0.0 && opts.z <= 1.0, "hfun: requires --z in [0,1]");
    check(opts.tol > 0.0, "hfun: requires --tol > 0");
    EvalMethod method = EvalMethod::auto_select;
    if (opts.method == "direct") method = EvalMethod::direct;
    else if (opts.method == "series") method = EvalMethod::series;
    else if (opts.method == "oracle") method = EvalMethod::oracle;
    else check(opts.method == "auto", "hfun: --method must be auto|direct|series|oracle");
    const HParams params = make_hparams(opts.k, opts.alpha);

    OutputRecord rec;
    rec.inputs["k"] = std::to_string(opts.k);
    rec.inputs["alpha"] = format_double(opts.alpha);
    rec.inputs["z"] = format_double(opts.z);
    rec.inputs["method"] = opts.method;
    rec.inputs["tol"] = format_double(opts.tol);

    const bool interior = opts.z > 0.0 && opts.z < 1.0;
    if (interior) {
        if (method == EvalMethod::oracle) {
            const HEval h = h_oracle(params.k, params.alpha, opts.z, opts.tol);
            rec.add("h", h.value, h.err_est, kSeries);
        } else {
            rec.add("h", h_direct(params.k, params.alpha, opts.z), 0.0, kClosedForm);
        }
        rec.add("h_sing", h_sing(params.k, params.alpha, opts.z), 0.0, kClosedForm);
    } else if (opts.z == 1.0) {
        rec.add("h", opts.k == 0 ? 1.0 : 0.0, 0.0, kClosedForm);
        rec.add("h_sing", opts.k == 0 ? 1.0 / opts.alpha : 0.0, 0.0, kClosedForm);
    }  // z = 0: h and h_sing have the pole; omitted
    rec.add("h_reg0", h_reg_at_zero(params.k, params.alpha), 0.0, kClosedForm);

    const EvalMethod hat_force =
        (method == EvalMethod::direct || method == EvalMethod::series) ? method
                                                                       : EvalMethod::auto_select;
    const HEval hat = h_hat(params.k, params.alpha, opts.z, opts.tol, hat_force);
    rec.add("h_hat", hat.value, hat.err_est,
            hat.method == EvalMethod::series ? kSeries : kClosedForm);
    rec.inputs["h_hat_method"] = to_string(hat.method);
    out << rec.to_json();
}

}  // namespace conetrace::cli
