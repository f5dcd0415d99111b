// Command-line front end: heat-trace coefficients of a curved conical
// singularity, the scaling function F(alpha), its small-alpha expansion,
// and the Taylor-coefficient divergence diagnostics.
//
// Exit codes: 0 success, 2 usage error, 3 numerical non-convergence.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "conetrace/cli.hpp"
#include "conetrace/coefficients.hpp"
#include "conetrace/geometry.hpp"

namespace cli = conetrace::cli;

int main(int argc, char** argv) {
    CLI::App app{"heat-trace coefficients of surfaces with curved conical singularities"};
    app.require_subcommand(1);

    cli::CoeffsOptions coeffs;
    CLI::App* cmd_coeffs = app.add_subcommand(
        "coeffs", "cone-point coefficients b0, b_1/2, c0, c_1/2, c1 and resolvent-side values");
    cmd_coeffs->add_option("--fprime0", coeffs.fprime0, "f'(0) of the profile (> 0)")->required();
    cmd_coeffs->add_option("--fsecond0", coeffs.fsecond0, "f''(0) of the profile")->required();
    cmd_coeffs->add_option("--m", coeffs.m, "resolvent power m >= 2");
    cmd_coeffs->add_option("--tol", coeffs.tol, "quadrature tolerance");
    cmd_coeffs->add_option("--format", coeffs.format, "json|csv");

    cli::ScanOptions scan;
    CLI::App* cmd_scan = app.add_subcommand("scan", "tabulate F(alpha) over a range");
    cmd_scan->add_option("--alpha-min", scan.alpha_min)->required();
    cmd_scan->add_option("--alpha-max", scan.alpha_max)->required();
    cmd_scan->add_option("--steps", scan.steps)->required();
    cmd_scan->add_option("--tol", scan.tol);
    cmd_scan->add_option("--spacing", scan.spacing, "linear|geometric");

    cli::AsymptoticsOptions asym;
    CLI::App* cmd_asym =
        app.add_subcommand("asymptotics", "compare F against its small-alpha expansion");
    cmd_asym->add_option("--alphas", asym.alphas, "comma-separated alpha values")
        ->required()
        ->delimiter(',');
    cmd_asym->add_option("--order", asym.order, "expansion order r >= 1")->required();
    cmd_asym->add_option("--tol", asym.tol);

    cli::IrrationalityOptions irr;
    CLI::App* cmd_irr = app.add_subcommand(
        "irrationality", "Taylor-coefficient divergence diagnostics (V_j, D_j, bounds, roots)");
    cmd_irr->add_option("--jmax", irr.jmax, "odd j cap, <= 41")->required();

    cli::ProfileOptions profile;
    CLI::App* cmd_profile =
        app.add_subcommand("profile", "fit a cone germ from profile samples, then coeffs");
    cmd_profile->add_option("--input", profile.input, "CSV with header r,f")->required();
    cmd_profile->add_option("--degree", profile.degree, "fit degree, 2 or 3");
    cmd_profile->add_option("--m", profile.m);
    cmd_profile->add_option("--tol", profile.tol);
    cmd_profile->add_option("--format", profile.format, "json|csv");

    cli::HfunOptions hfun;
    CLI::App* cmd_hfun =
        app.add_subcommand("hfun", "inspect h, h_sing, h_reg0, h_hat at one point");
    cmd_hfun->add_option("--k", hfun.k, "derivative order, 0..2")->required();
    cmd_hfun->add_option("--alpha", hfun.alpha)->required();
    cmd_hfun->add_option("--z", hfun.z, "point in [0,1]")->required();
    cmd_hfun->add_option("--method", hfun.method, "auto|direct|series|oracle");
    cmd_hfun->add_option("--tol", hfun.tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_coeffs->parsed()) cli::run_coeffs(coeffs, std::cout);
        else if (cmd_scan->parsed()) cli::run_scan(scan, std::cout);
        else if (cmd_asym->parsed()) cli::run_asymptotics(asym, std::cout);
        else if (cmd_irr->parsed()) cli::run_irrationality(irr, std::cout);
        else if (cmd_profile->parsed()) cli::run_profile(profile, std::cout);
        else if (cmd_hfun->parsed()) cli::run_hfun(hfun, std::cout);
        return 0;
    } catch (const conetrace::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const conetrace::ProfileParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const conetrace::FitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
