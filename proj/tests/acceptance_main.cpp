// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "conetrace/bernoulli.hpp"
#include "conetrace/cli.hpp"
#include "conetrace/coefficients.hpp"
#include "conetrace/gamma.hpp"
#include "conetrace/geometry.hpp"
#include "conetrace/hfun.hpp"
#include "conetrace/irrationality.hpp"

using namespace conetrace;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

double factorial(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

bool bernoulli_exactness(std::string& detail) {
    const BernoulliTable& table = shared_bernoulli_table();
    if (table.max_index() < 64) {
        detail = "table capacity below 64";
        return false;
    }
    for (int n = 1; n <= 64; ++n) {
        BigRational sum(0);
        for (int k = 0; k <= n; ++k)
            sum += BigRational(binomial(static_cast<unsigned>(n) + 1,
                                        static_cast<unsigned>(k))) *
                   table.value(k);
        if (sum != 0) {
            detail = "recurrence violated at n = " + std::to_string(n);
            return false;
        }
    }
    if (table.value(12) != BigRational(-691, 2730)) {
        detail = "B_12 != -691/2730";
        return false;
    }
    detail = "recurrence exact for n <= 64; B_12 = -691/2730";
    return true;
}

bool bagul_bounds(std::string& detail) {
    const double slack = 1e-10;
    for (int n = 1; n <= 20; ++n) {
        const double base = 2.0 * factorial(2 * n) /
                            (std::pow(kPi, 2 * n) * (std::ldexp(1.0, 2 * n) - 1.0));
        const double p3 = std::pow(3.0, 2 * n);
        const double lo = base * p3 / (p3 - 1.0);
        const double hi = base * p3 / (p3 - 2.0);
        const double b = std::abs(bernoulli_d(2 * n));
        if (!(lo * (1.0 - slack) < b && b < hi * (1.0 + slack))) {
            detail = "bound fails at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "strict double inequality holds for n = 1..20";
    return true;
}

bool dual_path_h(std::string& detail) {
    double worst = 0.0;
    for (int k = 0; k <= 2; ++k) {
        for (double alpha : {0.3, 0.9, 1.7, 3.2, 6.5}) {
            for (int i = 1; i <= 19; ++i) {
                const double z = 0.05 * i;
                const double direct = h_direct(k, alpha, z);
                const HEval oracle = h_oracle(k, alpha, z, 1e-13);
                const double rel =
                    std::abs(direct - oracle.value) / (1.0 + std::abs(oracle.value));
                worst = std::max(worst, rel);
            }
        }
    }
    std::ostringstream os;
    os << "max |h_direct - h_oracle|/(1+|h_oracle|) = " << worst;
    detail = os.str();
    return worst <= 1e-9;
}

bool hhat_at_alpha_one(std::string& detail) {
    double worst = 0.0;
    for (int k : {0, 2}) {
        for (int i = 0; i <= 20; ++i) {
            const double z = 0.05 * i;
            worst = std::max(worst, std::abs(h_hat(k, 1.0, z, 1e-13).value));
        }
    }
    std::ostringstream os;
    os << "max |h_hat(k,1,z)| = " << worst;
    detail = os.str();
    return worst <= 1e-12;
}

bool i_j_closed_forms(std::string& detail) {
    const struct {
        int j;
        double expected;
    } closed[] = {{1, -kPi * kPi / 4.0}, {3, -std::pow(kPi, 4) / 2.0}, {5, -4.0 * std::pow(kPi, 6)}};
    for (const auto& c : closed) {
        if (std::abs(i_j_closed(c.j) - c.expected) > 1e-13 * std::abs(c.expected)) {
            detail = "closed form mismatch at j = " + std::to_string(c.j);
            return false;
        }
    }
    double worst = 0.0;
    for (int j : {1, 3, 5, 7}) {
        const double q = i_j_quad(j, 1e-11);
        const double c = i_j_closed(j);
        worst = std::max(worst, std::abs(q - c) / std::abs(c));
    }
    std::ostringstream os;
    os << "max quad-vs-closed relative error = " << worst;
    detail = os.str();
    return worst <= 1e-9;
}

bool f_at_one(std::string& detail) {
    const double f = big_f(1.0, 1e-11).value;
    std::ostringstream os;
    os << "F(1) = " << f;
    detail = os.str();
    return std::abs(f) <= 1e-10;
}

bool asymptotic_order(std::string& detail) {
    auto residual = [](double alpha) {
        return std::abs(big_f(alpha, 1e-13).value - asymptotic_f(alpha, 3, 1e-13));
    };
    const double r005 = residual(0.05), r01 = residual(0.1), r02 = residual(0.2);
    const double o1 = std::log2(r02 / r01);
    const double o2 = std::log2(r01 / r005);
    std::ostringstream os;
    os << "log2 ratios: " << o1 << ", " << o2;
    detail = os.str();
    return o1 >= 7.0 && o2 >= 7.0;
}

bool cross_m_b_half(std::string& detail) {
    double worst = 0.0;
    for (auto [fp, fs] : {std::pair{0.5, 1.0}, std::pair{2.0, -0.3}}) {
        const ConeData cone = from_derivatives(fp, fs);
        const double bh = b_half(cone, 1e-10);
        for (int m : {2, 3, 4}) {
            const double via =
                factorial(m - 1) / std::exp(log_gamma(m + 0.5)) * b1m(cone, m, 1e-10);
            worst = std::max(worst, std::abs(via - bh) / std::abs(bh));
        }
    }
    std::ostringstream os;
    os << "max relative mismatch = " << worst;
    detail = os.str();
    return worst <= 1e-7;
}

bool c1_round_trip(std::string& detail) {
    double worst = 0.0;
    for (auto [fp, fs] : {std::pair{0.5, 1.0}, std::pair{2.0, -0.3}}) {
        const ConeData cone = from_derivatives(fp, fs);
        for (int m : {2, 3, 4}) {
            const double back = heat_from_resolvent(2, m, 0.0, c2m(cone, m)).second;
            worst = std::max(worst, std::abs(back - c1(cone)) / std::abs(c1(cone)));
        }
    }
    std::ostringstream os;
    os << "max relative error = " << worst;
    detail = os.str();
    return worst <= 1e-12;
}

bool b0_spot_values(std::string& detail) {
    const bool ok = b0_exact(BigRational(1)) == 0 &&
                    b0_exact(BigRational(1, 3)) == BigRational(2, 9);
    detail = ok ? "b0(1) = 0 and b0(1/3) = 2/9 in exact rationals"
                : "exact rational spot value failed";
    return ok;
}

bool irrationality_diagnostics(std::string& detail) {
    const auto rows = report(41);
    for (const TaylorDiagRow& r : rows) {
        if (!(r.v_j > r.lower_bound && r.lower_bound > 0.0)) {
            detail = "V_j > lower bound > 0 fails at j = " + std::to_string(r.j);
            return false;
        }
        if (r.j >= 15 && !(std::pow(r.v_j, 1.0 / (r.j + 3)) >= 0.5)) {
            detail = "|V_j|^{1/(j+3)} >= 0.5 fails at j = " + std::to_string(r.j);
            return false;
        }
    }
    for (size_t i = rows.size() - 5; i < rows.size(); ++i) {
        if (!(rows[i].root > rows[i - 1].root)) {
            detail = "root growth fails at j = " + std::to_string(rows[i].j);
            return false;
        }
    }
    detail = "all 21 rows satisfy the bound chain; roots grow over the last 5 rows";
    return true;
}

bool v1_value(std::string& detail) {
    const double expected = kPi * kPi / 16.0 - std::pow(kPi, 4) / 192.0;
    const double rel = std::abs(v_j(1) - expected) / expected;
    std::ostringstream os;
    os << "relative error = " << rel;
    detail = os.str();
    return rel <= 1e-12;
}

bool h_alpha_continuity(std::string& detail) {
    for (double alpha : {0.5, 2.0}) {
        const double at0 = h_alpha_at(alpha, 0.0, 1e-10);
        const double near0 = h_alpha_at(alpha, 0.01, 1e-10);
        if (!(std::abs(near0 - at0) <= 0.05 * std::abs(at0) + 1e-6)) {
            std::ostringstream os;
            os << "continuity fails at alpha = " << alpha;
            detail = os.str();
            return false;
        }
    }
    detail = "h_alpha(s) stable between s = 0 and s = 0.01 for alpha in {0.5, 2}";
    return true;
}

bool cli_determinism(std::string& detail) {
    cli::ScanOptions opts;
    opts.alpha_min = 0.25;
    opts.alpha_max = 4.0;
    opts.steps = 9;
    std::ostringstream a, b;
    cli::run_scan(opts, a);
    cli::run_scan(opts, b);
    if (a.str() != b.str()) {
        detail = "scan output differs between identical runs";
        return false;
    }
    detail = "two identical scan invocations are byte-identical (" +
             std::to_string(a.str().size()) + " bytes)";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Bernoulli exactness", bernoulli_exactness},
        {2, "Bagul bound suite", bagul_bounds},
        {3, "dual-path h agreement", dual_path_h},
        {4, "h_hat vanishes at alpha = 1", hhat_at_alpha_one},
        {5, "closed-form I_j", i_j_closed_forms},
        {6, "F(1) = 0", f_at_one},
        {7, "asymptotic order", asymptotic_order},
        {8, "cross-m consistency of b_half", cross_m_b_half},
        {9, "c1 round trip", c1_round_trip},
        {10, "b0 spot values", b0_spot_values},
        {11, "irrationality diagnostics", irrationality_diagnostics},
        {12, "V_1 value", v1_value},
        {13, "h_alpha continuity at s = 0", h_alpha_continuity},
        {14, "CLI determinism", cli_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
