#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conetrace/bernoulli.hpp"
#include "conetrace/hfun.hpp"

using namespace conetrace;

namespace {
// Direct closed form of Phi_k, used as the independent path in cross-checks.
double phi_closed(int k, double z) {
    const double L = std::log1p(-z);
    switch (k) {
        case 0: return 1.0 / z + 1.0 / L;
        case 1: return (1.0 - z) / (z * z) - 1.0 / (L * L);
        default: return (1.0 - z) * (2.0 - z) / (z * z * z) + 2.0 / (L * L * L);
    }
}
}  // namespace

TEST_CASE("eval domain geometry") {
    EvalDomain d = make_eval_domain(2.0);
    CHECK(d.r_alpha == 1.0);
    CHECK(d.R_alpha == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(d.z_switch > 0.0);
    CHECK(d.z_switch < 1.0);
    CHECK(make_eval_domain(5.9).r_alpha == 1.0);
    CHECK(make_eval_domain(8.0).r_alpha ==
          doctest::Approx(2.0 * std::sin(std::numbers::pi / 8.0)).epsilon(1e-15));
    CHECK_THROWS_AS(make_eval_domain(0.0), std::domain_error);
}

TEST_CASE("h_direct: spot values") {
    CHECK(h_direct(0, 2.0, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(h_direct(2, 1.0, 0.5) == doctest::Approx(6.0).epsilon(1e-14));
    for (double z : {0.1, 0.35, 0.8})
        CHECK(h_direct(0, 1.0, z) == doctest::Approx(1.0 / z).epsilon(1e-14));
    CHECK_THROWS_AS(h_direct(0, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(h_direct(0, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(h_direct(3, 2.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(h_direct(0, 0.0, 0.5), std::domain_error);
}

TEST_CASE("h_oracle: spot values and dual-path agreement") {
    HEval a = h_oracle(0, 2.0, 0.5, 1e-12);
    CHECK(a.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(a.method == EvalMethod::oracle);
    CHECK_FALSE(a.truncated);

    HEval b = h_oracle(1, 1.0, 0.5, 1e-12);
    CHECK(b.value == doctest::Approx(2.0).epsilon(1e-12));

    HEval c = h_oracle(2, 0.5, 0.75, 1e-12);
    CHECK(c.value == doctest::Approx(h_direct(2, 0.5, 0.75)).epsilon(1e-11));
}

TEST_CASE("h_oracle: term cap reached flags truncation") {
    // q = (1-z)^alpha within 1e-12 of 1: the tail needs ~1e12 terms.
    HEval v = h_oracle(0, 0.001, 1e-9, 1e-12);
    CHECK(v.truncated);
    CHECK(v.terms_used > 1000000);
    CHECK(v.err_est > 0.0);
}

TEST_CASE("dual-path agreement on the full grid") {
    for (int k = 0; k <= 2; ++k) {
        for (double alpha : {0.3, 0.9, 1.7, 3.2, 6.5}) {
            for (int i = 1; i <= 19; ++i) {
                const double z = 0.05 * i;
                const double direct = h_direct(k, alpha, z);
                const HEval oracle = h_oracle(k, alpha, z, 1e-13);
                CHECK(std::abs(direct - oracle.value) <= 1e-9 * (1.0 + std::abs(oracle.value)));
            }
        }
    }
}

TEST_CASE("h_sing: spot values and the expanded form") {
    CHECK(h_sing(0, 2.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h_sing(2, 1.0, 0.5) == doctest::Approx(h_direct(2, 1.0, 0.5)).epsilon(1e-14));
    for (double alpha : {0.5, 2.0}) {
        for (double z : {0.2, 0.5, 0.9}) {
            const double expanded =
                (1.0 - z) * (1.0 - z) * 2.0 / (alpha * z * z * z) +
                (1.0 - z) / (alpha * z * z);
            CHECK(h_sing(2, alpha, z) == doctest::Approx(expanded).epsilon(1e-14));
        }
    }
}

TEST_CASE("h_reg_at_zero") {
    for (double alpha : {0.5, 2.0, 7.0}) {
        CHECK(h_reg_at_zero(0, alpha) ==
              doctest::Approx(-0.5 * (1.0 / alpha - 1.0)).epsilon(1e-14));
        CHECK(h_reg_at_zero(2, alpha) == 0.0);
    }
    for (int k = 0; k <= 2; ++k) CHECK(h_reg_at_zero(k, 1.0) == 0.0);
}

TEST_CASE("p_series: value at L = 0 is the j = 0 term") {
    for (int k = 0; k <= 2; ++k) {
        for (double alpha : {0.5, 1.0, 3.0}) {
            const double expected = bernoulli_d(k + 1) * std::pow(alpha, k + 1) / (k + 1);
            CHECK(p_series(k, alpha, 0.0, 1e-14).value ==
                  doctest::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("p_series: P_1(log(1-z)) = -Phi_0(z) against the closed form") {
    for (double z : {0.1, 0.3}) {
        const double L = std::log1p(-z);
        CHECK(p_series(0, 1.0, L, 1e-15).value ==
              doctest::Approx(-phi_closed(0, z)).epsilon(1e-13));
    }
}

TEST_CASE("p_series: k = 2 matches a finite-difference second derivative") {
    const double L = -0.1, h = 1e-4, alpha = 0.5;
    const double fd = (p_series(0, alpha, L + h, 1e-15).value -
                       2.0 * p_series(0, alpha, L, 1e-15).value +
                       p_series(0, alpha, L - h, 1e-15).value) /
                      (h * h);
    CHECK(p_series(2, alpha, L, 1e-15).value == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("p_series: domain and truncation") {
    CHECK_THROWS_AS(p_series(0, 1.0, 6.5, 1e-12), std::domain_error);  // beyond 2*pi
    HEval near_radius = p_series(0, 1.0, 6.2, 1e-15);
    CHECK(near_radius.truncated);
}

TEST_CASE("phi: spot values and cross-path agreement") {
    CHECK(phi(0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(phi(2, 0.0) == 0.0);
    CHECK(phi(0, 0.5) == doctest::Approx(2.0 - 1.0 / std::numbers::ln2).epsilon(1e-13));
    for (int k = 0; k <= 2; ++k) {
        for (double z : {0.2, 0.4}) {
            CHECK(phi(k, z) == doctest::Approx(phi_closed(k, z)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(phi(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(phi(0, -0.1), std::domain_error);
}

TEST_CASE("phi_hat: endpoints and the z -> 0 limit") {
    CHECK(phi_hat(0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(phi_hat(2, 1.0) == 0.0);
    CHECK(phi_hat(1, 1.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    // Second-order one-sided difference of phi estimates Phi_0'(0).
    const double h = 1e-4;
    const double fd = (4.0 * phi(0, h) - phi(0, 2.0 * h) - 3.0 * phi(0, 0.0)) / (2.0 * h);
    CHECK(std::abs(phi_hat(0, 1e-8) - fd) < 1e-6);
    CHECK(std::isfinite(phi_hat(0, 1e-8)));
    CHECK_THROWS_AS(phi_hat(0, 1.5), std::domain_error);
}

TEST_CASE("h_hat: vanishes identically at alpha = 1") {
    for (int k : {0, 1, 2}) {
        for (int i = 0; i <= 20; ++i) {
            const double z = 0.05 * i;
            CHECK(std::abs(h_hat(k, 1.0, z, 1e-12).value) <= 1e-12);
        }
    }
}

TEST_CASE("h_hat: spot values") {
    HEval v = h_hat(0, 2.0, 0.5, 1e-12);
    CHECK(v.value == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    for (double alpha : {0.5, 2.0, 5.0}) {
        CHECK(h_hat(0, alpha, 1.0, 1e-12).value ==
              doctest::Approx(0.5 * (1.0 - 1.0 / alpha)).epsilon(1e-13));
        CHECK(std::abs(h_hat(2, alpha, 1.0, 1e-12).value) <= 1e-15);
        CHECK(h_hat(0, alpha, 1.0, 1e-12).method == EvalMethod::endpoint);
    }
    // z = 0 limit equals -B_{k+2}(1 - alpha^{k+2}) / ((k+2) alpha).
    CHECK(h_hat(0, 2.0, 0.0, 1e-12).value == doctest::Approx(0.125).epsilon(1e-14));
    CHECK_THROWS_AS(h_hat(0, 2.0, -0.1, 1e-12), std::domain_error);
}

TEST_CASE("h_hat: series and direct paths agree at the switch boundary") {
    for (double alpha : {0.5, 1.7, 3.0, 5.0, 8.0}) {
        const double tol = alpha <= 3.0 ? 1e-8 : 1e-6;
        const double z_switch = make_eval_domain(alpha).z_switch;
        for (double z : {z_switch - 1e-6, z_switch + 1e-6}) {
            const double s = h_hat(0, alpha, z, 1e-12, EvalMethod::series).value;
            const double d = h_hat(0, alpha, z, 1e-12, EvalMethod::direct).value;
            CHECK(std::abs(s - d) <= tol * std::abs(d));
            const double s2 = h_hat(2, alpha, z, 1e-12, EvalMethod::series).value;
            const double d2 = h_hat(2, alpha, z, 1e-12, EvalMethod::direct).value;
            CHECK(std::abs(s2 - d2) <= tol * std::abs(d2));
        }
    }
}

TEST_CASE("operator recurrence via finite differences") {
    const double step = 1e-5;
    for (int k : {0, 1}) {
        for (double alpha : {0.5, 2.0}) {
            for (double z : {0.3, 0.6}) {
                const double fd = -(1.0 - z) *
                                  (h_direct(k, alpha, z + step) - h_direct(k, alpha, z - step)) /
                                  (2.0 * step);
                const double next = h_direct(k + 1, alpha, z);
                CHECK(std::abs(fd - next) <= 1e-5 * (1.0 + std::abs(next)));
            }
        }
    }
}

TEST_CASE("simple pole at z = 0 with residue 1/alpha") {
    for (double alpha : {0.5, 2.0}) {
        for (int i = 1; i <= 6; ++i) {
            const double z = std::pow(10.0, -i);
            CHECK(std::abs(z * (h_direct(0, alpha, z) - h_sing(0, alpha, z))) < 1.0);
        }
        const double z = 1e-6;
        CHECK(z * h_direct(0, alpha, z) == doctest::Approx(1.0 / alpha).epsilon(1e-5));
    }
}

TEST_CASE("forced direct path at small z sets the precision-loss flag") {
    const double alpha = 5000.0, z = 8e-4;
    HEval v = h_hat(0, alpha, z, 1e-12);  // auto picks direct: z is past the window
    CHECK(v.method == EvalMethod::direct);
    CHECK(v.precision_loss);
    // Independent check from the oracle sum.
    const double ref =
        (h_oracle(0, alpha, z, 1e-15).value - h_sing(0, alpha, z) - h_reg_at_zero(0, alpha)) / z;
    CHECK(v.value == doctest::Approx(ref).epsilon(1e-9));
    CHECK_THROWS_AS(h_hat(0, 2.0, 0.0, 1e-12, EvalMethod::direct), std::domain_error);
}

TEST_CASE("w-parameterized evaluation matches the plain one away from z = 1") {
    for (int k : {0, 2}) {
        for (double alpha : {0.5, 2.0}) {
            for (double w : {0.1, 0.2, 0.35}) {
                const double a = h_hat_w(k, alpha, w, 1e-12).value;
                const double b = h_hat(k, alpha, 1.0 - w, 1e-12).value;
                CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
                CHECK(phi_hat_w(k, w) ==
                      doctest::Approx(phi_hat(k, 1.0 - w)).epsilon(1e-12));
            }
        }
    }
    // At w below double resolution of z, values interpolate the boundary layer.
    CHECK(std::isfinite(h_hat_w(0, 0.05, 1e-30, 1e-12).value));
    CHECK(h_hat_w(0, 2.0, 0.0, 1e-12).value == doctest::Approx(0.25).epsilon(1e-14));
}
