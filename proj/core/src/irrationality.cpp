#include "conetrace/irrationality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conetrace/bernoulli.hpp"
#include "conetrace/coefficients.hpp"
#include "conetrace/gamma.hpp"

namespace conetrace {
namespace {

constexpr int kJMax = 41;

void require_odd_in_range(int j) {
    if (j < 1 || j % 2 == 0) throw std::domain_error("irrationality: requires odd j >= 1");
    if (j > kJMax) throw std::domain_error("irrationality: requires j <= 41");
}

}  // namespace

double v_j(int j) {
    require_odd_in_range(j);
    return taylor_v(j);
}

double d_j(int j) {
    if (j < 1 || j % 2 == 0) throw std::domain_error("d_j: requires odd j >= 1");
    if (j + 3 > shared_bernoulli_table().max_index())
        throw std::domain_error("d_j: j beyond Bernoulli table capacity");
    const BigRational ratio = bernoulli(j + 1) / bernoulli(j + 3);
    return static_cast<double>(j + 2) * static_cast<double>(j + 3) /
           (std::numbers::pi * std::numbers::pi) * std::abs(to_double(ratio));
}

double lower_bound(int j) {
    require_odd_in_range(j);
    const double lb = std::log(std::abs(bernoulli_d(j + 3)));
    const double lg = static_cast<double>(j - 1) * std::numbers::ln2 +
                      static_cast<double>(j + 3) * std::log(std::numbers::pi) + lb -
                      log_gamma(static_cast<double>(j + 4)) -
                      std::log(static_cast<double>(j + 3)) + std::log(7.0 / 9.0) +
                      std::log(std::ldexp(1.0, j + 3) - 1.0) -
                      std::log(std::pow(3.0, j + 1) - 1.0);
    return std::exp(lg);
}

std::vector<TaylorDiagRow> report(int j_max) {
    require_odd_in_range(j_max);
    std::vector<TaylorDiagRow> rows;
    rows.reserve(static_cast<size_t>(j_max + 1) / 2);
    for (int j = 1; j <= j_max; j += 2) {
        TaylorDiagRow row;
        row.j = j;
        row.i_j = i_j_closed(j);
        row.i_j2 = i_j_closed(j + 2);
        row.v_j = v_j(j);
        row.d_j = d_j(j);
        row.lower_bound = lower_bound(j);
        const double b = bernoulli_d(j + 3);
        row.taylor_coeff = row.v_j * b;
        row.root = std::exp((std::log(row.v_j) + std::log(std::abs(b))) /
                            static_cast<double>(j + 3));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace conetrace
