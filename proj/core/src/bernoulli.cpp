#include "conetrace/bernoulli.hpp"

#include <stdexcept>
#include <string>

namespace conetrace {

BernoulliTable::BernoulliTable(int max_index) {
    if (max_index < 0) throw std::invalid_argument("BernoulliTable: max_index must be >= 0");
    values_.reserve(static_cast<size_t>(max_index) + 1);
    values_.push_back(BigRational(1));
    // B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k
    for (int n = 1; n <= max_index; ++n) {
        if (n > 1 && n % 2 == 1) {
            values_.push_back(BigRational(0));
            continue;
        }
        BigRational sum(0);
        for (int k = 0; k < n; ++k) {
            sum += BigRational(binomial(static_cast<unsigned>(n) + 1, static_cast<unsigned>(k))) *
                   values_[static_cast<size_t>(k)];
        }
        values_.push_back(-sum / BigRational(n + 1));
    }
    doubles_.reserve(values_.size());
    for (const BigRational& v : values_) doubles_.push_back(to_double(v));
}

const BigRational& BernoulliTable::value(int n) const {
    if (n < 0 || n > max_index())
        throw std::out_of_range("BernoulliTable: index " + std::to_string(n) +
                                " exceeds capacity " + std::to_string(max_index()));
    return values_[static_cast<size_t>(n)];
}

double BernoulliTable::value_as_double(int n) const {
    if (n < 0 || n > max_index())
        throw std::out_of_range("BernoulliTable: index " + std::to_string(n) +
                                " exceeds capacity " + std::to_string(max_index()));
    return doubles_[static_cast<size_t>(n)];
}

const BernoulliTable& shared_bernoulli_table() {
    static const BernoulliTable table(64);
    return table;
}

const BigRational& bernoulli(int n) { return shared_bernoulli_table().value(n); }

double bernoulli_d(int n) { return shared_bernoulli_table().value_as_double(n); }

}  // namespace conetrace
