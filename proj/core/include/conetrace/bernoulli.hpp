#ifndef CONETRACE_BERNOULLI_HPP
#define CONETRACE_BERNOULLI_HPP

#include <vector>

#include "conetrace/rational.hpp"

namespace conetrace {

/// Exact Bernoulli numbers B_0..B_N under the convention B_1 = -1/2,
/// computed once from the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1)
/// and immutable afterwards. Safe for concurrent reads.
class BernoulliTable {
  public:
    explicit BernoulliTable(int max_index);

    int max_index() const { return static_cast<int>(values_.size()) - 1; }

    /// Exact B_n; throws std::out_of_range past the table capacity.
    const BigRational& value(int n) const;

    /// Double view of B_n, cached at construction.
    double value_as_double(int n) const;

  private:
    std::vector<BigRational> values_;
    std::vector<double> doubles_;
};

/// Shared process-wide table with the default capacity N = 64.
const BernoulliTable& shared_bernoulli_table();

/// B_n from the shared table.
const BigRational& bernoulli(int n);

/// Double view of B_n from the shared table.
double bernoulli_d(int n);

}  // namespace conetrace

#endif
