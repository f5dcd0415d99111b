#ifndef CONETRACE_RATIONAL_HPP
#define CONETRACE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace conetrace {

// Arbitrary-precision integers and rationals. cpp_rational keeps the value
// canonical (reduced, positive denominator), which is exactly the invariant
// the Bernoulli table relies on.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigRational& q) { return q.template convert_to<double>(); }

// Exact binomial coefficient C(n, k).
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

}  // namespace conetrace

#endif
