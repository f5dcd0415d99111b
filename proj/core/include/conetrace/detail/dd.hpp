#ifndef CONETRACE_DETAIL_DD_HPP
#define CONETRACE_DETAIL_DD_HPP

#include <cmath>

namespace conetrace::detail {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms,
// FMA products). Roughly 1e-31 relative accuracy; used to keep the
// direct-path evaluation of the regularized h-functions honest when a
// caller forces it at small z.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a, DD b) { return a + DD{-b.hi, -b.lo}; }

inline DD operator*(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - DD(q1) * b;
    const double q2 = r.hi / b.hi;
    r = r - DD(q2) * b;
    const double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD dd_ldexp(DD a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

inline DD dd_exp(DD a) {
    // exp(a) = 2^m * exp(r)^(2^9) with r = (a - m ln2)/512 small enough
    // for a short Taylor series at full double-double accuracy.
    constexpr DD kLn2{6.931471805599452862e-01, 2.319046813846299558e-17};
    if (a.hi > 709.0) return {HUGE_VAL, 0.0};
    if (a.hi < -709.0) return {0.0, 0.0};
    const double m = std::round(a.hi / kLn2.hi);
    DD r = a - DD(m) * kLn2;
    r = dd_ldexp(r, -9);
    // s = exp(r) - 1 by Taylor; |r| <= ~7e-4 so nine terms reach ~1e-32.
    DD s = r;
    DD term = r;
    for (int k = 2; k <= 9; ++k) {
        term = term * r / DD(static_cast<double>(k));
        s = s + term;
    }
    // exp(2u)-1 = (exp(u)-1)^2 + 2(exp(u)-1), nine doublings undo the scaling.
    for (int i = 0; i < 9; ++i) s = s * s + dd_ldexp(s, 1);
    return dd_ldexp(s + DD(1.0), static_cast<int>(m));
}

inline DD dd_log(DD a) {
    // Newton correction of the double-precision logarithm.
    const double y = std::log(a.hi);
    DD d = a * dd_exp(DD(-y)) - DD(1.0);
    DD corr = d - dd_ldexp(d * d, -1);  // log(1+d) to O(d^3), d ~ 1e-16
    return DD(y) + corr;
}

inline DD dd_pow(DD base, double expo) { return dd_exp(DD(expo) * dd_log(base)); }

}  // namespace conetrace::detail

#endif
