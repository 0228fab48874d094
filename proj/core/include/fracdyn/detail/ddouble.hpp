#pragma once

#include <cmath>

// Double-double arithmetic: an unevaluated sum of two doubles giving ~31
// significant digits. The Mittag-Leffler series suffers cancellation at the
// scale of its peak term (up to ~e^20 for the arguments this library
// certifies), which eats half the digits of plain double accumulation; the
// series is therefore summed, and the gamma values it divides by are
// produced, in this representation. Error-free transforms follow Dekker and
// Knuth; exp/ln/lgamma follow the usual QD-style constructions.

namespace fracdyn::detail {

struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double h) : hi(h) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

// s = fl(a+b), err = exact residual.
inline double two_sum(double a, double b, double& err) {
    const double s = a + b;
    const double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// Requires |a| >= |b| (or a == 0).
inline double quick_two_sum(double a, double b, double& err) {
    const double s = a + b;
    err = b - (s - a);
    return s;
}

// p = fl(a*b), err = exact residual via FMA.
inline double two_prod(double a, double b, double& err) {
    const double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

inline DDouble dd_add(const DDouble& a, const DDouble& b) {
    double s1, s2, t1, t2;
    s1 = two_sum(a.hi, b.hi, s2);
    t1 = two_sum(a.lo, b.lo, t2);
    s2 += t1;
    s1 = quick_two_sum(s1, s2, s2);
    s2 += t2;
    s1 = quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline DDouble dd_add(const DDouble& a, double b) {
    double s1, s2;
    s1 = two_sum(a.hi, b, s2);
    s2 += a.lo;
    s1 = quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline DDouble dd_neg(const DDouble& a) { return {-a.hi, -a.lo}; }

inline DDouble dd_sub(const DDouble& a, const DDouble& b) {
    return dd_add(a, dd_neg(b));
}

inline DDouble dd_mul(const DDouble& a, const DDouble& b) {
    double p1, p2;
    p1 = two_prod(a.hi, b.hi, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    p1 = quick_two_sum(p1, p2, p2);
    return {p1, p2};
}

inline DDouble dd_mul(const DDouble& a, double b) {
    double p1, p2;
    p1 = two_prod(a.hi, b, p2);
    p2 += a.lo * b;
    p1 = quick_two_sum(p1, p2, p2);
    return {p1, p2};
}

inline DDouble dd_div(const DDouble& a, const DDouble& b) {
    const double q1 = a.hi / b.hi;
    DDouble r = dd_sub(a, dd_mul(b, q1));
    const double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    const double q3 = r.hi / b.hi;
    double s1, s2;
    s1 = quick_two_sum(q1, q2, s2);
    return dd_add(DDouble{s1, s2}, q3);
}

// Multiply by an exact power of two.
inline DDouble dd_mul_pwr2(const DDouble& a, double p) {
    return {a.hi * p, a.lo * p};
}

// pi and ln 2 split into leading double plus residual (verified against
// libquadmath in the test suite).
inline constexpr DDouble dd_pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DDouble dd_ln2{6.931471805599452862e-01, 2.319046813846299558e-17};

DDouble dd_exp(const DDouble& a);
DDouble dd_ln(const DDouble& a);      // a > 0
DDouble dd_lgamma(const DDouble& x);  // x > 0

} // namespace fracdyn::detail
