#pragma once

#include <cmath>

namespace rmt {

// Double-double arithmetic (~32 significant digits). Hankel determinants are
// badly conditioned, so the sign-count and partition cross-checks run on this
// type instead of plain doubles.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace dd_detail {
inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
}  // namespace dd_detail

inline dd operator+(dd a, dd b) {
    dd s = dd_detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return dd_detail::quick_two_sum(s.hi, s.lo);
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
    dd p = dd_detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_detail::quick_two_sum(p.hi, p.lo);
}
inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = dd_detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}
inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }
inline dd& operator/=(dd& a, dd b) { return a = a / b; }

inline bool operator<(dd a, dd b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(dd a, dd b) { return b < a; }
inline dd abs(dd a) { return a.hi < 0.0 ? -a : a; }

inline dd dd_sqrt(dd a) {
    if (a.hi == 0.0) return 0.0;
    double x = std::sqrt(a.hi);
    dd xd(x);
    // one Newton step in double-double
    return xd + (a - xd * xd) / (dd(2.0) * xd);
}

inline dd dd_pi() { return {3.141592653589793116, 1.2246467991473531772e-16}; }

}  // namespace rmt
