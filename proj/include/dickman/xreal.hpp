#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dickman {

// Extended-precision real scalar: an unevaluated sum hi + lo of two doubles
// with |lo| <= ulp(hi)/2 (a "double-double"). Carries ~106 significand bits;
// +, -, *, /, ln, exp keep relative error below 2^-95 on [1e-30, 1e30].
//
// Requires round-to-nearest IEEE doubles; do not compile with -ffast-math.
struct XReal {
    double hi = 0.0;
    double lo = 0.0;

    constexpr XReal() = default;
    constexpr XReal(double h) : hi(h) {}
    constexpr XReal(double h, double l) : hi(h), lo(l) {}
    constexpr XReal(int v) : hi(v) {}
    constexpr XReal(long v) : hi(static_cast<double>(v)) {}
    constexpr XReal(long long v) : hi(static_cast<double>(v)) {}
    constexpr XReal(unsigned long long v) : hi(static_cast<double>(v)) {}
};

namespace detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// requires |a| >= |b| or a == 0
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

} // namespace detail

inline XReal operator-(const XReal& a) { return {-a.hi, -a.lo}; }

inline XReal operator+(const XReal& a, const XReal& b) {
    double s1, s2, t1, t2;
    s1 = detail::two_sum(a.hi, b.hi, s2);
    t1 = detail::two_sum(a.lo, b.lo, t2);
    s2 += t1;
    s1 = detail::quick_two_sum(s1, s2, s2);
    s2 += t2;
    s1 = detail::quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline XReal operator+(const XReal& a, double b) {
    double s1, s2;
    s1 = detail::two_sum(a.hi, b, s2);
    s2 += a.lo;
    s1 = detail::quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline XReal operator+(double a, const XReal& b) { return b + a; }

inline XReal operator-(const XReal& a, const XReal& b) { return a + (-b); }
inline XReal operator-(const XReal& a, double b) { return a + (-b); }
inline XReal operator-(double a, const XReal& b) { return (-b) + a; }

inline XReal operator*(const XReal& a, const XReal& b) {
    double p1, p2;
    p1 = detail::two_prod(a.hi, b.hi, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    p1 = detail::quick_two_sum(p1, p2, p2);
    return {p1, p2};
}

inline XReal operator*(const XReal& a, double b) {
    double p1, p2;
    p1 = detail::two_prod(a.hi, b, p2);
    p2 += a.lo * b;
    p1 = detail::quick_two_sum(p1, p2, p2);
    return {p1, p2};
}

inline XReal operator*(double a, const XReal& b) { return b * a; }

inline XReal operator/(const XReal& a, const XReal& b) {
    double q1 = a.hi / b.hi;
    XReal r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    double s, e;
    s = detail::quick_two_sum(q1, q2, e);
    return XReal{s, e} + q3;
}

inline XReal operator/(const XReal& a, double b) { return a / XReal(b); }
inline XReal operator/(double a, const XReal& b) { return XReal(a) / b; }

inline XReal& operator+=(XReal& a, const XReal& b) { a = a + b; return a; }
inline XReal& operator-=(XReal& a, const XReal& b) { a = a - b; return a; }
inline XReal& operator*=(XReal& a, const XReal& b) { a = a * b; return a; }
inline XReal& operator/=(XReal& a, const XReal& b) { a = a / b; return a; }
inline XReal& operator+=(XReal& a, double b) { a = a + b; return a; }
inline XReal& operator-=(XReal& a, double b) { a = a - b; return a; }
inline XReal& operator*=(XReal& a, double b) { a = a * b; return a; }
inline XReal& operator/=(XReal& a, double b) { a = a / XReal(b); return a; }

inline bool operator==(const XReal& a, const XReal& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(const XReal& a, const XReal& b) { return !(a == b); }
inline bool operator<(const XReal& a, const XReal& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const XReal& a, const XReal& b) { return b < a; }
inline bool operator<=(const XReal& a, const XReal& b) { return !(b < a); }
inline bool operator>=(const XReal& a, const XReal& b) { return !(a < b); }

inline double to_double(const XReal& a) { return a.hi + a.lo; }
inline bool is_finite(const XReal& a) { return std::isfinite(a.hi) && std::isfinite(a.lo); }
inline bool is_zero(const XReal& a) { return a.hi == 0.0 && a.lo == 0.0; }
inline XReal abs(const XReal& a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline XReal ldexp(const XReal& a, int n) {
    return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)};
}

inline XReal floor(const XReal& a) {
    double h = std::floor(a.hi);
    if (h != a.hi) return {h, 0.0};
    double l = std::floor(a.lo);
    double s, e;
    s = detail::quick_two_sum(h, l, e);
    return {s, e};
}

inline XReal round_nearest(const XReal& a) { return floor(a + 0.5); }

// Mathematical constants as exact double pairs.
inline constexpr XReal xr_pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr XReal xr_two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr XReal xr_half_pi{1.5707963267948966, 6.123233995736766e-17};
inline constexpr XReal xr_ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr XReal xr_e{2.718281828459045, 1.4456468917292502e-16};

XReal sqrt(const XReal& a);
XReal exp(const XReal& a);
XReal log(const XReal& a);
void sincos(const XReal& a, XReal& s, XReal& c);
XReal sin(const XReal& a);
XReal cos(const XReal& a);
XReal atan2(const XReal& y, const XReal& x);
XReal atan(const XReal& a);
XReal pow_int(const XReal& base, long long n);

// Decimal serialization: scientific notation with `digits` significant
// digits (>= 32 by default); round-trips through parse() to 2^-95 relative.
std::string to_string(const XReal& a, int digits = 36);
XReal parse_xreal(const std::string& text);

std::ostream& operator<<(std::ostream& os, const XReal& a);

} // namespace dickman
