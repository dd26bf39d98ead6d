#pragma once

#include "dickman/xreal.hpp"

#include <string>

namespace dickman {

// Complex value as a pair of XReal components. Kept local to this project:
// only the operations the contour and expansion work need.
struct XComplex {
    XReal re{0.0};
    XReal im{0.0};

    constexpr XComplex() = default;
    constexpr XComplex(XReal r) : re(r) {}
    constexpr XComplex(XReal r, XReal i) : re(r), im(i) {}
    constexpr XComplex(double r, double i = 0.0) : re(r), im(i) {}
};

inline XComplex operator-(const XComplex& a) { return {-a.re, -a.im}; }
inline XComplex conj(const XComplex& a) { return {a.re, -a.im}; }

inline XComplex operator+(const XComplex& a, const XComplex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline XComplex operator-(const XComplex& a, const XComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline XComplex operator*(const XComplex& a, const XComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline XComplex operator*(const XComplex& a, const XReal& s) { return {a.re * s, a.im * s}; }
inline XComplex operator*(const XReal& s, const XComplex& a) { return a * s; }
inline XComplex operator*(const XComplex& a, double s) { return {a.re * s, a.im * s}; }
inline XComplex operator*(double s, const XComplex& a) { return a * s; }

inline XComplex operator/(const XComplex& a, const XComplex& b) {
    XReal den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline XComplex operator/(const XComplex& a, const XReal& s) { return {a.re / s, a.im / s}; }
inline XComplex operator/(const XComplex& a, double s) { return {a.re / s, a.im / s}; }

inline XComplex& operator+=(XComplex& a, const XComplex& b) { a = a + b; return a; }
inline XComplex& operator-=(XComplex& a, const XComplex& b) { a = a - b; return a; }
inline XComplex& operator*=(XComplex& a, const XComplex& b) { a = a * b; return a; }

inline bool is_finite(const XComplex& a) { return is_finite(a.re) && is_finite(a.im); }

inline XReal abs2(const XComplex& a) { return a.re * a.re + a.im * a.im; }
inline XReal abs(const XComplex& a) { return sqrt(abs2(a)); }

XReal arg(const XComplex& a);
XComplex log(const XComplex& a);  // principal branch
XComplex exp(const XComplex& a);
XComplex sin(const XComplex& a);
XComplex pow_int(const XComplex& base, long long n);

std::string to_string(const XComplex& a);

} // namespace dickman
