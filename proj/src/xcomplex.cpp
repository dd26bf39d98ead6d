#include "dickman/xcomplex.hpp"

namespace dickman {

XReal arg(const XComplex& a) { return atan2(a.im, a.re); }

XComplex log(const XComplex& a) {
    return {log(abs2(a)) * 0.5, arg(a)};
}

XComplex exp(const XComplex& a) {
    XReal m = exp(a.re);
    XReal s, c;
    sincos(a.im, s, c);
    return {m * c, m * s};
}

namespace {

void sinh_cosh(const XReal& x, XReal& sh, XReal& ch) {
    if (std::fabs(x.hi) < 0.5) {
        // Taylor to keep sinh accurate near zero
        XReal x2 = x * x;
        XReal term = x;
        sh = x;
        for (int n = 1; n < 14; ++n) {
            term = term * x2 / static_cast<double>((2 * n) * (2 * n + 1));
            sh += term;
            if (std::fabs(term.hi) < 1e-40) break;
        }
        ch = sqrt(XReal(1.0) + sh * sh);
    } else {
        XReal e = exp(x);
        XReal ei = XReal(1.0) / e;
        sh = (e - ei) * 0.5;
        ch = (e + ei) * 0.5;
    }
}

} // namespace

XComplex sin(const XComplex& a) {
    XReal s, c, sh, ch;
    sincos(a.re, s, c);
    sinh_cosh(a.im, sh, ch);
    return {s * ch, c * sh};
}

XComplex pow_int(const XComplex& base, long long n) {
    if (n == 0) return XComplex(1.0);
    bool inv = n < 0;
    unsigned long long m = inv ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                               : static_cast<unsigned long long>(n);
    XComplex acc(1.0);
    XComplex b = base;
    while (m) {
        if (m & 1) acc *= b;
        m >>= 1;
        if (m) b *= b;
    }
    return inv ? XComplex(1.0) / acc : acc;
}

std::string to_string(const XComplex& a) {
    return to_string(a.re) + (a.im.hi < 0.0 || (a.im.hi == 0.0 && a.im.lo < 0.0) ? " - " : " + ") +
           to_string(abs(a.im)) + "i";
}

} // namespace dickman
