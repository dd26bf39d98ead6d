#include "dickman/xreal.hpp"
#include "dickman/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <vector>

namespace dickman {

XReal sqrt(const XReal& a) {
    if (is_zero(a)) return XReal(0.0);
    if (a.hi < 0.0) throw DomainError("sqrt of negative value");
    XReal s(std::sqrt(a.hi));
    s = (s + a / s) * 0.5;
    s = (s + a / s) * 0.5;
    return s;
}

XReal exp(const XReal& a) {
    if (a.hi <= -745.0) return XReal(0.0);
    if (a.hi >= 709.0) throw DomainError("exp overflow");
    double m = std::floor(a.hi / xr_ln2.hi + 0.5);
    XReal r = (a - xr_ln2 * m) * (1.0 / 512.0);

    // expm1 by Taylor on the reduced argument, then 9 doublings.
    XReal sum = r;
    XReal term = r;
    for (int k = 2; k < 24; ++k) {
        term = term * r / static_cast<double>(k);
        sum += term;
        if (std::fabs(term.hi) < 1e-40 * std::fabs(sum.hi)) break;
    }
    for (int i = 0; i < 9; ++i) sum = sum * 2.0 + sum * sum;
    return ldexp(sum + 1.0, static_cast<int>(m));
}

XReal log(const XReal& a) {
    if (a.hi <= 0.0) throw DomainError("log of non-positive value");
    XReal y(std::log(a.hi));
    y = y + (a * exp(-y) - 1.0);
    return y;
}

namespace {

// Taylor sin/cos for |r| <= pi/4 + slack.
void sincos_reduced(const XReal& r, XReal& s, XReal& c) {
    XReal r2 = r * r;
    XReal term = r;
    s = r;
    for (int n = 1; n < 16; ++n) {
        term = term * r2 / static_cast<double>(-(2 * n) * (2 * n + 1));
        s += term;
        if (std::fabs(term.hi) < 1e-40) break;
    }
    term = XReal(1.0);
    c = XReal(1.0);
    for (int n = 1; n < 16; ++n) {
        term = term * r2 / static_cast<double>(-(2 * n - 1) * (2 * n));
        c += term;
        if (std::fabs(term.hi) < 1e-40) break;
    }
}

} // namespace

void sincos(const XReal& a, XReal& s, XReal& c) {
    double q = std::floor(a.hi / xr_half_pi.hi + 0.5);
    XReal r = a - xr_half_pi * q;
    long long qi = static_cast<long long>(q) & 3;
    if (qi < 0) qi += 4;
    XReal st, ct;
    sincos_reduced(r, st, ct);
    switch (qi) {
        case 0: s = st; c = ct; break;
        case 1: s = ct; c = -st; break;
        case 2: s = -st; c = -ct; break;
        default: s = -ct; c = st; break;
    }
}

XReal sin(const XReal& a) {
    XReal s, c;
    sincos(a, s, c);
    return s;
}

XReal cos(const XReal& a) {
    XReal s, c;
    sincos(a, s, c);
    return c;
}

XReal atan2(const XReal& y, const XReal& x) {
    if (is_zero(y)) {
        if (x.hi > 0.0 || (x.hi == 0.0 && x.lo > 0.0)) return XReal(0.0);
        if (is_zero(x)) throw DomainError("atan2(0, 0)");
        return xr_pi;
    }
    if (is_zero(x)) return y.hi > 0.0 ? xr_half_pi : -xr_half_pi;
    double th0 = std::atan2(to_double(y), to_double(x));
    XReal s0, c0;
    sincos(XReal(th0), s0, c0);
    // rotate (x, y) by -th0; the residual angle is ~1 ulp of th0
    XReal u = x * c0 + y * s0;
    XReal v = y * c0 - x * s0;
    XReal t = v / u;
    return XReal(th0) + (t - t * t * t * (1.0 / 3.0));
}

XReal atan(const XReal& a) { return atan2(a, XReal(1.0)); }

XReal pow_int(const XReal& base, long long n) {
    if (n == 0) return XReal(1.0);
    bool inv = n < 0;
    unsigned long long m = inv ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                               : static_cast<unsigned long long>(n);
    XReal acc(1.0);
    XReal b = base;
    while (m) {
        if (m & 1) acc *= b;
        m >>= 1;
        if (m) b *= b;
    }
    return inv ? XReal(1.0) / acc : acc;
}

namespace {

XReal pow10_xr(int e) {
    if (e == 0) return XReal(1.0);
    XReal p = pow_int(XReal(10.0), e > 0 ? e : -static_cast<long long>(e));
    return e > 0 ? p : XReal(1.0) / p;
}

} // namespace

std::string to_string(const XReal& a, int digits) {
    if (digits < 32) digits = 32;
    if (!is_finite(a)) return "nan";
    std::string out;
    XReal m = a;
    if (m.hi < 0.0 || (m.hi == 0.0 && m.lo < 0.0)) {
        out.push_back('-');
        m = -m;
    }
    if (is_zero(m)) {
        out += "0.";
        out.append(static_cast<size_t>(digits - 1), '0');
        out += "e+00";
        return out;
    }
    int e10 = static_cast<int>(std::floor(std::log10(m.hi)));
    m = m / pow10_xr(e10);
    while (m.hi >= 10.0) { m = m / 10.0; ++e10; }
    while (m.hi < 1.0) { m = m * 10.0; --e10; }

    std::vector<int> ds(static_cast<size_t>(digits));
    for (int i = 0; i < digits; ++i) {
        int d = static_cast<int>(std::floor(to_double(m)));
        if (d < 0) d = 0;
        if (d > 9) d = 9;
        ds[static_cast<size_t>(i)] = d;
        m = (m - static_cast<double>(d)) * 10.0;
    }
    if (to_double(m) >= 5.0) {
        int i = digits - 1;
        while (i >= 0 && ds[static_cast<size_t>(i)] == 9) ds[static_cast<size_t>(i--)] = 0;
        if (i < 0) {
            ds[0] = 1;
            ++e10;
        } else {
            ++ds[static_cast<size_t>(i)];
        }
    }
    out.push_back(static_cast<char>('0' + ds[0]));
    out.push_back('.');
    for (int i = 1; i < digits; ++i) out.push_back(static_cast<char>('0' + ds[static_cast<size_t>(i)]));
    char buf[8];
    std::snprintf(buf, sizeof buf, "e%+03d", e10);
    out += buf;
    return out;
}

XReal parse_xreal(const std::string& text) {
    const char* p = text.c_str();
    while (std::isspace(static_cast<unsigned char>(*p))) ++p;
    bool neg = false;
    if (*p == '+' || *p == '-') neg = (*p++ == '-');
    XReal m(0.0);
    int frac = 0;
    bool any = false, dot = false;
    for (; *p; ++p) {
        if (*p == '.') {
            if (dot) throw FormatError("bad XReal literal: " + text);
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(*p))) {
            m = m * 10.0 + static_cast<double>(*p - '0');
            if (dot) ++frac;
            any = true;
        } else {
            break;
        }
    }
    if (!any) throw FormatError("bad XReal literal: " + text);
    long e10 = 0;
    if (*p == 'e' || *p == 'E') {
        char* end = nullptr;
        e10 = std::strtol(p + 1, &end, 10);
        p = end;
    }
    while (std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (*p) throw FormatError("trailing characters in XReal literal: " + text);
    XReal r = m * pow10_xr(static_cast<int>(e10 - frac));
    return neg ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const XReal& a) { return os << to_string(a); }

} // namespace dickman
