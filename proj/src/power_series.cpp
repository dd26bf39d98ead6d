#include "dickman/power_series.hpp"
#include "dickman/errors.hpp"

namespace dickman {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw DomainError("power series truncation orders differ");
}

} // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) {
        XReal acc(0.0);
        for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
        r[k] = acc;
    }
    return r;
}

PowerSeries series_exp(const PowerSeries& a) {
    if (!is_zero(a[0]))
        throw ConstantTermNonzero("series_exp needs a zero constant term, got " +
                                  to_string(a[0]));
    PowerSeries b(a.order());
    b[0] = XReal(1.0);
    for (int k = 1; k <= a.order(); ++k) {
        XReal acc(0.0);
        for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j] * static_cast<double>(j);
        b[k] = acc / static_cast<double>(k);
    }
    return b;
}

PowerSeries series_log(const PowerSeries& b) {
    if (b[0] != XReal(1.0))
        throw ConstantTermNonzero("series_log needs constant term 1, got " +
                                  to_string(b[0]));
    PowerSeries a(b.order());
    for (int k = 1; k <= b.order(); ++k) {
        XReal acc(0.0);
        for (int j = 1; j < k; ++j) acc += a[j] * b[k - j] * static_cast<double>(j);
        a[k] = b[k] - acc / static_cast<double>(k);
    }
    return a;
}

} // namespace dickman
