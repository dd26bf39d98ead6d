#pragma once

#include "dickman/xreal.hpp"

#include <vector>

namespace dickman {

// Truncated formal power series in z with XReal coefficients, indexed
// 0..order(). Binary operations require both operands to share the
// truncation order.
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    XReal& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    const XReal& operator[](int k) const { return c_[static_cast<size_t>(k)]; }

private:
    std::vector<XReal> c_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b); // truncated Cauchy product

// exp of a series with zero constant term, via the coefficient recurrence
// b_0 = 1, b_k = (1/k) sum_{j=1..k} j a_j b_{k-j}. Throws ConstantTermNonzero.
PowerSeries series_exp(const PowerSeries& a);

// Inverse recurrence: log of a series with constant term 1.
PowerSeries series_log(const PowerSeries& b);

} // namespace dickman
