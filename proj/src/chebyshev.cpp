#include "dickman/chebyshev.hpp"
#include "dickman/errors.hpp"

namespace dickman {

std::vector<XReal> cheb_points(int n, const XReal& a, const XReal& b) {
    XReal mid = (a + b) * 0.5;
    XReal half = (b - a) * 0.5;
    std::vector<XReal> pts(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        XReal theta = xr_pi * (2.0 * (n - 1 - j) + 1.0) / (2.0 * n);
        pts[static_cast<size_t>(j)] = mid + half * cos(theta);
    }
    return pts;
}

std::vector<XReal> cheb_fit(const std::vector<XReal>& vals) {
    const int n = static_cast<int>(vals.size());
    if (n < 1) throw DomainError("cheb_fit needs at least one sample");
    std::vector<XReal> coef(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        XReal acc(0.0);
        for (int j = 0; j < n; ++j) {
            // vals[j] sits at w = cos(theta_{n-1-j}), matching cheb_points order
            XReal theta = xr_pi * (2.0 * (n - 1 - j) + 1.0) / (2.0 * n);
            acc += vals[static_cast<size_t>(j)] * cos(theta * static_cast<double>(k));
        }
        coef[static_cast<size_t>(k)] = acc * (k == 0 ? 1.0 : 2.0) / static_cast<double>(n);
    }
    return coef;
}

XReal cheb_eval(const std::vector<XReal>& coef, const XReal& a, const XReal& b,
                const XReal& u) {
    XReal w = (u * 2.0 - (a + b)) / (b - a);
    XReal b1(0.0), b2(0.0);
    for (int k = static_cast<int>(coef.size()) - 1; k >= 1; --k) {
        XReal bk = coef[static_cast<size_t>(k)] + w * b1 * 2.0 - b2;
        b2 = b1;
        b1 = bk;
    }
    return coef[0] + w * b1 - b2;
}

std::vector<XReal> cheb_derivative(const std::vector<XReal>& coef, const XReal& a,
                                   const XReal& b) {
    const int n = static_cast<int>(coef.size()); // degree n-1
    std::vector<XReal> d(static_cast<size_t>(n) + 1);
    for (int k = n - 1; k >= 1; --k)
        d[static_cast<size_t>(k - 1)] =
            d[static_cast<size_t>(k + 1)] + coef[static_cast<size_t>(k)] * (2.0 * k);
    d[0] = d[0] * 0.5;
    d.resize(static_cast<size_t>(std::max(1, n - 1)));
    XReal scale = XReal(2.0) / (b - a);
    for (auto& c : d) c *= scale;
    return d;
}

} // namespace dickman
