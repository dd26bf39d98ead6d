#pragma once

#include "dickman/xreal.hpp"

#include <vector>

namespace dickman {

// Chebyshev interpolation helpers in the shifted variable w = 2(u-a)/(b-a) - 1.

// Chebyshev-Gauss points (n of them) mapped to [a, b], ascending.
std::vector<XReal> cheb_points(int n, const XReal& a, const XReal& b);

// Coefficients c such that sum_k c[k] T_k(w) interpolates vals at
// cheb_points(vals.size(), a, b).
std::vector<XReal> cheb_fit(const std::vector<XReal>& vals);

// Clenshaw evaluation at u in [a, b].
XReal cheb_eval(const std::vector<XReal>& coef, const XReal& a, const XReal& b,
                const XReal& u);

// Coefficients of d/du of the interpolant (includes the 2/(b-a) chain factor).
std::vector<XReal> cheb_derivative(const std::vector<XReal>& coef, const XReal& a,
                                   const XReal& b);

} // namespace dickman
