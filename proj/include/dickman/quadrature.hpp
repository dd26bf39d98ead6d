#pragma once

#include "dickman/xreal.hpp"

#include <functional>
#include <span>
#include <vector>

namespace dickman {

struct PrecisionConfig {
    XReal abs_tol{1e-18};
    XReal rel_tol{1e-18};
    int max_subdivision_depth = 40;
    int quad_order = 32; // Gauss-Legendre node count per panel

    void validate() const; // throws DomainError on a bad field

    static PrecisionConfig fast(); // loose exploration profile, accuracy voided
};

// Gauss-Legendre rule on [-1, 1]; nodes/weights carry full XReal precision.
struct GaussLegendreRule {
    std::vector<XReal> nodes;
    std::vector<XReal> weights;
};

const GaussLegendreRule& gauss_legendre(int n);

using Integrand = std::function<XReal(const XReal&)>;

// Adaptive panel integration of f over [a, b]. Panels are accepted when the
// order-n vs order-2n estimates agree to the local share of abs_tol plus
// rel_tol * |panel|; otherwise the panel is bisected. Throws DepthExceeded
// (carrying the best estimate and the residual error bound) when
// max_subdivision_depth is hit, and NonFiniteSample when f produces a
// non-finite value at a node.
XReal integrate(const Integrand& f, const XReal& a, const XReal& b,
                const PrecisionConfig& cfg);

// Sum of integrate() over consecutive pairs of `points` (must be ascending).
XReal integrate_segments(const Integrand& f, std::span<const XReal> points,
                         const PrecisionConfig& cfg);

} // namespace dickman
