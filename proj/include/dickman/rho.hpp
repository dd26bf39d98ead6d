#pragma once

#include "dickman/iterated.hpp"
#include "dickman/quadrature.hpp"
#include "dickman/xreal.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dickman {

// Piecewise polynomial representation of the Dickman function on [0, u_max]:
// one degree-d polynomial per unit interval [n, n+1], held as Chebyshev
// coefficients in the shifted variable w = 2(u - n) - 1. Interval 0 is the
// exact constant 1. Immutable once built; concurrent reads are safe.
class RhoSpline {
public:
    static constexpr int kDefaultDegree = 24;

    XReal operator()(const XReal& u) const;  // rho(u); throws OutOfRange past the cover
    XReal derivative(const XReal& u) const;  // exact derivative of the representation

    const XReal& u_max() const { return u_max_; }
    XReal cover() const { return XReal(static_cast<double>(intervals_.size())); }
    int degree() const { return degree_; }
    const std::string& method() const { return method_; }

    // Persistence: header line "RHOSPLINE v1", then one line per interval
    // "n d c_0 ... c_d" with Chebyshev coefficients in XReal decimal format.
    void save(std::ostream& os) const;
    static RhoSpline load(std::istream& is); // validates knot continuity

    friend RhoSpline rho_steps(const XReal& u_max, const PrecisionConfig& cfg, int degree);
    friend RhoSpline rho_series_spline(const XReal& u_max, const PrecisionConfig& cfg,
                                       int degree);

private:
    RhoSpline() = default;
    XReal u_max_{0.0};
    int degree_ = kDefaultDegree;
    std::string method_ = "steps";
    std::vector<std::vector<XReal>> intervals_; // intervals_[n] covers [n, n+1]
};

// Method of steps: rho(u) = rho(n) - int_n^u rho(t-1)/t dt on each [n, n+1],
// grown interval by interval from the exact rho = 1 on [0, 1].
RhoSpline rho_steps(const XReal& u_max, const PrecisionConfig& cfg,
                    int degree = RhoSpline::kDefaultDegree);

// Pointwise series evaluation rho(u) = sum_{k <= u} ((-1)^k/k!) I_k(u);
// terms with k >= u vanish and are skipped. Pass an evaluator covering
// (k_max >= floor(u), u_max >= u) to amortize grids.
XReal rho_series(const XReal& u, const PrecisionConfig& cfg,
                 const IkEvaluator* ik = nullptr);

// Spline built from rho_series samples; method tag "series".
RhoSpline rho_series_spline(const XReal& u_max, const PrecisionConfig& cfg,
                            int degree = RhoSpline::kDefaultDegree);

// Broadhurst's F(alpha) = rho(1/alpha) over a borrowed spline.
class FView {
public:
    explicit FView(const RhoSpline& s) : spline_(&s) {}
    XReal operator()(const XReal& alpha) const;  // F(alpha); 1 for alpha >= 1
    XReal derivative(const XReal& alpha) const;  // F'(alpha) = -rho'(1/alpha)/alpha^2

private:
    const RhoSpline* spline_;
};

} // namespace dickman
