#pragma once

#include "dickman/quadrature.hpp"
#include "dickman/xreal.hpp"

#include <vector>

namespace dickman {

// Evaluator for the iterated integrals I_k(u) over the simplex
// {t_i >= 1, sum t_i <= u} of prod dt_i/t_i.
//
// I_0 = 1 and I_1 = log are exact; each level k >= 2 is reduced to the 1-d
// recursion I_k(u) = int_{k-1}^{u-1} I_{k-1}(v)/(u-v) dv and cached as
//   - a power series in eps = u - k on [k, k+1/2] (exact simplex expansion,
//     relatively accurate where I_k is tiny), and
//   - piecewise Chebyshev fits on [k+1/2, u_max], unit-width pieces first,
//     then geometrically widening ones, each refit by bisection until the
//     residual clears the interpolation target.
//
// Immutable after construction; concurrent reads are safe.
class IkEvaluator {
public:
    IkEvaluator(int k_max, const XReal& u_max, const PrecisionConfig& cfg = {});

    // I_k(u); exactly 0 for u <= k (no quadrature), exactly 1 for k = 0.
    // Throws OutOfRange for k > k_max or u > u_max.
    XReal value(int k, const XReal& u) const;

    int k_max() const { return k_max_; }
    const XReal& u_max() const { return u_max_; }
    const PrecisionConfig& config() const { return cfg_; }

private:
    struct Piece {
        XReal a, b;
        std::vector<XReal> coef;
    };
    struct Level {
        XReal edge_hi;                // k + 1/2 (or u_max when smaller)
        std::vector<XReal> edge_coef; // I_k(k+eps) = eps^k sum_M edge_coef[M] eps^M
        std::vector<Piece> pieces;
        std::vector<XReal> knots;     // [k, edge_hi, piece boundaries...]
    };

    XReal eval_level(int k, const XReal& u) const;
    XReal node_value(int k, const XReal& u) const;
    void build_level(int k);
    void fit_range(int k, const XReal& a, const XReal& b, int depth, Level& lv);

    int k_max_;
    XReal u_max_;
    PrecisionConfig cfg_;
    std::vector<Level> levels_;
};

// One-shot I_k(u): builds a minimal evaluator. Prefer IkEvaluator for grids.
XReal iterated_integral(int k, const XReal& u, const PrecisionConfig& cfg = {});

enum class PolylogMethod { recursion, from_ik };

// Broadhurst's Dickman polylogarithm L_k(t). The `recursion` route follows
// the defining integral literally (cost grows exponentially with k; guarded
// by eval_budget, throws RecursionBudgetExceeded). The `from_ik` route uses
// L_k(t) = ((-1)^k / k!) I_k(1/t).
XReal dickman_polylog(int k, const XReal& t, PolylogMethod method,
                      const PrecisionConfig& cfg, long long eval_budget = 20000000,
                      const IkEvaluator* ik = nullptr);

// j-fold nested integral with Ramanujan's limits: outermost lambda_{j-1}
// from epsilon to 1/j, then each lambda_i from lambda_{i+1} to
// (1 - lambda_{i+1})/(i+1), innermost lambda_0 up to 1 - lambda_1.
XReal ramanujan_nested(int j, const XReal& epsilon, const PrecisionConfig& cfg);

struct RamanujanTerm {
    int depth;
    XReal epsilon;
    XReal value; // >= 0; equals 0 when epsilon >= 1/depth
};

RamanujanTerm ramanujan_term(int depth, const XReal& epsilon, const PrecisionConfig& cfg);

} // namespace dickman
