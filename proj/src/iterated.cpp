#include "dickman/iterated.hpp"
#include "dickman/chebyshev.hpp"
#include "dickman/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dickman {

namespace {

constexpr double kEdgeWidth = 0.5;
constexpr int kFitNodes = 21;     // degree-20 pieces
constexpr int kMaxFitSplit = 12;
constexpr double kGeomRatio = 1.4;
constexpr int kUnitKnots = 8;

// Simplex expansion around u = k: I_k(k+eps) = eps^k sum_M c_M eps^M with
// c_M = (-1)^M g(k,M)/(k+M)! and g(k,M) = sum_j j! g(k-1,M-j).
std::vector<XReal> edge_series(int k, int m_max) {
    std::vector<XReal> g_prev(static_cast<size_t>(m_max) + 1);
    std::vector<XReal> fact(static_cast<size_t>(m_max) + 1);
    fact[0] = XReal(1.0);
    for (int m = 1; m <= m_max; ++m) fact[static_cast<size_t>(m)] = fact[static_cast<size_t>(m - 1)] * static_cast<double>(m);
    g_prev = fact; // g(1, M) = M!
    for (int level = 2; level <= k; ++level) {
        std::vector<XReal> g(static_cast<size_t>(m_max) + 1);
        for (int m = 0; m <= m_max; ++m) {
            XReal acc(0.0);
            for (int j = 0; j <= m; ++j)
                acc += fact[static_cast<size_t>(j)] * g_prev[static_cast<size_t>(m - j)];
            g[static_cast<size_t>(m)] = acc;
        }
        g_prev = std::move(g);
    }
    std::vector<XReal> coef(static_cast<size_t>(m_max) + 1);
    XReal kpm_fact(1.0);
    for (int i = 2; i <= k; ++i) kpm_fact *= static_cast<double>(i);
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) kpm_fact *= static_cast<double>(k + m);
        XReal c = g_prev[static_cast<size_t>(m)] / kpm_fact;
        coef[static_cast<size_t>(m)] = (m & 1) ? -c : c;
    }
    return coef;
}

} // namespace

IkEvaluator::IkEvaluator(int k_max, const XReal& u_max, const PrecisionConfig& cfg)
    : k_max_(k_max), u_max_(u_max), cfg_(cfg) {
    cfg_.validate();
    if (k_max < 0) throw DomainError("IkEvaluator needs k_max >= 0");
    if (k_max > 50) throw DomainError("IkEvaluator supports k_max <= 50");
    if (!(u_max > XReal(0.0))) throw DomainError("IkEvaluator needs u_max > 0");
    levels_.resize(static_cast<size_t>(std::max(0, k_max)) + 1);
    for (int k = 1; k <= k_max; ++k) build_level(k);
}

void IkEvaluator::build_level(int k) {
    Level& lv = levels_[static_cast<size_t>(k)];
    XReal start(static_cast<double>(k));
    lv.knots.push_back(start);
    if (u_max_ <= start) {
        lv.edge_hi = start;
        return;
    }
    lv.edge_hi = start + kEdgeWidth;
    if (lv.edge_hi > u_max_) lv.edge_hi = u_max_;
    if (k >= 2) lv.edge_coef = edge_series(k, 120);
    lv.knots.push_back(lv.edge_hi);
    if (lv.edge_hi == u_max_) return;

    // piece boundaries: unit steps first, then geometric widening
    std::vector<XReal> bounds{lv.edge_hi};
    XReal next(static_cast<double>(k + 1));
    int unit = 0;
    while (next < u_max_ && unit < kUnitKnots) {
        bounds.push_back(next);
        next += 1.0;
        ++unit;
    }
    XReal x = bounds.back();
    while (x * kGeomRatio < u_max_) {
        x *= kGeomRatio;
        bounds.push_back(x);
    }
    bounds.push_back(u_max_);

    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        if (k >= 2) fit_range(k, bounds[i], bounds[i + 1], 0, lv);
        else
            lv.pieces.push_back({bounds[i], bounds[i + 1], {}});
        lv.knots.push_back(bounds[i + 1]);
    }
}

void IkEvaluator::fit_range(int k, const XReal& a, const XReal& b, int depth, Level& lv) {
    std::vector<XReal> pts = cheb_points(kFitNodes, a, b);
    std::vector<XReal> vals(pts.size());
    double scale = 1.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        vals[i] = node_value(k, pts[i]);
        scale = std::max(scale, std::fabs(vals[i].hi));
    }
    std::vector<XReal> coef = cheb_fit(vals);

    // residual against fresh quadrature samples at staggered points
    std::vector<XReal> check = cheb_points(kFitNodes + 1, a, b);
    double resid = 0.0;
    for (const XReal& u : check)
        resid = std::max(resid, std::fabs(to_double(cheb_eval(coef, a, b, u) - node_value(k, u))));
    if (resid > 1e-16 * scale && depth < kMaxFitSplit) {
        XReal mid = (a + b) * 0.5;
        fit_range(k, a, mid, depth + 1, lv);
        lv.knots.push_back(mid);
        fit_range(k, mid, b, depth + 1, lv);
        return;
    }
    lv.pieces.push_back({a, b, std::move(coef)});
}

XReal IkEvaluator::node_value(int k, const XReal& u) const {
    // I_k(u) = int_{k-1}^{u-1} I_{k-1}(v) / (u - v) dv, split at the knots of
    // level k-1 so every sub-integrand is analytic
    const Level& prev = levels_[static_cast<size_t>(k - 1)];
    XReal lo(static_cast<double>(k - 1));
    XReal hi = u - 1.0;
    std::vector<XReal> pts{lo};
    for (const XReal& kn : prev.knots)
        if (kn > lo && kn < hi) pts.push_back(kn);
    std::sort(pts.begin(), pts.end(), [](const XReal& x, const XReal& y) { return x < y; });
    pts.push_back(hi);
    auto f = [&](const XReal& v) { return eval_level(k - 1, v) / (u - v); };
    return integrate_segments(f, pts, cfg_);
}

XReal IkEvaluator::eval_level(int k, const XReal& u) const {
    if (k == 0) return XReal(1.0);
    XReal kk(static_cast<double>(k));
    if (u <= kk) return XReal(0.0);
    if (k == 1) return log(u);
    const Level& lv = levels_[static_cast<size_t>(k)];
    if (u <= lv.edge_hi) {
        XReal eps = u - kk;
        XReal acc(0.0);
        for (size_t m = lv.edge_coef.size(); m-- > 0;)
            acc = acc * eps + lv.edge_coef[m];
        return acc * pow_int(eps, k);
    }
    for (const Piece& p : lv.pieces)
        if (u <= p.b) return cheb_eval(p.coef, p.a, p.b, u);
    throw OutOfRange("I_" + std::to_string(k) + " evaluated past u_max at u = " + to_string(u));
}

XReal IkEvaluator::value(int k, const XReal& u) const {
    if (k < 0) throw DomainError("I_k needs k >= 0");
    if (!is_finite(u) || u < XReal(0.0)) throw DomainError("I_k needs finite u >= 0");
    if (k == 0) return XReal(1.0);
    if (u <= XReal(static_cast<double>(k))) return XReal(0.0);
    if (k > k_max_) throw OutOfRange("IkEvaluator built with k_max = " + std::to_string(k_max_));
    if (u > u_max_) throw OutOfRange("IkEvaluator built with u_max = " + to_string(u_max_));
    return eval_level(k, u);
}

XReal iterated_integral(int k, const XReal& u, const PrecisionConfig& cfg) {
    if (k < 0) throw DomainError("I_k needs k >= 0");
    if (!is_finite(u) || u < XReal(0.0)) throw DomainError("I_k needs finite u >= 0");
    if (k == 0) return XReal(1.0);
    if (u <= XReal(static_cast<double>(k))) return XReal(0.0);
    if (k == 1) return log(u);
    IkEvaluator ev(k, u, cfg);
    return ev.value(k, u);
}

namespace {

struct EvalBudget {
    long long remaining;
};

XReal lk_recursive(int k, const XReal& t, const PrecisionConfig& cfg, EvalBudget& budget) {
    if (k == 0) return XReal(1.0);
    XReal upper = XReal(1.0) / static_cast<double>(k);
    if (t >= upper) return XReal(0.0);
    if (!(t > XReal(0.0))) throw DomainError("L_k needs t > 0");
    if (k == 1) return log(t); // innermost integral -int_t^1 dx/x of the recursion
    auto f = [&](const XReal& x) {
        if (--budget.remaining < 0)
            throw RecursionBudgetExceeded("polylog recursion budget exhausted at k = " +
                                          std::to_string(k));
        return lk_recursive(k - 1, x / (XReal(1.0) - x), cfg, budget);
    };
    return -integrate([&](const XReal& x) { return f(x) / x; }, t, upper, cfg);
}

} // namespace

XReal dickman_polylog(int k, const XReal& t, PolylogMethod method, const PrecisionConfig& cfg,
                      long long eval_budget, const IkEvaluator* ik) {
    if (k < 0) throw DomainError("L_k needs k >= 0");
    if (!(t > XReal(0.0))) throw DomainError("L_k needs t > 0");
    if (k == 0) return XReal(1.0);
    if (k >= 1 && t >= XReal(1.0) / static_cast<double>(k)) return XReal(0.0);
    if (method == PolylogMethod::recursion) {
        EvalBudget budget{eval_budget};
        return lk_recursive(k, t, cfg, budget);
    }
    XReal u = XReal(1.0) / t;
    XReal v = ik ? ik->value(k, u) : iterated_integral(k, u, cfg);
    XReal fact(1.0);
    for (int i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    v = v / fact;
    return (k & 1) ? -v : v;
}

namespace {

// Integral over lambda_i from `lo` up to (1 - outer_sum)/(i + 1), where
// outer_sum carries the already-fixed lambda_{i+1} + ... + lambda_{j-1}.
// At depths 1-2 this reproduces the quoted limits verbatim; from depth 3 on
// the quoted single-variable limits are shorthand for these partial-sum
// bounds (the ordered-simplex region), which is what the I_j/j! equivalence
// requires.
XReal ramanujan_level(int i, const XReal& lo, const XReal& outer_sum,
                      const PrecisionConfig& cfg) {
    XReal upper = (XReal(1.0) - outer_sum) / static_cast<double>(i + 1);
    if (lo >= upper) return XReal(0.0);
    auto f = [&](const XReal& lam) {
        XReal inner = i == 0 ? XReal(1.0) : ramanujan_level(i - 1, lam, outer_sum + lam, cfg);
        return inner / lam;
    };
    return integrate(f, lo, upper, cfg);
}

} // namespace

XReal ramanujan_nested(int j, const XReal& epsilon, const PrecisionConfig& cfg) {
    if (j < 1) throw DomainError("ramanujan_nested needs depth j >= 1");
    if (!(epsilon > XReal(0.0)) || epsilon > XReal(1.0))
        throw DomainError("ramanujan_nested needs epsilon in (0, 1]");
    return ramanujan_level(j - 1, epsilon, XReal(0.0), cfg);
}

RamanujanTerm ramanujan_term(int depth, const XReal& epsilon, const PrecisionConfig& cfg) {
    return {depth, epsilon, ramanujan_nested(depth, epsilon, cfg)};
}

} // namespace dickman
