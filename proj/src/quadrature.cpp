#include "dickman/quadrature.hpp"
#include "dickman/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace dickman {

void PrecisionConfig::validate() const {
    if (!(abs_tol > XReal(0.0))) throw DomainError("abs_tol must be positive");
    if (!(rel_tol > XReal(0.0))) throw DomainError("rel_tol must be positive");
    if (max_subdivision_depth < 1) throw DomainError("max_subdivision_depth must be >= 1");
    if (quad_order < 2) throw DomainError("quad_order must be >= 2");
}

PrecisionConfig PrecisionConfig::fast() {
    PrecisionConfig cfg;
    cfg.abs_tol = XReal(1e-10);
    cfg.rel_tol = XReal(1e-10);
    cfg.quad_order = 8;
    return cfg;
}

namespace {

// Legendre P_n and its derivative via the three-term recurrence.
void legendre_pair(int n, const XReal& x, XReal& p, XReal& dp) {
    XReal p0(1.0), p1 = x;
    for (int k = 1; k < n; ++k) {
        XReal p2 = (x * p1 * static_cast<double>(2 * k + 1) - p0 * static_cast<double>(k)) /
                   static_cast<double>(k + 1);
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = (x * p1 - p0) * static_cast<double>(n) / (x * x - 1.0);
}

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-like initial guess, double Newton, then XReal polish
        double x0 = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 60; ++it) {
            XReal p, dp;
            legendre_pair(n, XReal(x0), p, dp);
            double dx = to_double(p) / to_double(dp);
            x0 -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        XReal x(x0), p, dp;
        for (int it = 0; it < 3; ++it) {
            legendre_pair(n, x, p, dp);
            x = x - p / dp;
        }
        legendre_pair(n, x, p, dp);
        XReal w = XReal(2.0) / ((XReal(1.0) - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(i)] = x;
        rule.weights[static_cast<size_t>(i)] = w;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = -x;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    if (n & 1) {
        XReal p, dp;
        legendre_pair(n, XReal(0.0), p, dp);
        rule.nodes[static_cast<size_t>(n / 2)] = XReal(0.0);
        rule.weights[static_cast<size_t>(n / 2)] = XReal(2.0) / (dp * dp);
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 2) throw DomainError("gauss_legendre order must be >= 2");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

namespace {

XReal panel_sum(const Integrand& f, const GaussLegendreRule& rule, const XReal& a,
                const XReal& b) {
    XReal half = (b - a) * 0.5;
    XReal mid = (a + b) * 0.5;
    XReal acc(0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        XReal x = mid + half * rule.nodes[i];
        XReal fx = f(x);
        if (!is_finite(fx))
            throw NonFiniteSample("integrand non-finite at x = " + to_string(x));
        acc += rule.weights[i] * fx;
    }
    return acc * half;
}

struct AdaptiveState {
    const Integrand* f;
    const GaussLegendreRule* lo;
    const GaussLegendreRule* hi;
    XReal abs_tol_per_len; // abs_tol / (B - A)
    XReal rel_tol;
    int max_depth;
    XReal total{0.0};
    XReal err_accum{0.0};
    XReal failed_err{0.0};
    bool failed = false;
};

void adapt(AdaptiveState& st, const XReal& a, const XReal& b, int depth) {
    XReal q1 = panel_sum(*st.f, *st.lo, a, b);
    XReal q2 = panel_sum(*st.f, *st.hi, a, b);
    XReal err = abs(q2 - q1);
    XReal tol = st.abs_tol_per_len * (b - a) + st.rel_tol * abs(q2);
    if (err <= tol) {
        st.total += q2;
        st.err_accum += err;
        return;
    }
    if (depth >= st.max_depth) {
        st.total += q2;
        st.err_accum += err;
        st.failed_err += err;
        st.failed = true;
        return;
    }
    XReal mid = (a + b) * 0.5;
    adapt(st, a, mid, depth + 1);
    adapt(st, mid, b, depth + 1);
}

} // namespace

XReal integrate(const Integrand& f, const XReal& a, const XReal& b,
                const PrecisionConfig& cfg) {
    cfg.validate();
    if (a > b) throw DomainError("integrate requires a <= b");
    if (a == b) return XReal(0.0);

    AdaptiveState st;
    st.f = &f;
    st.lo = &gauss_legendre(cfg.quad_order);
    st.hi = &gauss_legendre(2 * cfg.quad_order);
    st.abs_tol_per_len = cfg.abs_tol / (b - a);
    st.rel_tol = cfg.rel_tol;
    st.max_depth = cfg.max_subdivision_depth;
    adapt(st, a, b, 0);
    if (st.failed)
        throw DepthExceeded("subdivision limit reached on [" + to_string(a) + ", " +
                                to_string(b) + "]",
                            to_double(st.total), to_double(st.failed_err));
    return st.total;
}

XReal integrate_segments(const Integrand& f, std::span<const XReal> points,
                         const PrecisionConfig& cfg) {
    if (points.size() < 2) throw DomainError("integrate_segments needs >= 2 points");
    XReal acc(0.0);
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] > points[i + 1])
            throw DomainError("integrate_segments points must be ascending");
        if (points[i] == points[i + 1]) continue;
        acc += integrate(f, points[i], points[i + 1], cfg);
    }
    return acc;
}

} // namespace dickman
