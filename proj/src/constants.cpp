#include "dickman/constants.hpp"
#include "dickman/errors.hpp"
#include "dickman/power_series.hpp"

#include <cmath>
#include <functional>
#include <ostream>

namespace dickman {

std::string method_name(ConstantsMethod m) {
    switch (m) {
        case ConstantsMethod::zeta_series: return "zeta_series";
        case ConstantsMethod::contour_vertical: return "contour_vertical";
        default: return "contour_hankel";
    }
}

ContourSpec ContourSpec::vertical(const XReal& c, const XReal& T) {
    ContourSpec s;
    s.kind = Kind::vertical;
    s.c = c;
    s.T = T;
    s.validate();
    return s;
}

ContourSpec ContourSpec::hankel(const XReal& delta, const XReal& x_max) {
    ContourSpec s;
    s.kind = Kind::hankel;
    s.delta = delta;
    s.x_max = x_max;
    s.validate();
    return s;
}

void ContourSpec::validate() const {
    if (!(c > XReal(0.0))) throw DomainError("ContourSpec needs c > 0");
    if (!(T > XReal(0.0))) throw DomainError("ContourSpec needs T > 0");
    if (!(delta > XReal(0.0)) || !(delta < XReal(1.0)))
        throw DomainError("ContourSpec needs delta in (0, 1)");
    if (!(x_max > XReal(1.0))) throw DomainError("ContourSpec needs x_max > 1");
    if (node_budget < 1) throw DomainError("ContourSpec needs a positive node budget");
}

CoeffTable constants_from_zeta(int k_max, const ZetaTable& zt) {
    if (k_max < 0) throw DomainError("constants_from_zeta needs k_max >= 0");
    if (k_max >= 2 && zt.n_max() < k_max)
        throw InsufficientZetaTable("need zeta up to n = " + std::to_string(k_max) +
                                    ", table holds n_max = " + std::to_string(zt.n_max()));
    PowerSeries a(k_max);
    for (int n = 2; n <= k_max; ++n) a[n] = -zt.zeta(n) / static_cast<double>(n);
    PowerSeries c = series_exp(a);

    CoeffTable t;
    t.k_max = k_max;
    t.method = ConstantsMethod::zeta_series;
    t.C.resize(static_cast<size_t>(k_max) + 1);
    t.D.resize(static_cast<size_t>(k_max) + 1);
    t.err_bound.resize(static_cast<size_t>(k_max) + 1);
    XReal fact(1.0);
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        t.C[static_cast<size_t>(k)] = c[k];
        XReal d = fact * c[k];
        t.D[static_cast<size_t>(k)] = (k & 1) ? -d : d;
        t.err_bound[static_cast<size_t>(k)] = XReal(1e-30) * static_cast<double>(k + 1);
    }
    return t;
}

namespace {

// Integrand shared by every k: F_k(s) = e^s (p_k - p_{k-1})/s^2 with
// p_k = (log s + gamma)^k / k!, so C_k = (1/2 pi i) contour-int F_k ds.
void contour_integrand(const XComplex& s, const XReal& gamma, int k_max,
                       std::vector<XComplex>& out) {
    XComplex es = exp(s);
    XComplex inv_s2 = XComplex(1.0) / (s * s);
    XComplex L = log(s) + XComplex(gamma);
    XComplex p_prev(0.0);
    XComplex p(1.0);
    out[0] = es * p * inv_s2;
    for (int k = 1; k <= k_max; ++k) {
        p_prev = p;
        p = p * L / static_cast<double>(k);
        out[static_cast<size_t>(k)] = es * (p - p_prev) * inv_s2;
    }
}

using VecIntegrand = std::function<void(const XReal&, std::vector<XComplex>&)>;

struct VecAdaptive {
    const VecIntegrand* f;
    const GaussLegendreRule* lo;
    const GaussLegendreRule* hi;
    int k_max;
    XReal abs_tol_per_len;
    int max_depth;
    long long budget;
    std::vector<XComplex> total;

    void panel(const GaussLegendreRule& rule, const XReal& a, const XReal& b,
               std::vector<XComplex>& acc) {
        XReal half = (b - a) * 0.5;
        XReal mid = (a + b) * 0.5;
        std::vector<XComplex> vals(static_cast<size_t>(k_max) + 1);
        for (auto& v : acc) v = XComplex(0.0);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            if (--budget < 0)
                throw ResourceLimit("contour node budget exhausted");
            XReal x = mid + half * rule.nodes[i];
            (*f)(x, vals);
            for (size_t k = 0; k < vals.size(); ++k) {
                if (!is_finite(vals[k]))
                    throw NonFiniteSample("contour integrand non-finite at " + to_string(x));
                acc[k] += vals[k] * rule.weights[i];
            }
        }
        for (auto& v : acc) v = v * half;
    }

    void run(const XReal& a, const XReal& b, int depth) {
        std::vector<XComplex> q1(static_cast<size_t>(k_max) + 1);
        std::vector<XComplex> q2(static_cast<size_t>(k_max) + 1);
        panel(*lo, a, b, q1);
        panel(*hi, a, b, q2);
        double err = 0.0, mag = 0.0;
        for (size_t k = 0; k < q1.size(); ++k) {
            err = std::max(err, std::fabs(to_double(q2[k].re - q1[k].re)));
            err = std::max(err, std::fabs(to_double(q2[k].im - q1[k].im)));
            mag = std::max({mag, std::fabs(to_double(q2[k].re)), std::fabs(to_double(q2[k].im))});
        }
        // the 1e-26 relative floor stops subdivision at the XReal noise level
        XReal tol = abs_tol_per_len * (b - a) + XReal(1e-26 * mag);
        if (XReal(err) <= tol || depth >= max_depth) {
            if (XReal(err) > tol)
                throw DepthExceeded("contour quadrature stalled on [" + to_string(a) + ", " +
                                        to_string(b) + "]",
                                    to_double(total[0].re), err);
            for (size_t k = 0; k < q2.size(); ++k) total[k] += q2[k];
            return;
        }
        XReal mid = (a + b) * 0.5;
        run(a, mid, depth + 1);
        run(mid, b, depth + 1);
    }
};

std::vector<XComplex> integrate_vec(const VecIntegrand& f, int k_max, const XReal& a,
                                    const XReal& b, const PrecisionConfig& cfg,
                                    long long& budget) {
    VecAdaptive st;
    st.f = &f;
    st.lo = &gauss_legendre(cfg.quad_order);
    st.hi = &gauss_legendre(2 * cfg.quad_order);
    st.k_max = k_max;
    st.abs_tol_per_len = cfg.abs_tol / (b - a);
    st.max_depth = cfg.max_subdivision_depth;
    st.budget = budget;
    st.total.assign(static_cast<size_t>(k_max) + 1, XComplex(0.0));
    st.run(a, b, 0);
    budget = st.budget;
    return st.total;
}

XReal factorial_xr(int k) {
    XReal f(1.0);
    for (int i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

} // namespace

CoeffTable constants_from_contour(int k_max, const ContourSpec& spec,
                                  const PrecisionConfig& cfg, const XReal& tail_tol) {
    if (k_max < 0) throw DomainError("constants_from_contour needs k_max >= 0");
    spec.validate();
    cfg.validate();
    const XReal gamma = ZetaTable::shared().gamma();

    CoeffTable t;
    t.k_max = k_max;
    t.C.assign(static_cast<size_t>(k_max) + 1, XReal(0.0));
    t.D.assign(static_cast<size_t>(k_max) + 1, XReal(0.0));
    t.err_bound.assign(static_cast<size_t>(k_max) + 1, XReal(0.0));
    long long budget = spec.node_budget;

    if (spec.kind == ContourSpec::Kind::vertical) {
        t.method = ConstantsMethod::contour_vertical;
        // recorded truncation estimate; thrown against tail_tol before work
        double logT = std::log(to_double(spec.T));
        double g = to_double(gamma);
        for (int k = 0; k <= k_max; ++k) {
            double env = std::pow(logT + g + M_PI / 2 + k, k) /
                         (to_double(factorial_xr(k)) * to_double(spec.T));
            double bound = std::exp(to_double(spec.c)) * env / M_PI;
            t.err_bound[static_cast<size_t>(k)] = XReal(bound) + cfg.abs_tol * 4.0;
            if (XReal(bound) > tail_tol)
                throw TailTooLarge("vertical tail estimate " + std::to_string(bound) +
                                       " at k = " + std::to_string(k) + " exceeds tolerance",
                                   bound, to_double(tail_tol));
        }
        const XReal c = spec.c;
        const XReal delta = spec.delta;
        VecIntegrand f = [&](const XReal& tt, std::vector<XComplex>& out) {
            XComplex s(c, tt);
            if (s.re <= XReal(0.0) && abs(s.im) < delta * 0.5)
                throw BranchCutTouched("vertical node at s = " + to_string(s));
            contour_integrand(s, gamma, k_max, out);
        };
        // conjugate symmetry: integral over [-T, T] = 2 Re integral over [0, T]
        std::vector<XComplex> q = integrate_vec(f, k_max, XReal(0.0), spec.T, cfg, budget);
        for (int k = 0; k <= k_max; ++k)
            t.C[static_cast<size_t>(k)] = q[static_cast<size_t>(k)].re / xr_pi;
    } else {
        t.method = ConstantsMethod::contour_hankel;
        double xm = to_double(spec.x_max);
        double g = to_double(gamma);
        double lm = std::log(3.0 * xm) + g + M_PI;
        for (int k = 0; k <= k_max; ++k) {
            double kf = to_double(factorial_xr(k));
            double env = (std::pow(lm, k) / kf + (k > 0 ? k * std::pow(lm, k - 1) / kf : 0.0)) /
                         (xm * xm);
            double bound = 2.0 * std::exp(-xm) * env / M_PI;
            t.err_bound[static_cast<size_t>(k)] = XReal(bound) + cfg.abs_tol * 4.0;
            if (XReal(bound) > tail_tol)
                throw TailTooLarge("hankel tail estimate " + std::to_string(bound) +
                                       " at k = " + std::to_string(k) + " exceeds tolerance",
                                   bound, to_double(tail_tol));
        }
        const XReal delta = spec.delta;
        // upper ray s = -x + i delta, x in [0, x_max]
        VecIntegrand ray = [&](const XReal& x, std::vector<XComplex>& out) {
            contour_integrand(XComplex(-x, delta), gamma, k_max, out);
        };
        std::vector<XComplex> qr = integrate_vec(ray, k_max, XReal(0.0), spec.x_max, cfg, budget);
        // arc s = delta e^{i theta}, theta in [0, pi/2]; conjugate half doubled
        VecIntegrand arc = [&](const XReal& th, std::vector<XComplex>& out) {
            XReal sth, cth;
            sincos(th, sth, cth);
            XComplex eith(cth, sth);
            contour_integrand(XComplex(delta * cth, delta * sth), gamma, k_max, out);
            for (auto& v : out) v = v * eith;
        };
        std::vector<XComplex> qa =
            integrate_vec(arc, k_max, XReal(0.0), xr_half_pi, cfg, budget);
        for (int k = 0; k <= k_max; ++k)
            t.C[static_cast<size_t>(k)] =
                (delta * qa[static_cast<size_t>(k)].re - qr[static_cast<size_t>(k)].im) / xr_pi;
    }

    for (int k = 0; k <= k_max; ++k) {
        XReal d = factorial_xr(k) * t.C[static_cast<size_t>(k)];
        t.D[static_cast<size_t>(k)] = (k & 1) ? -d : d;
    }
    return t;
}

namespace {

// log Gamma by the Stirling series; caller guarantees Re v >= 32.
XComplex log_gamma_stirling(const XComplex& v, const ZetaTable& zt) {
    XComplex lv = log(v);
    XComplex acc = (v - XComplex(0.5)) * lv - v +
                   XComplex(log(xr_two_pi) * 0.5);
    XComplex v2 = v * v;
    XComplex vp = v;
    for (int n = 1; n <= 16; ++n) {
        XReal num = bernoulli_even(2 * n, zt) / static_cast<double>((2 * n) * (2 * n - 1));
        acc += XComplex(num) / vp;
        vp *= v2;
    }
    return acc;
}

XComplex log_gamma_shifted(XComplex v, const ZetaTable& zt) {
    // Re v >= 0.5 assumed; raise to Re >= 32 with the recurrence
    XComplex shift_log(0.0);
    int m = static_cast<int>(std::ceil(32.0 - to_double(v.re)));
    for (int i = 0; i < m; ++i) {
        shift_log += log(v);
        v += XComplex(1.0);
    }
    return log_gamma_stirling(v, zt) - shift_log;
}

XComplex inv_gamma(const XComplex& w, const ZetaTable& zt) {
    if (to_double(w.re) >= 0.5) return exp(-log_gamma_shifted(w, zt));
    // reflection: 1/Gamma(w) = sin(pi w) Gamma(1 - w) / pi
    XComplex one_minus_w = XComplex(1.0) - w;
    XComplex s = sin(XComplex(w.re * xr_pi, w.im * xr_pi));
    return s * exp(log_gamma_shifted(one_minus_w, zt)) / xr_pi;
}

} // namespace

XComplex genfun(const XComplex& z) {
    if (!is_finite(z)) throw DomainError("genfun needs finite z");
    const ZetaTable& zt = ZetaTable::shared();
    XComplex egz = exp(XComplex(z.re * zt.gamma(), z.im * zt.gamma()));
    return egz * inv_gamma(XComplex(1.0) - z, zt);
}

XComplex coeff_partial_sum(const CoeffTable& table, const XComplex& z) {
    XComplex acc(0.0);
    for (size_t k = table.C.size(); k-- > 0;) acc = acc * z + XComplex(table.C[k]);
    return acc;
}

XReal original_contour_diagnostic(int k, const XReal& c, const XReal& T,
                                  const PrecisionConfig& cfg) {
    if (k < 0) throw DomainError("diagnostic needs k >= 0");
    if (!(c > XReal(0.0)) || !(T > XReal(0.0))) throw DomainError("diagnostic needs c, T > 0");
    const XReal gamma = ZetaTable::shared().gamma();
    XReal kf = factorial_xr(k);
    long long budget = 1000000000;
    VecIntegrand f = [&](const XReal& tt, std::vector<XComplex>& out) {
        XComplex s(c, tt);
        XComplex L = log(s) + XComplex(gamma);
        out[0] = exp(s) * pow_int(L, k) / (s * kf);
    };
    std::vector<XComplex> q = integrate_vec(f, 0, XReal(0.0), T, cfg, budget);
    return q[0].re / xr_pi; // symmetric limit: 2 Re / (2 pi)
}

void write_constants_csv(std::ostream& os, const CoeffTable& table) {
    os << "k,C_k,D_k,method,err_bound\n";
    for (int k = 0; k <= table.k_max; ++k)
        os << k << ',' << to_string(table.C[static_cast<size_t>(k)]) << ','
           << to_string(table.D[static_cast<size_t>(k)]) << ',' << method_name(table.method)
           << ',' << to_string(table.err_bound[static_cast<size_t>(k)]) << '\n';
}

bool growth_bound_ok(const CoeffTable& table, double bound_constant) {
    for (int k = 0; k <= table.k_max; ++k)
        if (to_double(abs(table.C[static_cast<size_t>(k)])) > bound_constant * (k + 1))
            return false;
    return true;
}

} // namespace dickman
