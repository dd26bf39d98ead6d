#include "dickman/asymptotic.hpp"
#include "dickman/errors.hpp"

#include <cmath>
#include <ostream>

namespace dickman {

namespace {

XReal binom_xr(int n, int k) {
    XReal acc(1.0);
    for (int i = 1; i <= k; ++i)
        acc = acc * static_cast<double>(n - k + i) / static_cast<double>(i);
    return acc;
}

XReal factorial_xr(int k) {
    XReal f(1.0);
    for (int i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

ExpansionReport finish_report(int k, const XReal& u, std::vector<XReal> terms,
                              const XReal& truth) {
    ExpansionReport r;
    r.k = k;
    r.u = u;
    r.terms = std::move(terms);
    r.expansion_sum = XReal(0.0);
    for (const XReal& t : r.terms) r.expansion_sum += t;
    r.truth = truth;
    r.abs_error = abs(r.truth - r.expansion_sum);
    XReal lg = log(u);
    r.scaled_error = u * r.abs_error / pow_int(lg, k);
    return r;
}

} // namespace

ExpansionReport expand_ik(int k, const XReal& u, const CoeffTable& table,
                          const IkEvaluator& ik) {
    if (k < 0) throw DomainError("expand_ik needs k >= 0");
    if (!(u > XReal(1.0))) throw DomainError("expand_ik needs u > 1");
    if (table.k_max < k) throw DomainError("coefficient table too short for k");
    XReal lg = log(u);
    std::vector<XReal> terms(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        terms[static_cast<size_t>(j)] =
            binom_xr(k, j) * table.D[static_cast<size_t>(j)] * pow_int(lg, k - j);
    return finish_report(k, u, std::move(terms), ik.value(k, u));
}

ExpansionReport expand_lk(int k, const XReal& t, const CoeffTable& table,
                          const IkEvaluator& ik) {
    if (k < 0) throw DomainError("expand_lk needs k >= 0");
    if (!(t > XReal(0.0)) || !(t < XReal(1.0))) throw DomainError("expand_lk needs 0 < t < 1");
    if (table.k_max < k) throw DomainError("coefficient table too short for k");
    XReal lt = log(t);
    std::vector<XReal> terms(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        terms[static_cast<size_t>(j)] =
            table.C[static_cast<size_t>(j)] * pow_int(lt, k - j) / factorial_xr(k - j);
    XReal u = XReal(1.0) / t;
    XReal truth = ik.value(k, u) / factorial_xr(k);
    if (k & 1) truth = -truth;
    return finish_report(k, u, std::move(terms), truth);
}

DecayScan error_decay_scan(int k, std::span<const XReal> grid, const CoeffTable& table,
                           const IkEvaluator& ik) {
    if (grid.size() < 2) throw DomainError("decay scan needs at least two grid points");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > xr_e)) throw DomainError("decay scan grid values must exceed e");
        if (i && !(grid[i] > grid[i - 1])) throw DomainError("decay scan grid must ascend");
    }
    DecayScan scan;
    scan.k = k;
    for (const XReal& u : grid) scan.reports.push_back(expand_ik(k, u, table, ik));
    scan.first_scaled = to_double(scan.reports.front().scaled_error);
    double lower_max = 0.0, upper_max = 0.0;
    for (size_t i = 0; i < scan.reports.size(); ++i) {
        double se = to_double(scan.reports[i].scaled_error);
        scan.max_scaled = std::max(scan.max_scaled, se);
        if (i < scan.reports.size() / 2) lower_max = std::max(lower_max, se);
        else upper_max = std::max(upper_max, se);
    }
    scan.bounded = upper_max <= lower_max;
    return scan;
}

PerronResult perron(const XReal& lambda, const XReal& c, const XReal& T,
                    const PrecisionConfig& cfg) {
    if (!(c > XReal(0.0))) throw DomainError("perron needs c > 0");
    if (!(T > XReal(0.0))) throw DomainError("perron needs T > 0");
    cfg.validate();

    // full [-T, T] sweep; conjugate symmetry is verified, not assumed
    auto f_re = [&](const XReal& t) {
        XComplex s(c, t);
        XComplex v = exp(XComplex(lambda * c, lambda * t)) / s;
        return v.re;
    };
    auto f_im = [&](const XReal& t) {
        XComplex s(c, t);
        XComplex v = exp(XComplex(lambda * c, lambda * t)) / s;
        return v.im;
    };
    PerronResult r;
    r.lambda = lambda;
    r.c = c;
    r.T = T;
    r.value = integrate(f_re, -T, T, cfg) / xr_two_pi;
    r.im_abs = abs(integrate(f_im, -T, T, cfg) / xr_two_pi);
    if (is_zero(lambda)) {
        XReal closed = atan(T / c) / xr_pi;
        r.trunc_bound = abs(r.value - closed);
    } else {
        r.trunc_bound = exp(c * lambda) / (xr_pi * T * abs(lambda));
    }
    return r;
}

namespace {

// (1 - e^{-w})/w with the Taylor branch guarding small |w|
XComplex one_minus_exp_over(const XComplex& w) {
    if (to_double(abs2(w)) < 1e-2) {
        XComplex acc(0.0);
        XComplex pw(1.0);
        double fact = 1.0;
        for (int n = 0; n < 20; ++n) {
            fact *= (n + 1);
            acc += pw / fact;
            pw = pw * (-w);
        }
        return acc;
    }
    return (XComplex(1.0) - exp(-w)) / w;
}

} // namespace

GDiag g_diag(const XReal& u, const XComplex& s, const PrecisionConfig& cfg) {
    if (!(u > XReal(0.0))) throw DomainError("g_diag needs u > 0");
    if (!(s.re > XReal(0.0))) throw DomainError("g_diag needs Re s > 0");
    cfg.validate();

    GDiag d;
    d.u = u;
    d.s = s;
    // (1 - e^{-ts})/t = s * (1 - e^{-w})/w at w = ts
    auto f_re = [&](const XReal& t) { return (s * one_minus_exp_over(s * t)).re; };
    auto f_im = [&](const XReal& t) { return (s * one_minus_exp_over(s * t)).im; };
    XReal hi = XReal(1.0) / u;
    d.G = {integrate(f_re, XReal(0.0), hi, cfg), integrate(f_im, XReal(0.0), hi, cfg)};
    d.dG = one_minus_exp_over(s / u) / u;

    XReal mod_s = abs(s);
    d.g_bound = log(XReal(1.0) + mod_s / u) * 2.0 + 1.0;
    XReal inv = mod_s < u ? XReal(1.0) / u : XReal(1.0) / mod_s; // min(1/|s|, 1/u)
    d.dg_bound = inv * 2.0;
    d.g_within = abs(d.G) <= d.g_bound;
    d.dg_within = abs(d.dG) <= d.dg_bound;
    return d;
}

void write_reports_csv(std::ostream& os, std::span<const ExpansionReport> reports) {
    os << "k,u,expansion,truth,abs_error,scaled_error\n";
    for (const ExpansionReport& r : reports)
        os << r.k << ',' << to_string(r.u) << ',' << to_string(r.expansion_sum) << ','
           << to_string(r.truth) << ',' << to_string(r.abs_error) << ','
           << to_string(r.scaled_error) << '\n';
}

void write_reports_json(std::ostream& os, std::span<const ExpansionReport> reports) {
    os << "[";
    for (size_t i = 0; i < reports.size(); ++i) {
        const ExpansionReport& r = reports[i];
        os << (i ? ",\n " : "\n ") << "{\"k\": " << r.k << ", \"u\": \"" << to_string(r.u)
           << "\", \"expansion\": \"" << to_string(r.expansion_sum) << "\", \"truth\": \""
           << to_string(r.truth) << "\", \"abs_error\": \"" << to_string(r.abs_error)
           << "\", \"scaled_error\": \"" << to_string(r.scaled_error) << "\"}";
    }
    os << "\n]\n";
}

} // namespace dickman
