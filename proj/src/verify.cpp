#include "dickman/verify.hpp"
#include "dickman/asymptotic.hpp"
#include "dickman/constants.hpp"
#include "dickman/errors.hpp"
#include "dickman/iterated.hpp"
#include "dickman/power_series.hpp"
#include "dickman/rho.hpp"
#include "dickman/sieve.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

namespace dickman {

namespace {

struct Harness {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = e.what();
        }
        out << (ok ? "pass" : "FAIL") << "  " << name;
        if (!ok && !note.empty()) out << "  (" << note << ")";
        out << '\n';
        out.flush();
        if (!ok) ++failures;
    }
};

double dd(const XReal& x) { return to_double(x); }

} // namespace

int run_verify(std::ostream& out, const VerifyOptions& opt) {
    Harness h{out};
    std::mt19937_64 rng(opt.seed);
    PrecisionConfig cfg;
    const int samples = opt.fast ? 20 : 100;
    const ZetaTable& zt = ZetaTable::shared();

    // ---- numkernel ----
    h.check("numkernel: XReal decimal round-trip lossless to 2^-95", [&] {
        std::uniform_real_distribution<double> mant(-1.0, 1.0);
        std::uniform_int_distribution<int> expo(-30, 30);
        for (int i = 0; i < 2 * samples; ++i) {
            XReal x = (XReal(mant(rng)) + XReal(mant(rng)) * 1e-17) *
                      pow_int(XReal(10.0), expo(rng));
            XReal y = parse_xreal(to_string(x));
            if (dd(abs(y - x)) > std::ldexp(1.0, -95) * std::fabs(dd(x))) return false;
        }
        return true;
    });

    h.check("numkernel: quadrature linearity on random smooth integrands", [&] {
        std::uniform_real_distribution<double> coef(-2.0, 2.0);
        for (int i = 0; i < 10; ++i) {
            double c1 = coef(rng), c0 = coef(rng), d1 = coef(rng);
            auto f = [&](const XReal& x) { return XReal(c1) * x + sin(x) * c0; };
            auto g = [&](const XReal& x) { return exp(x * 0.3) * d1; };
            double al = coef(rng), be = coef(rng);
            XReal lhs = integrate([&](const XReal& x) { return XReal(al) * f(x) + XReal(be) * g(x); },
                                  XReal(0.2), XReal(2.0), cfg);
            XReal rhs = XReal(al) * integrate(f, XReal(0.2), XReal(2.0), cfg) +
                        XReal(be) * integrate(g, XReal(0.2), XReal(2.0), cfg);
            if (std::fabs(dd(lhs - rhs)) > 1e-16) return false;
        }
        return true;
    });

    h.check("numkernel: quadrature interval additivity", [&] {
        std::uniform_real_distribution<double> mid(0.4, 2.2);
        auto f = [](const XReal& x) { return exp(-x) / (x + 0.5); };
        XReal whole = integrate(f, XReal(0.1), XReal(2.6), cfg);
        for (int i = 0; i < 10; ++i) {
            XReal b(mid(rng));
            XReal split = integrate(f, XReal(0.1), b, cfg) + integrate(f, b, XReal(2.6), cfg);
            if (std::fabs(dd(whole - split)) > 1e-16) return false;
        }
        return true;
    });

    h.check("numkernel: series_exp and series_log invert each other", [&] {
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        for (int i = 0; i < 10; ++i) {
            PowerSeries a(10);
            for (int k = 1; k <= 10; ++k) a[k] = XReal(coef(rng));
            PowerSeries b = series_log(series_exp(a));
            for (int k = 1; k <= 10; ++k)
                if (std::fabs(dd(b[k] - a[k])) >
                    std::ldexp(1.0, -90) * std::max(1.0, std::fabs(dd(a[k]))))
                    return false;
        }
        return true;
    });

    h.check("numkernel: zeta table invariants", [&] {
        XReal pi2_6 = xr_pi * xr_pi / 6.0;
        if (dd(abs(zt.zeta(2) - pi2_6)) > std::ldexp(1.0, -95) * dd(pi2_6)) return false;
        for (int n = 2; n < zt.n_max(); ++n) {
            if (!(zt.zeta(n + 1) < zt.zeta(n))) return false;
            if (dd(zt.zeta(n) - 1.0) >= std::ldexp(2.0, 1 - n)) return false;
        }
        return dd(zt.zeta(64) - 1.0) < std::ldexp(1.0, -63);
    });

    // ---- iterated ----
    PrecisionConfig ik_cfg;
    IkEvaluator ik9(9, XReal(10.5), ik_cfg);

    h.check("iterated: I_k(u) = 0 exactly for u <= k", [&] {
        for (int k = 1; k <= 9; ++k) {
            if (!is_zero(ik9.value(k, XReal(static_cast<double>(k))))) return false;
            if (!is_zero(ik9.value(k, XReal(static_cast<double>(k) * 0.75)))) return false;
        }
        return true;
    });

    h.check("iterated: u -> I_k(u) nondecreasing on unit-step grids", [&] {
        for (int k = 1; k <= 5; ++k) {
            XReal prev(-1.0);
            for (int i = 1; i <= 50; ++i) {
                XReal u = XReal(static_cast<double>(k)) + XReal(static_cast<double>(i)) * 0.1;
                XReal v = ik9.value(k, u);
                if (v < XReal(0.0) || v < prev) return false;
                prev = v;
            }
        }
        return true;
    });

    h.check("iterated: I_2 recursion equals 2-d simplex quadrature to 1e-12", [&] {
        const GaussLegendreRule& rule = gauss_legendre(80);
        XReal u(3.0);
        XReal acc(0.0);
        XReal mid1 = u * 0.5, half1 = (u - 2.0) * 0.5;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            XReal t1 = mid1 + half1 * rule.nodes[i];
            XReal b2 = u - t1;
            XReal mid2 = (XReal(1.0) + b2) * 0.5, half2 = (b2 - XReal(1.0)) * 0.5;
            XReal inner(0.0);
            for (size_t j = 0; j < rule.nodes.size(); ++j)
                inner += rule.weights[j] / (mid2 + half2 * rule.nodes[j]);
            acc += rule.weights[i] * inner * half2 / t1;
        }
        acc *= half1;
        return std::fabs(dd(ik9.value(2, u) - acc)) < 1e-12;
    });

    h.check("iterated: L_k(a) = ((-1)^k/k!) I_k(1/a) to 1e-10 for k <= 4", [&] {
        PrecisionConfig rec_cfg;
        rec_cfg.abs_tol = XReal(1e-13);
        rec_cfg.rel_tol = XReal(1e-13);
        rec_cfg.quad_order = 16;
        IkEvaluator wide(4, XReal(26.0), ik_cfg);
        int kmax = opt.fast ? 3 : 4;
        for (int k = 1; k <= kmax; ++k)
            for (double f : {0.9, 0.5, 0.2}) {
                XReal alpha = XReal(f) / static_cast<double>(k);
                XReal lhs = dickman_polylog(k, alpha, PolylogMethod::recursion, rec_cfg);
                XReal rhs = dickman_polylog(k, alpha, PolylogMethod::from_ik, ik_cfg, 0, &wide);
                if (std::fabs(dd(lhs - rhs)) > 1e-10) return false;
            }
        return true;
    });

    h.check("iterated: ramanujan_nested(j, eps) = I_j(1/eps)/j! to 1e-9", [&] {
        IkEvaluator wide(3, XReal(4.2), ik_cfg);
        struct Case { int j; double eps; double fact; } cases[] = {
            {1, 0.6, 1.0}, {2, 0.4, 2.0}, {3, 0.26, 6.0}};
        for (const auto& c : cases) {
            XReal lhs = ramanujan_nested(c.j, XReal(c.eps), cfg);
            XReal rhs = wide.value(c.j, XReal(1.0) / c.eps) / c.fact;
            if (std::fabs(dd(lhs - rhs)) > 1e-9) return false;
        }
        return true;
    });

    // ---- rho ----
    RhoSpline rho = rho_steps(XReal(10.0), cfg);

    h.check("rho: delay-equation residual <= 1e-12 at 100 random points", [&] {
        std::uniform_real_distribution<double> uu(1.0001, 9.9999);
        for (int i = 0; i < samples; ++i) {
            XReal u(uu(rng));
            if (std::fabs(dd(u * rho.derivative(u) + rho(u - 1.0))) > 1e-12) return false;
            double h2 = 1e-6;
            double fd = (dd(rho(u + h2)) - dd(rho(u - h2))) / (2 * h2);
            if (std::fabs(dd(rho.derivative(u)) - fd) > 1e-8) return false;
        }
        return true;
    });

    h.check("rho: F'(a) = (1/a) F(a/(1-a)) residual <= 1e-8", [&] {
        FView F(rho);
        std::uniform_real_distribution<double> aa(0.15, 0.9);
        for (int i = 0; i < samples; ++i) {
            XReal alpha(aa(rng));
            XReal resid = F.derivative(alpha) - F(alpha / (XReal(1.0) - alpha)) / alpha;
            if (std::fabs(dd(resid)) > 1e-8) return false;
        }
        return true;
    });

    h.check("rho: steps vs series cross-method <= 1e-10 on half-integers", [&] {
        for (double u = 1.5; u < 10.0; u += 1.0)
            if (std::fabs(dd(rho_series(XReal(u), ik_cfg, &ik9) - rho(XReal(u)))) > 1e-10)
                return false;
        return true;
    });

    h.check("rho: positive and nonincreasing on [1, 10]", [&] {
        XReal prev(1.0);
        for (int i = 10; i <= 100; ++i) {
            XReal v = rho(XReal(static_cast<double>(i)) * 0.1);
            if (!(v > XReal(0.0)) || v > prev) return false;
            prev = v;
        }
        return true;
    });

    // ---- constants ----
    CoeffTable cz = constants_from_zeta(30, zt);

    h.check("constants: zeta vs hankel cross-method <= 1e-8 for k <= 8", [&] {
        CoeffTable ch = constants_from_contour(8, ContourSpec::hankel(), cfg);
        for (int k = 0; k <= 8; ++k)
            if (std::fabs(dd(ch.C[static_cast<size_t>(k)] - cz.C[static_cast<size_t>(k)])) > 1e-8)
                return false;
        return true;
    });

    if (!opt.fast) {
        h.check("constants: zeta vs vertical (T = 1e6) <= 1e-6 for k <= 8", [&] {
            PrecisionConfig vcfg;
            vcfg.quad_order = 64;
            vcfg.abs_tol = XReal(1e-14);
            ContourSpec spec = ContourSpec::vertical(XReal(1.0), XReal(1e6));
            spec.node_budget = 400000000;
            CoeffTable cv = constants_from_contour(8, spec, vcfg);
            for (int k = 0; k <= 8; ++k)
                if (std::fabs(dd(cv.C[static_cast<size_t>(k)] - cz.C[static_cast<size_t>(k)])) >
                    1e-6)
                    return false;
            return true;
        });
    }

    h.check("constants: partial sums track e^{gamma z}/Gamma(1-z) to 1e-6", [&] {
        const XComplex pts[] = {XComplex(1.0), XComplex(-1.0), XComplex(0.5), XComplex(-0.5),
                                XComplex(0.5, 0.5)};
        for (const XComplex& z : pts)
            if (dd(abs(coeff_partial_sum(cz, z) - genfun(z))) > 1e-6) return false;
        return true;
    });

    h.check("constants: growth bound |C_k| <= 10(k+1)", [&] { return growth_bound_ok(cz); });

    h.check("constants: D_j = (-1)^j j! C_j exactly", [&] {
        XReal fact(1.0);
        for (int k = 0; k <= cz.k_max; ++k) {
            if (k > 0) fact *= static_cast<double>(k);
            XReal want = fact * cz.C[static_cast<size_t>(k)];
            if (k & 1) want = -want;
            if (cz.D[static_cast<size_t>(k)] != want) return false;
        }
        return true;
    });

    h.check("constants: sum of C_k vanishes (genfun(1) = 0) to 1e-6", [&] {
        return dd(abs(coeff_partial_sum(cz, XComplex(1.0)))) < 1e-6;
    });

    // ---- asymptotic ----
    h.check("asymptotic: expansion exact at k <= 1", [&] {
        IkEvaluator ev(1, XReal(1001.0), ik_cfg);
        for (double u : {10.0, 100.0, 1000.0}) {
            if (dd(expand_ik(1, XReal(u), cz, ev).abs_error) > 1e-28) return false;
            if (!is_zero(expand_ik(0, XReal(u), cz, ev).abs_error)) return false;
        }
        return true;
    });

    h.check("asymptotic: L and I expansion errors agree up to 1/k!", [&] {
        IkEvaluator ev(3, XReal(120.0), ik_cfg);
        for (int k = 2; k <= 3; ++k) {
            ExpansionReport li = expand_ik(k, XReal(50.0), cz, ev);
            ExpansionReport lk = expand_lk(k, XReal(0.02), cz, ev);
            XReal fact(1.0);
            for (int i = 2; i <= k; ++i) fact *= static_cast<double>(i);
            if (std::fabs(dd(lk.abs_error - li.abs_error / fact)) > 1e-10) return false;
        }
        return true;
    });

    h.check("asymptotic: perron values and conjugate symmetry", [&] {
        PrecisionConfig pcfg;
        pcfg.abs_tol = XReal(1e-13);
        pcfg.rel_tol = XReal(1e-13);
        XReal T(1e4);
        PerronResult pos = perron(XReal(1.0), XReal(1.0), T, pcfg);
        PerronResult neg = perron(XReal(-1.0), XReal(1.0), T, pcfg);
        PerronResult zer = perron(XReal(0.0), XReal(1.0), T, pcfg);
        return std::fabs(dd(pos.value) - 1.0) < 1e-3 && dd(pos.im_abs) < 1e-10 &&
               std::fabs(dd(neg.value)) < 1e-3 && dd(neg.im_abs) < 1e-10 &&
               std::fabs(dd(zer.value) - 0.5) < 1e-3 && dd(zer.im_abs) < 1e-10;
    });

    h.check("asymptotic: scaled error bounded for k <= 4 on 10..10^4", [&] {
        int top = opt.fast ? 3 : 4;
        XReal umax = opt.fast ? XReal(1001.0) : XReal(10001.0);
        IkEvaluator ev(top, umax, ik_cfg);
        std::vector<XReal> grid{XReal(10.0), XReal(100.0), XReal(1000.0)};
        if (!opt.fast) grid.push_back(XReal(10000.0));
        for (int k = 2; k <= top; ++k) {
            DecayScan scan = error_decay_scan(k, grid, cz, ev);
            if (!scan.bounded || scan.max_scaled > 10.0 * scan.first_scaled) return false;
        }
        return true;
    });

    h.check("asymptotic: G(u, s) bounds at 100 random points", [&] {
        std::uniform_real_distribution<double> uu(0.0, 6.0), tt(-6.0, 6.0);
        for (int i = 0; i < samples; ++i) {
            XReal u(std::pow(10.0, uu(rng)));
            double t = tt(rng);
            XComplex s(XReal(1.0), XReal(std::copysign(std::pow(10.0, std::fabs(t)), t)));
            GDiag g = g_diag(u, s, cfg);
            if (!g.g_within || !g.dg_within) return false;
        }
        return true;
    });

    // ---- sieve ----
    h.check("sieve: ramanujan sum reproduces rho(1/eps) to 1e-9", [&] {
        for (double eps : {0.6, 0.45, 0.35, 0.26}) {
            int depth = static_cast<int>(std::ceil(1.0 / eps)) - 1;
            XReal lhs = ramanujan_sum(XReal(eps), depth, cfg);
            if (std::fabs(dd(lhs - rho(XReal(1.0) / eps))) > 1e-9) return false;
        }
        return true;
    });

    h.check("sieve: Psi(x, y) monotone in y at x = 1e5", [&] {
        double lx = std::log(1e5);
        std::uint64_t prev = 0;
        for (double y : {10.0, 100.0, 1000.0}) {
            SieveResult r = smooth_count(100000, XReal(lx / std::log(y)));
            if (r.count <= prev) return false;
            prev = r.count;
        }
        return true;
    });

    h.check("sieve: deterministic repeat runs", [&] {
        SieveResult a = smooth_count(54321, XReal(2.5));
        SieveResult b = smooth_count(54321, XReal(2.5));
        std::stringstream sa, sb;
        write_sieve_csv(sa, a, XReal(0.5));
        write_sieve_csv(sb, b, XReal(0.5));
        return a.count == b.count && sa.str() == sb.str();
    });

    h.check("sieve: landau ratio drifts toward 1 (k = 2)", [&] {
        double prev_om = 1e9, prev_Om = 1e9;
        std::vector<std::uint64_t> xs{10000, 1000000};
        if (!opt.fast) xs.push_back(100000000);
        for (std::uint64_t x : xs) {
            AlmostPrimeResult r = almost_prime_count(x, 2);
            if (r.count_Omega > r.count_omega) return false;
            double rom = static_cast<double>(r.count_omega) / dd(r.landau_value);
            double rOm = static_cast<double>(r.count_Omega) / dd(r.landau_value);
            if (std::fabs(rom - 1.0) >= std::fabs(prev_om - 1.0)) return false;
            if (std::fabs(rOm - 1.0) >= std::fabs(prev_Om - 1.0)) return false;
            prev_om = rom;
            prev_Om = rOm;
        }
        return true;
    });

    out << (h.failures == 0 ? "verify: all invariants hold\n"
                            : "verify: " + std::to_string(h.failures) + " failure(s)\n");
    return h.failures;
}

} // namespace dickman
