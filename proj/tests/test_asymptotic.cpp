#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dickman/asymptotic.hpp"
#include "dickman/errors.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace dickman;

namespace {

double dd(const XReal& x) { return to_double(x); }

const CoeffTable& ctab() {
    static const CoeffTable t = constants_from_zeta(8, ZetaTable::shared());
    return t;
}

const IkEvaluator& ik_wide() {
    static const IkEvaluator ev(3, XReal(1100.0), PrecisionConfig{});
    return ev;
}

} // namespace

TEST_CASE("expansion is exact at k = 0 and k = 1") {
    const IkEvaluator& ik = ik_wide();
    for (double u : {10.0, 100.0, 1000.0}) {
        ExpansionReport r1 = expand_ik(1, XReal(u), ctab(), ik);
        CHECK(dd(r1.abs_error) < 1e-28);
        CHECK(std::fabs(dd(r1.expansion_sum - log(XReal(u)))) < 1e-28);
    }
    ExpansionReport r0 = expand_ik(0, XReal(5.0), ctab(), ik);
    CHECK(dd(r0.expansion_sum) == 1.0);
    CHECK(dd(r0.truth) == 1.0);
    CHECK(is_zero(r0.abs_error));
}

TEST_CASE("k = 2 expansion arithmetic at u = 100") {
    ExpansionReport r = expand_ik(2, XReal(100.0), ctab(), ik_wide());
    XReal lg = log(XReal(100.0));
    XReal want = lg * lg - xr_pi * xr_pi / 6.0; // D_0 (log u)^2 + D_2
    CHECK(std::fabs(dd(r.expansion_sum - want)) < 1e-25);
    CHECK(r.terms.size() == 3);
    CHECK(is_zero(r.terms[1])); // D_1 = 0
    // true error at u = 100 (independent 30-digit run gave 0.0200485...)
    CHECK(std::fabs(dd(r.abs_error) - 0.02005) < 2e-4);
    CHECK(std::fabs(dd(r.scaled_error) - 0.0945) < 2e-3);
    // scaled error is u |err| / (log u)^k by construction
    XReal rebuilt = r.u * r.abs_error / pow_int(log(r.u), 2);
    CHECK(std::fabs(dd(rebuilt - r.scaled_error)) < 1e-25);
}

TEST_CASE("L_k expansion reports") {
    const IkEvaluator& ik = ik_wide();
    ExpansionReport r0 = expand_lk(0, XReal(0.3), ctab(), ik);
    CHECK(dd(r0.expansion_sum) == 1.0);
    CHECK(is_zero(r0.abs_error));

    ExpansionReport r1 = expand_lk(1, XReal(0.01), ctab(), ik);
    CHECK(std::fabs(dd(r1.expansion_sum - log(XReal(0.01)))) < 1e-25);
    CHECK(dd(r1.abs_error) < 1e-25);

    ExpansionReport r2 = expand_lk(2, XReal(0.01), ctab(), ik);
    XReal lt = log(XReal(0.01));
    CHECK(std::fabs(dd(r2.expansion_sum - (lt * lt * 0.5 - xr_pi * xr_pi / 12.0))) < 1e-25);

    // the two Theorem forms carry the same error object up to 1/k!
    for (int k = 2; k <= 3; ++k) {
        for (double t : {0.05, 0.02}) {
            ExpansionReport li = expand_ik(k, XReal(1.0) / t, ctab(), ik);
            ExpansionReport lk = expand_lk(k, XReal(t), ctab(), ik);
            XReal fact(1.0);
            for (int i = 2; i <= k; ++i) fact *= static_cast<double>(i);
            CHECK(std::fabs(dd(lk.abs_error - li.abs_error / fact)) < 1e-10);
        }
    }
}

TEST_CASE("decay scan at k = 1 carries exactly zero errors") {
    std::vector<XReal> grid{XReal(10.0), XReal(100.0), XReal(1000.0)};
    DecayScan scan = error_decay_scan(1, grid, ctab(), ik_wide());
    for (const ExpansionReport& r : scan.reports) CHECK(dd(r.abs_error) < 1e-28);
    CHECK(scan.bounded);
    CHECK(scan.max_scaled <= 10.0 * scan.first_scaled + 1e-28);
}

TEST_CASE("decay scan boundedness for k = 2 and 3") {
    std::vector<XReal> grid{XReal(10.0), XReal(100.0), XReal(1000.0)};
    for (int k : {2, 3}) {
        DecayScan scan = error_decay_scan(k, grid, ctab(), ik_wide());
        CHECK(scan.bounded);
        CHECK(scan.max_scaled <= 10.0 * scan.first_scaled);
        CHECK(scan.reports.size() == 3);
    }
    // frozen expectations from an independent 30-digit run
    DecayScan s2 = error_decay_scan(2, grid, ctab(), ik_wide());
    CHECK(std::fabs(dd(s2.reports[0].scaled_error) - 0.387098) < 1e-3);
    CHECK(std::fabs(dd(s2.reports[2].scaled_error) - 0.0419242) < 1e-3);

    std::vector<XReal> bad{XReal(2.0), XReal(10.0)};
    CHECK_THROWS_AS(error_decay_scan(2, bad, ctab(), ik_wide()), DomainError);
    std::vector<XReal> unsorted{XReal(100.0), XReal(10.0)};
    CHECK_THROWS_AS(error_decay_scan(2, unsorted, ctab(), ik_wide()), DomainError);
}

TEST_CASE("perron truncated integrals" * doctest::timeout(300)) {
    PrecisionConfig cfg;
    cfg.abs_tol = XReal(1e-14);
    cfg.rel_tol = XReal(1e-14);
    XReal c(1.0), T(1e4);

    PerronResult pos = perron(XReal(1.0), c, T, cfg);
    CHECK(std::fabs(dd(pos.value) - 1.0) < 1e-3);
    CHECK(dd(pos.im_abs) < 1e-10);
    CHECK(std::fabs(dd(pos.value) - 1.0) < dd(pos.trunc_bound) + 1e-6);

    PerronResult neg = perron(XReal(-1.0), c, T, cfg);
    CHECK(std::fabs(dd(neg.value)) < 1e-3);
    CHECK(dd(neg.im_abs) < 1e-10);

    PerronResult zero = perron(XReal(0.0), c, T, cfg);
    CHECK(std::fabs(dd(zero.value) - 0.5) < 1e-3);
    CHECK(dd(zero.im_abs) < 1e-10);
    CHECK(dd(zero.trunc_bound) < 1e-10); // matches arctan(T/c)/pi in closed form

    CHECK_THROWS_AS(perron(XReal(1.0), XReal(-1.0), T, cfg), DomainError);
}

TEST_CASE("G diagnostics") {
    PrecisionConfig cfg;
    // series oracle for G(1, 1) = sum (-1)^{n+1} / (n n!)
    XReal oracle(0.0);
    XReal fact(1.0);
    for (int n = 1; n <= 30; ++n) {
        fact *= static_cast<double>(n);
        XReal term = XReal(1.0) / (fact * static_cast<double>(n));
        oracle += (n & 1) ? term : -term;
    }
    GDiag d = g_diag(XReal(1.0), XComplex(1.0), cfg);
    CHECK(std::fabs(dd(d.G.re - oracle)) < 1e-20);
    CHECK(std::fabs(dd(d.G.re) - 0.7965995992970531) < 1e-15);
    CHECK(std::fabs(dd(d.G.im)) < 1e-20);
    XReal want_dg = (XReal(1.0) - exp(XReal(-1.0)));
    CHECK(std::fabs(dd(d.dG.re - want_dg)) < 1e-25);
    CHECK(d.g_within);
    CHECK(d.dg_within);

    // G -> 0 as u -> infinity
    GDiag far = g_diag(XReal(1e6), XComplex(1.0, 1.0), cfg);
    CHECK(dd(abs(far.G)) < 1e-5);

    // |dG/ds| <= 2 min(1/|s|, 1/u)
    GDiag big = g_diag(XReal(1.0), XComplex(100.0), cfg);
    CHECK(dd(abs(big.dG)) <= 2.0 * std::min(0.01, 1.0));
    CHECK(big.dg_within);

    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> uu(0.0, 6.0), tt(-6.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        XReal u(std::pow(10.0, uu(rng)));
        XComplex s(XReal(1.0), XReal(std::copysign(std::pow(10.0, std::fabs(tt(rng))), tt(rng))));
        GDiag g = g_diag(u, s, cfg);
        CHECK(g.g_within);
        CHECK(g.dg_within);
    }
    CHECK_THROWS_AS(g_diag(XReal(1.0), XComplex(-1.0, 2.0), cfg), DomainError);
}

TEST_CASE("log s + gamma splitting identity at s = 1") {
    // int_0^1 (1-e^{-t})/t dt - int_1^inf e^{-t}/t dt = log 1 + gamma = gamma
    PrecisionConfig cfg;
    XReal first = g_diag(XReal(1.0), XComplex(1.0), cfg).G.re;
    XReal second =
        integrate([](const XReal& t) { return exp(-t) / t; }, XReal(1.0), XReal(80.0), cfg);
    CHECK(std::fabs(dd(first - second - ZetaTable::shared().gamma())) < 1e-25);
}

TEST_CASE("report serialization") {
    std::vector<ExpansionReport> reports{expand_ik(2, XReal(10.0), ctab(), ik_wide()),
                                         expand_ik(2, XReal(100.0), ctab(), ik_wide())};
    std::stringstream csv;
    write_reports_csv(csv, reports);
    CHECK(csv.str().rfind("k,u,expansion,truth,abs_error,scaled_error\n", 0) == 0);

    std::stringstream js;
    write_reports_json(js, reports);
    std::string text = js.str();
    CHECK(text.front() == '[');
    CHECK(text.find("\"scaled_error\"") != std::string::npos);
    CHECK(text.find("\"k\": 2") != std::string::npos);
}
