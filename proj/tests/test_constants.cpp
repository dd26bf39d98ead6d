#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dickman/constants.hpp"
#include "dickman/errors.hpp"

#include <cmath>
#include <sstream>

using namespace dickman;

namespace {

double dd(const XReal& x) { return to_double(x); }

const CoeffTable& zeta30() {
    static const CoeffTable t = constants_from_zeta(30, ZetaTable::shared());
    return t;
}

} // namespace

TEST_CASE("zeta route: exact leading constants") {
    const CoeffTable& t = zeta30();
    CHECK(dd(t.C[0]) == 1.0);
    CHECK(is_zero(t.C[1]));
    XReal c2 = -xr_pi * xr_pi / 12.0;
    CHECK(std::fabs(dd(t.C[2] - c2)) < 1e-28);
    XReal c3 = -ZetaTable::shared().zeta(3) / 3.0;
    CHECK(std::fabs(dd(t.C[3] - c3)) < 1e-28);
    // C_4 = zeta(2)^2/8 - zeta(4)/4 = pi^4/1440 from the exp recurrence
    XReal pi4 = pow_int(xr_pi, 4);
    CHECK(std::fabs(dd(t.C[4] - pi4 / 1440.0)) < 1e-28);
    CHECK(std::fabs(dd(t.C[4]) - 0.06764520210694614) < 1e-15);
}

TEST_CASE("zeta route: higher constants against independent 30-digit references") {
    const CoeffTable& t = zeta30();
    struct Ref { int k; const char* value; };
    const Ref refs[] = {
        {5, "1.22165174020875367766574476289e-01"},
        {6, "4.05345254431010240306619255235e-02"},
        {7, "-5.86578558694419366157121393747e-04"},
        {8, "-4.82553213527131239440956903762e-03"},
    };
    for (const Ref& r : refs)
        CHECK(std::fabs(dd(t.C[static_cast<size_t>(r.k)] - parse_xreal(r.value))) < 1e-28);
}

TEST_CASE("D relation is exact in arithmetic") {
    const CoeffTable& t = zeta30();
    XReal fact(1.0);
    for (int k = 0; k <= t.k_max; ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        XReal want = fact * t.C[static_cast<size_t>(k)];
        if (k & 1) want = -want;
        CHECK(t.D[static_cast<size_t>(k)] == want);
    }
}

TEST_CASE("growth bound |C_k| <= 10(k+1)") {
    CHECK(growth_bound_ok(zeta30()));
    for (int k = 0; k <= 30; ++k)
        CHECK(dd(abs(zeta30().C[static_cast<size_t>(k)])) <= 10.0 * (k + 1));
}

TEST_CASE("insufficient zeta table") {
    ZetaTable small(6);
    CHECK_THROWS_AS(constants_from_zeta(8, small), InsufficientZetaTable);
    CHECK_NOTHROW(constants_from_zeta(6, small));
    CHECK_NOTHROW(constants_from_zeta(1, small));
}

TEST_CASE("hankel contour route reproduces the zeta constants" * doctest::timeout(300)) {
    PrecisionConfig cfg;
    CoeffTable h = constants_from_contour(8, ContourSpec::hankel(), cfg);
    CHECK(h.method == ConstantsMethod::contour_hankel);
    CHECK(std::fabs(dd(h.C[0]) - 1.0) < 1e-12); // Hankel integral of e^s/s^2 = 1/Gamma(2)
    XReal c2 = -xr_pi * xr_pi / 12.0;
    CHECK(std::fabs(dd(h.C[2] - c2)) < 1e-12);
    const CoeffTable& z = zeta30();
    for (int k = 0; k <= 8; ++k)
        CHECK(std::fabs(dd(h.C[static_cast<size_t>(k)] - z.C[static_cast<size_t>(k)])) < 1e-8);
    // the k = 8 agreement is the cross-method oracle for C_8
    CHECK(std::fabs(dd(h.C[8] - z.C[8])) < 1e-10);
}

TEST_CASE("hankel result does not depend on the loop shape") {
    PrecisionConfig cfg;
    CoeffTable a = constants_from_contour(4, ContourSpec::hankel(XReal(1e-3), XReal(60.0)), cfg);
    CoeffTable b = constants_from_contour(4, ContourSpec::hankel(XReal(7e-3), XReal(80.0)), cfg);
    for (int k = 0; k <= 4; ++k)
        CHECK(std::fabs(dd(a.C[static_cast<size_t>(k)] - b.C[static_cast<size_t>(k)])) < 1e-12);
}

TEST_CASE("vertical route at T = 1e6 stays within 1e-6 of the zeta constants" *
          doctest::timeout(600)) {
    PrecisionConfig cfg;
    cfg.quad_order = 64;
    cfg.abs_tol = XReal(1e-14);
    ContourSpec spec = ContourSpec::vertical(XReal(1.0), XReal(1e6));
    spec.node_budget = 400000000;
    CoeffTable v = constants_from_contour(8, spec, cfg);
    CHECK(v.method == ConstantsMethod::contour_vertical);
    const CoeffTable& z = zeta30();
    for (int k = 0; k <= 8; ++k)
        CHECK(std::fabs(dd(v.C[static_cast<size_t>(k)] - z.C[static_cast<size_t>(k)])) < 1e-6);
}

TEST_CASE("vertical tail bound triggers TailTooLarge") {
    PrecisionConfig cfg;
    ContourSpec spec = ContourSpec::vertical(XReal(1.0), XReal(100.0));
    CHECK_THROWS_AS(constants_from_contour(8, spec, cfg, XReal(1e-9)), TailTooLarge);
}

TEST_CASE("contour spec validation") {
    CHECK_THROWS_AS(ContourSpec::vertical(XReal(0.0), XReal(10.0)), DomainError);
    CHECK_THROWS_AS(ContourSpec::vertical(XReal(1.0), XReal(-1.0)), DomainError);
    CHECK_THROWS_AS(ContourSpec::hankel(XReal(2.0), XReal(60.0)), DomainError);
    CHECK_THROWS_AS(ContourSpec::hankel(XReal(1e-3), XReal(0.5)), DomainError);
    ContourSpec ok = ContourSpec::hankel();
    ok.node_budget = 0;
    CHECK_THROWS_AS(ok.validate(), DomainError);
    // a starved budget surfaces as ResourceLimit
    ContourSpec tiny = ContourSpec::hankel();
    tiny.node_budget = 10;
    CHECK_THROWS_AS(constants_from_contour(2, tiny, PrecisionConfig{}), ResourceLimit);
}

TEST_CASE("generating function values") {
    XComplex one = genfun(XComplex(0.0));
    CHECK(std::fabs(dd(one.re) - 1.0) < 1e-29);
    CHECK(std::fabs(dd(one.im)) < 1e-29);

    // 1/Gamma(0) = 0 at z = 1; 1/Gamma(-1) = 0 at z = 2
    CHECK(dd(abs(genfun(XComplex(1.0)))) < 1e-29);
    CHECK(dd(abs(genfun(XComplex(2.0)))) < 1e-29);

    // z = -1: e^{-gamma}/Gamma(2) = e^{-gamma}
    XReal eg = exp(-ZetaTable::shared().gamma());
    XComplex gm1 = genfun(XComplex(-1.0));
    CHECK(std::fabs(dd(gm1.re - eg)) < 1e-28);
    CHECK(std::fabs(dd(gm1.im)) < 1e-28);

    // z = 1/2: e^{gamma/2}/Gamma(1/2) = e^{gamma/2}/sqrt(pi)
    XComplex gh = genfun(XComplex(0.5));
    XReal want = exp(ZetaTable::shared().gamma() * 0.5) / sqrt(xr_pi);
    CHECK(std::fabs(dd(gh.re - want)) < 1e-28);
}

TEST_CASE("partial sums converge to the entire function") {
    const CoeffTable& t = zeta30();
    const XComplex pts[] = {XComplex(1.0), XComplex(-1.0), XComplex(0.5), XComplex(-0.5),
                            XComplex(0.5, 0.5)};
    for (const XComplex& z : pts) {
        XComplex diff = coeff_partial_sum(t, z) - genfun(z);
        CHECK(dd(abs(diff)) < 1e-6);
    }
    // sum of C_k alone is genfun(1) = 0
    XComplex s1 = coeff_partial_sum(t, XComplex(1.0));
    CHECK(dd(abs(s1)) < 1e-6);
}

TEST_CASE("conditionally convergent diagnostic is roughly right") {
    PrecisionConfig cfg;
    cfg.abs_tol = XReal(1e-10);
    cfg.quad_order = 48;
    XReal d0 = original_contour_diagnostic(0, XReal(1.0), XReal(5000.0), cfg);
    CHECK(std::fabs(dd(d0) - 1.0) < 1e-2); // no accuracy promise, sanity only
}

TEST_CASE("csv export") {
    std::stringstream out;
    write_constants_csv(out, constants_from_zeta(3, ZetaTable::shared()));
    std::string text = out.str();
    CHECK(text.rfind("k,C_k,D_k,method,err_bound\n", 0) == 0);
    int rows = 0;
    for (char ch : text)
        if (ch == '\n') ++rows;
    CHECK(rows == 5);
    CHECK(text.find("zeta_series") != std::string::npos);
}
