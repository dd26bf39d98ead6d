#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dickman/errors.hpp"
#include "dickman/power_series.hpp"
#include "dickman/zeta.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace dickman;

namespace {

const double kContractEps = std::ldexp(1.0, -95);

// 40-digit reference literals, test-only.
const char* kGammaLit = "0.5772156649015328606065120900824024310422";
const char* kZeta2Lit = "1.644934066848226436472415166646025189219";
const char* kZeta3Lit = "1.202056903159594285399738161511449990765";

double rel_err(const XReal& got, const XReal& want) {
    return std::fabs(to_double(abs(got - want) / abs(want)));
}

XReal pairwise(const std::vector<XReal>& xs, size_t lo, size_t hi) {
    if (hi - lo == 1) return xs[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise(xs, lo, mid) + pairwise(xs, mid, hi);
}

// independent oracle for zeta(3): direct summation of 10^8 terms plus the
// Euler-Maclaurin tail 1/(2N^2) - 1/(2N^3) + 1/(4N^4) - ...
XReal zeta3_oracle() {
    const long long n = 100000000;
    const size_t block = 1 << 16;
    std::vector<XReal> partials;
    XReal acc(0.0);
    size_t in_block = 0;
    for (long long k = 1; k <= n; ++k) {
        XReal t(static_cast<double>(k));
        acc += XReal(1.0) / (t * t * t);
        if (++in_block == block) {
            partials.push_back(acc);
            acc = XReal(0.0);
            in_block = 0;
        }
    }
    if (in_block) partials.push_back(acc);
    XReal sum = pairwise(partials, 0, partials.size());
    XReal N(static_cast<double>(n));
    XReal n2 = N * N;
    XReal tail = XReal(0.5) / n2 - XReal(0.5) / (n2 * N) + XReal(0.25) / (n2 * n2);
    return sum + tail;
}

} // namespace

TEST_CASE("series_exp basics") {
    PowerSeries z(3);
    PowerSeries e0 = series_exp(z);
    CHECK(to_double(e0[0]) == 1.0);
    CHECK(is_zero(e0[1]));
    CHECK(is_zero(e0[2]));
    CHECK(is_zero(e0[3]));

    PowerSeries lin(3);
    lin[1] = XReal(1.0);
    PowerSeries ez = series_exp(lin);
    CHECK(to_double(ez[0]) == 1.0);
    CHECK(to_double(ez[1]) == 1.0);
    CHECK(rel_err(ez[2], XReal(0.5)) < kContractEps);
    CHECK(rel_err(ez[3], XReal(1.0) / 6.0) < kContractEps);

    PowerSeries bad(2);
    bad[0] = XReal(0.5);
    CHECK_THROWS_AS(series_exp(bad), ConstantTermNonzero);
    PowerSeries bad2(2);
    CHECK_THROWS_AS(series_log(bad2), ConstantTermNonzero); // constant term 0, not 1
}

TEST_CASE("exp of the zeta series reproduces the first Dickman constants") {
    const ZetaTable& zt = ZetaTable::shared();
    PowerSeries a(3);
    a[2] = -zt.zeta(2) / 2.0;
    a[3] = -zt.zeta(3) / 3.0;
    PowerSeries b = series_exp(a);
    CHECK(to_double(b[0]) == 1.0);
    CHECK(is_zero(b[1]));
    XReal c2 = -xr_pi * xr_pi / 12.0;
    CHECK(rel_err(b[2], c2) < 1e-28);
    CHECK(rel_err(b[3], -parse_xreal(kZeta3Lit) / 3.0) < 1e-28);
}

TEST_CASE("series log is the inverse recurrence of series exp") {
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> coef(-1.5, 1.5);
    for (int rep = 0; rep < 30; ++rep) {
        PowerSeries a(12);
        for (int k = 1; k <= 12; ++k) a[k] = XReal(coef(rng));
        PowerSeries b = series_exp(a);
        PowerSeries back = series_log(b);
        for (int k = 1; k <= 12; ++k) {
            double denom = std::max(1.0, std::fabs(to_double(a[k])));
            CHECK(std::fabs(to_double(back[k] - a[k])) / denom < std::ldexp(1.0, -90));
        }
        PowerSeries again = series_exp(back);
        for (int k = 0; k <= 12; ++k)
            CHECK(std::fabs(to_double(again[k] - b[k])) /
                      std::max(1.0, std::fabs(to_double(b[k]))) < std::ldexp(1.0, -90));
    }
}

TEST_CASE("series arithmetic") {
    PowerSeries a(2), b(2);
    a[0] = XReal(1.0); a[1] = XReal(2.0); a[2] = XReal(3.0);
    b[0] = XReal(1.0); b[1] = XReal(-1.0);
    PowerSeries p = a * b;
    CHECK(to_double(p[0]) == 1.0);
    CHECK(to_double(p[1]) == 1.0);
    CHECK(to_double(p[2]) == 1.0);
    PowerSeries mismatched(3);
    CHECK_THROWS_AS(a * mismatched, DomainError);
}

TEST_CASE("zeta table values") {
    const ZetaTable& zt = ZetaTable::shared();
    CHECK(zt.n_max() == 64);
    XReal pi2_6 = xr_pi * xr_pi / 6.0;
    CHECK(rel_err(zt.zeta(2), pi2_6) < kContractEps);
    CHECK(rel_err(zt.zeta(2), parse_xreal(kZeta2Lit)) < kContractEps);
    CHECK(rel_err(zt.zeta(3), parse_xreal(kZeta3Lit)) < kContractEps);

    // tight geometric tail at the top of the table
    XReal z64m1 = zt.zeta(64) - 1.0;
    CHECK(to_double(z64m1) < std::ldexp(1.0, -63));
    CHECK(to_double(z64m1) > std::ldexp(1.0, -65));

    for (int n = 2; n < 64; ++n) {
        CHECK(zt.zeta(n + 1) < zt.zeta(n));
        CHECK(to_double(zt.zeta(n) - 1.0) < std::ldexp(2.0, 1 - n));
    }
    CHECK(rel_err(zt.gamma(), parse_xreal(kGammaLit)) < kContractEps);
    CHECK_THROWS_AS(zt.zeta(1), OutOfRange);
    CHECK_THROWS_AS(zt.zeta(65), OutOfRange);
    CHECK_THROWS_AS(ZetaTable(1), DomainError);
}

TEST_CASE("zeta(3) against the direct-summation oracle" * doctest::timeout(300)) {
    const ZetaTable& zt = ZetaTable::shared();
    XReal oracle = zeta3_oracle();
    CHECK(rel_err(zt.zeta(3), oracle) < kContractEps);
}

TEST_CASE("bernoulli numbers from zeta") {
    const ZetaTable& zt = ZetaTable::shared();
    CHECK(rel_err(bernoulli_even(2, zt), XReal(1.0) / 6.0) < 1e-28);
    CHECK(rel_err(bernoulli_even(4, zt), XReal(-1.0) / 30.0) < 1e-28);
    CHECK(rel_err(bernoulli_even(10, zt), XReal(5.0) / 66.0) < 1e-28);
    CHECK_THROWS_AS(bernoulli_even(3, zt), DomainError);
}
