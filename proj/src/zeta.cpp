#include "dickman/zeta.hpp"
#include "dickman/errors.hpp"

namespace dickman {

namespace {

// P. Borwein's alternating-series algorithm; error ~ 3/(3+sqrt(8))^n.
XReal zeta_borwein(int s) {
    const int n = 60;
    std::vector<XReal> d(static_cast<size_t>(n) + 1);
    XReal t = XReal(1.0) / static_cast<double>(n); // t_0 = (n-1)!/n!
    XReal acc = t;
    d[0] = acc * static_cast<double>(n);
    for (int i = 1; i <= n; ++i) {
        t = t * static_cast<double>(4 * (n + i - 1) * (n - i + 1)) /
            static_cast<double>((2 * i) * (2 * i - 1));
        acc += t;
        d[static_cast<size_t>(i)] = acc * static_cast<double>(n);
    }
    XReal sum(0.0);
    for (int k = 0; k < n; ++k) {
        XReal term = (d[static_cast<size_t>(k)] - d[static_cast<size_t>(n)]) /
                     pow_int(XReal(static_cast<double>(k + 1)), s);
        sum += (k & 1) ? -term : term;
    }
    XReal scale = XReal(1.0) - pow_int(XReal(2.0), 1 - s);
    return -sum / (d[static_cast<size_t>(n)] * scale);
}

XReal zeta_direct(int s) {
    XReal sum(1.0);
    for (int k = 2; k < 64; ++k) {
        XReal term = XReal(1.0) / pow_int(XReal(static_cast<double>(k)), s);
        sum += term;
        if (term.hi < 1e-42) break;
    }
    return sum;
}

XReal pairwise_sum(const std::vector<XReal>& xs, size_t lo, size_t hi) {
    if (hi - lo == 1) return xs[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

// Brent-McMillan: gamma = (sum t_k (H_k - ln n)) / (sum t_k) + O(e^{-4n}),
// with t_k = (n^k/k!)^2. Pairwise summation keeps the rounding error of the
// long sums below the 2^-95 contract.
XReal euler_gamma() {
    const int n = 30;
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    XReal ln_n = log(XReal(static_cast<double>(n)));
    XReal t(1.0);
    XReal a = -ln_n;
    std::vector<XReal> us{a}, vs{t};
    for (int k = 1; k <= 500; ++k) {
        t = t * n2 / static_cast<double>(k) / static_cast<double>(k);
        a = (a * n2 / static_cast<double>(k) + t) / static_cast<double>(k);
        us.push_back(a);
        vs.push_back(t);
        if (k > 2 * n && t.hi < 1e-20) break;
    }
    return pairwise_sum(us, 0, us.size()) / pairwise_sum(vs, 0, vs.size());
}

} // namespace

ZetaTable::ZetaTable(int n_max) : n_max_(n_max) {
    if (n_max < 2) throw DomainError("ZetaTable requires n_max >= 2");
    values_.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 2; n <= n_max; ++n)
        values_[static_cast<size_t>(n)] = n < 32 ? zeta_borwein(n) : zeta_direct(n);
    gamma_ = euler_gamma();
}

const XReal& ZetaTable::zeta(int n) const {
    if (n < 2 || n > n_max_)
        throw OutOfRange("zeta(n) needs 2 <= n <= " + std::to_string(n_max_) +
                         ", got n = " + std::to_string(n));
    return values_[static_cast<size_t>(n)];
}

const ZetaTable& ZetaTable::shared() {
    static const ZetaTable table(64);
    return table;
}

XReal bernoulli_even(int two_n, const ZetaTable& zt) {
    if (two_n < 2 || (two_n & 1)) throw DomainError("bernoulli_even wants an even index >= 2");
    XReal fact(1.0);
    for (int i = 2; i <= two_n; ++i) fact *= static_cast<double>(i);
    XReal b = zt.zeta(two_n) * fact * 2.0 / pow_int(xr_two_pi, two_n);
    return ((two_n / 2) & 1) ? b : -b; // sign (-1)^{n+1} for B_{2n}
}

} // namespace dickman
