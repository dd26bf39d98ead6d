#pragma once

#include "dickman/xreal.hpp"

#include <vector>

namespace dickman {

// Cached values of zeta(n) for 2 <= n <= n_max plus the Euler-Mascheroni
// constant, all computed at construction (never hard-coded). Immutable after
// construction and safe to share across threads.
class ZetaTable {
public:
    explicit ZetaTable(int n_max = 64);

    int n_max() const { return n_max_; }
    const XReal& zeta(int n) const; // throws OutOfRange unless 2 <= n <= n_max
    const XReal& gamma() const { return gamma_; }

    // Process-wide table with the default n_max, built on first use.
    static const ZetaTable& shared();

private:
    int n_max_;
    std::vector<XReal> values_; // values_[n] = zeta(n), entries 0,1 unused
    XReal gamma_;
};

// Builds a fresh table; identical to the ZetaTable constructor.
inline ZetaTable zeta_values(int n_max) { return ZetaTable(n_max); }

// B_{2n} recovered from zeta(2n); used by the Stirling series for Gamma.
XReal bernoulli_even(int two_n, const ZetaTable& zt);

} // namespace dickman
