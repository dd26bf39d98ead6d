#pragma once

#include "dickman/quadrature.hpp"
#include "dickman/xcomplex.hpp"
#include "dickman/xreal.hpp"
#include "dickman/zeta.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dickman {

enum class ConstantsMethod { zeta_series, contour_vertical, contour_hankel };

std::string method_name(ConstantsMethod m);

// The Dickman constants C_k (coefficients of e^{gamma z}/Gamma(1-z)) together
// with D_j = (-1)^j j! C_j and a per-entry error bound.
struct CoeffTable {
    int k_max = 0;
    std::vector<XReal> C;
    std::vector<XReal> D;
    std::vector<XReal> err_bound;
    ConstantsMethod method = ConstantsMethod::zeta_series;
};

struct ContourSpec {
    enum class Kind { vertical, hankel };
    Kind kind = Kind::hankel;
    XReal c{1.0};      // vertical line Re s = c
    XReal T{1e6};      // vertical truncation height
    XReal delta{1e-3}; // hankel loop radius / ray offset
    XReal x_max{60.0}; // hankel ray truncation
    long long node_budget = 50000000;

    static ContourSpec vertical(const XReal& c, const XReal& T);
    static ContourSpec hankel(const XReal& delta = XReal(1e-3),
                              const XReal& x_max = XReal(60.0));
    void validate() const;
};

// Production route: C = exp(-sum_{n>=2} zeta(n) z^n / n) by the formal-series
// exponential. C_0 = 1 and C_1 = 0 are exact. Throws InsufficientZetaTable
// when zt.n_max() < k_max.
CoeffTable constants_from_zeta(int k_max, const ZetaTable& zt);

// Contour oracle for the same constants, from the absolutely convergent form
// C_k = (1/2 pi i) int e^s ((log s + gamma)^k - k (log s + gamma)^{k-1})/s^2 ds
// over either the truncated vertical line or the Hankel loop. The recorded
// truncation estimate goes to err_bound; TailTooLarge fires when it exceeds
// tail_tol.
CoeffTable constants_from_contour(int k_max, const ContourSpec& spec,
                                  const PrecisionConfig& cfg,
                                  const XReal& tail_tol = XReal(1e300));

// e^{gamma z} / Gamma(1 - z); entire, >= 30 correct digits for |z| <= 4.
XComplex genfun(const XComplex& z);

// Horner evaluation of sum_k C_k z^k.
XComplex coeff_partial_sum(const CoeffTable& table, const XComplex& z);

// Diagnostic only: the conditionally convergent defining integral
// (1/2 pi i) int (e^s/s)(log s + gamma)^k ds as a symmetric limit at height T.
// No accuracy promise.
XReal original_contour_diagnostic(int k, const XReal& c, const XReal& T,
                                  const PrecisionConfig& cfg);

// CSV export: header "k,C_k,D_k,method,err_bound".
void write_constants_csv(std::ostream& os, const CoeffTable& table);

// |C_k| <= bound_constant * (k+1) for every entry.
bool growth_bound_ok(const CoeffTable& table, double bound_constant = 10.0);

} // namespace dickman
