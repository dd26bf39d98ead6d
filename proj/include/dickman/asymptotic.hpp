#pragma once

#include "dickman/constants.hpp"
#include "dickman/iterated.hpp"
#include "dickman/quadrature.hpp"
#include "dickman/xcomplex.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace dickman {

// Per-(k, u) record of the expansion
//   I_k(u) ~ sum_j binom(k,j) D_j (log u)^{k-j}
// against the true iterated integral. For the L_k form, u = 1/t and the same
// scaled error u |err| / (log u)^k measures the O(t |log t|^k) term.
struct ExpansionReport {
    int k = 0;
    XReal u;
    std::vector<XReal> terms;
    XReal expansion_sum;
    XReal truth;
    XReal abs_error;
    XReal scaled_error;
};

ExpansionReport expand_ik(int k, const XReal& u, const CoeffTable& table,
                          const IkEvaluator& ik);

ExpansionReport expand_lk(int k, const XReal& t, const CoeffTable& table,
                          const IkEvaluator& ik);

struct DecayScan {
    int k = 0;
    std::vector<ExpansionReport> reports;
    double first_scaled = 0.0;
    double max_scaled = 0.0;
    bool bounded = false; // max over the upper half of the grid <= max over the lower half
};

// Grid must be ascending with every value > e (so log u > 1).
DecayScan error_decay_scan(int k, std::span<const XReal> grid, const CoeffTable& table,
                           const IkEvaluator& ik);

struct PerronResult {
    XReal lambda, c, T;
    XReal value;       // real part of the truncated integral
    XReal im_abs;      // |imaginary part|, conjugate symmetry check
    XReal trunc_bound; // e^{c lambda}/(pi T |lambda|); for lambda = 0 the
                       // distance to the closed form arctan(T/c)/pi
};

// Truncated Perron integral (1/2 pi i) int_{c-iT}^{c+iT} e^{lambda s}/s ds.
PerronResult perron(const XReal& lambda, const XReal& c, const XReal& T,
                    const PrecisionConfig& cfg);

struct GDiag {
    XReal u;
    XComplex s;
    XComplex G;        // int_0^{1/u} (1 - e^{-ts})/t dt
    XComplex dG;       // (1 - e^{-s/u})/s
    XReal g_bound;     // 2 log(1 + |s|/u) + 1
    XReal dg_bound;    // 2 min(1/|s|, 1/u)
    bool g_within = false;
    bool dg_within = false;
};

GDiag g_diag(const XReal& u, const XComplex& s, const PrecisionConfig& cfg);

// CSV "k,u,expansion,truth,abs_error,scaled_error"; JSON array of objects
// with the same fields (values in the XReal decimal format).
void write_reports_csv(std::ostream& os, std::span<const ExpansionReport> reports);
void write_reports_json(std::ostream& os, std::span<const ExpansionReport> reports);

} // namespace dickman
