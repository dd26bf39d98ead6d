#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dickman/asymptotic.hpp"
#include "dickman/constants.hpp"
#include "dickman/errors.hpp"
#include "dickman/iterated.hpp"
#include "dickman/rho.hpp"
#include "dickman/sieve.hpp"
#include "dickman/verify.hpp"
#include "dickman/version.hpp"

#include <complex>
#include <fstream>
#include <sstream>

namespace py = pybind11;
using namespace dickman;

namespace {

PrecisionConfig cfg_for(bool fast) { return fast ? PrecisionConfig::fast() : PrecisionConfig{}; }

XComplex to_xc(const std::complex<double>& z) { return {XReal(z.real()), XReal(z.imag())}; }
std::complex<double> from_xc(const XComplex& z) { return {to_double(z.re), to_double(z.im)}; }

ConstantsMethod parse_method(const std::string& m) {
    if (m == "zeta") return ConstantsMethod::zeta_series;
    if (m == "hankel") return ConstantsMethod::contour_hankel;
    if (m == "vertical") return ConstantsMethod::contour_vertical;
    throw DomainError("unknown constants method: " + m);
}

py::dict report_dict(const ExpansionReport& r) {
    py::dict d;
    d["k"] = r.k;
    d["u"] = to_double(r.u);
    d["expansion"] = to_double(r.expansion_sum);
    d["truth"] = to_double(r.truth);
    d["abs_error"] = to_double(r.abs_error);
    d["scaled_error"] = to_double(r.scaled_error);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dickman function laboratory: rho, iterated integrals, Dickman constants, "
              "asymptotic expansion checks, and smooth-number sieving";
    m.attr("__version__") = kToolVersion;

    py::register_exception<Error>(m, "DickmanError");

    py::class_<RhoSpline>(m, "RhoSpline")
        .def("__call__", [](const RhoSpline& s, double u) { return to_double(s(XReal(u))); })
        .def("value_str", [](const RhoSpline& s, double u) { return to_string(s(XReal(u))); })
        .def("derivative",
             [](const RhoSpline& s, double u) { return to_double(s.derivative(XReal(u))); })
        .def("F",
             [](const RhoSpline& s, double alpha) {
                 return to_double(FView(s)(XReal(alpha)));
             })
        .def_property_readonly("u_max", [](const RhoSpline& s) { return to_double(s.u_max()); })
        .def_property_readonly("degree", &RhoSpline::degree)
        .def_property_readonly("method", &RhoSpline::method)
        .def("save",
             [](const RhoSpline& s, const std::string& path) {
                 std::ofstream out(path);
                 if (!out) throw DomainError("cannot open " + path);
                 s.save(out);
             })
        .def_static("load", [](const std::string& path) {
            std::ifstream in(path);
            if (!in) throw DomainError("cannot open " + path);
            return RhoSpline::load(in);
        });

    m.def(
        "rho_steps",
        [](double u_max, bool fast) { return rho_steps(XReal(u_max), cfg_for(fast)); },
        py::arg("u_max") = 10.0, py::arg("fast") = false,
        "Dickman rho spline by the method of steps");

    m.def(
        "rho_series",
        [](double u, bool fast) { return to_double(rho_series(XReal(u), cfg_for(fast))); },
        py::arg("u"), py::arg("fast") = false,
        "rho(u) from the alternating sum of iterated integrals");

    py::class_<IkEvaluator>(m, "IkEvaluator")
        .def(py::init([](int k_max, double u_max, bool fast) {
                 return IkEvaluator(k_max, XReal(u_max), cfg_for(fast));
             }),
             py::arg("k_max"), py::arg("u_max"), py::arg("fast") = false)
        .def("value",
             [](const IkEvaluator& ev, int k, double u) { return to_double(ev.value(k, XReal(u))); })
        .def_property_readonly("k_max", &IkEvaluator::k_max)
        .def_property_readonly("u_max", [](const IkEvaluator& e) { return to_double(e.u_max()); });

    m.def(
        "ik", [](int k, double u, bool fast) {
            return to_double(iterated_integral(k, XReal(u), cfg_for(fast)));
        },
        py::arg("k"), py::arg("u"), py::arg("fast") = false, "Iterated integral I_k(u)");

    m.def(
        "polylog",
        [](int k, double t, const std::string& method, long long budget, bool fast) {
            PolylogMethod pm =
                method == "recursion" ? PolylogMethod::recursion : PolylogMethod::from_ik;
            return to_double(dickman_polylog(k, XReal(t), pm, cfg_for(fast), budget));
        },
        py::arg("k"), py::arg("t"), py::arg("method") = "from_ik",
        py::arg("budget") = 20000000, py::arg("fast") = false,
        "Dickman polylogarithm L_k(t)");

    m.def(
        "ramanujan_nested",
        [](int j, double eps, bool fast) {
            return to_double(ramanujan_nested(j, XReal(eps), cfg_for(fast)));
        },
        py::arg("j"), py::arg("epsilon"), py::arg("fast") = false);

    m.def(
        "ramanujan_sum",
        [](double eps, int depth, bool fast) {
            return to_double(ramanujan_sum(XReal(eps), depth, cfg_for(fast)));
        },
        py::arg("epsilon"), py::arg("depth"), py::arg("fast") = false);

    m.def(
        "constants",
        [](int k_max, const std::string& method, double T, double c, double delta, double x_max,
           bool fast) {
            CoeffTable t;
            ConstantsMethod cm = parse_method(method);
            if (cm == ConstantsMethod::zeta_series) {
                t = constants_from_zeta(k_max, ZetaTable::shared());
            } else {
                ContourSpec spec = cm == ConstantsMethod::contour_vertical
                                       ? ContourSpec::vertical(XReal(c), XReal(T))
                                       : ContourSpec::hankel(XReal(delta), XReal(x_max));
                t = constants_from_contour(k_max, spec, cfg_for(fast));
            }
            py::list rows;
            for (int k = 0; k <= t.k_max; ++k) {
                py::dict d;
                d["k"] = k;
                d["C"] = to_double(t.C[static_cast<size_t>(k)]);
                d["D"] = to_double(t.D[static_cast<size_t>(k)]);
                d["C_str"] = to_string(t.C[static_cast<size_t>(k)]);
                d["err_bound"] = to_double(t.err_bound[static_cast<size_t>(k)]);
                d["method"] = method_name(t.method);
                rows.append(d);
            }
            return rows;
        },
        py::arg("k_max") = 8, py::arg("method") = "zeta", py::arg("T") = 1e6,
        py::arg("c") = 1.0, py::arg("delta") = 1e-3, py::arg("x_max") = 60.0,
        py::arg("fast") = false, "Dickman constants C_k and D_k");

    m.def(
        "genfun",
        [](const std::complex<double>& z) { return from_xc(genfun(to_xc(z))); },
        py::arg("z"), "e^{gamma z} / Gamma(1 - z)");

    m.def(
        "expand_ik",
        [](int k, double u, bool fast) {
            PrecisionConfig cfg = cfg_for(fast);
            CoeffTable t = constants_from_zeta(std::max(2, k), ZetaTable::shared());
            IkEvaluator ev(k, XReal(u + 1.0), cfg);
            return report_dict(expand_ik(k, XReal(u), t, ev));
        },
        py::arg("k"), py::arg("u"), py::arg("fast") = false,
        "Expansion report for I_k(u)");

    m.def(
        "error_decay_scan",
        [](int k, const std::vector<double>& grid, bool fast) {
            PrecisionConfig cfg = cfg_for(fast);
            CoeffTable t = constants_from_zeta(std::max(2, k), ZetaTable::shared());
            std::vector<XReal> g;
            for (double u : grid) g.emplace_back(u);
            IkEvaluator ev(k, XReal(grid.back() + 1.0), cfg);
            DecayScan scan = error_decay_scan(k, g, t, ev);
            py::dict d;
            py::list reports;
            for (const ExpansionReport& r : scan.reports) reports.append(report_dict(r));
            d["reports"] = reports;
            d["bounded"] = scan.bounded;
            d["first_scaled"] = scan.first_scaled;
            d["max_scaled"] = scan.max_scaled;
            return d;
        },
        py::arg("k"), py::arg("grid"), py::arg("fast") = false);

    m.def(
        "perron",
        [](double lambda, double c, double T, bool fast) {
            PerronResult r = perron(XReal(lambda), XReal(c), XReal(T), cfg_for(fast));
            py::dict d;
            d["value"] = to_double(r.value);
            d["im_abs"] = to_double(r.im_abs);
            d["trunc_bound"] = to_double(r.trunc_bound);
            return d;
        },
        py::arg("lam"), py::arg("c") = 1.0, py::arg("T") = 1e4, py::arg("fast") = false);

    m.def(
        "g_diag",
        [](double u, const std::complex<double>& s, bool fast) {
            GDiag g = g_diag(XReal(u), to_xc(s), cfg_for(fast));
            py::dict d;
            d["G"] = from_xc(g.G);
            d["dG"] = from_xc(g.dG);
            d["g_bound"] = to_double(g.g_bound);
            d["dg_bound"] = to_double(g.dg_bound);
            d["g_within"] = g.g_within;
            d["dg_within"] = g.dg_within;
            return d;
        },
        py::arg("u"), py::arg("s"), py::arg("fast") = false);

    m.def(
        "smooth_count",
        [](std::uint64_t x, double u, std::uint64_t max_x) {
            SieveLimits lim;
            if (max_x) lim.max_x = max_x;
            SieveResult r = smooth_count(x, XReal(u), lim);
            py::dict d;
            d["x"] = r.x;
            d["y"] = r.y;
            d["count"] = r.count;
            d["ratio"] = to_double(r.ratio);
            return d;
        },
        py::arg("x"), py::arg("u"), py::arg("max_x") = 0,
        "Exact Psi(x, floor(x^{1/u})) by the segmented sieve");

    m.def(
        "almost_prime_count",
        [](std::uint64_t x, int k, std::uint64_t max_x) {
            SieveLimits lim;
            if (max_x) lim.max_x = max_x;
            AlmostPrimeResult r = almost_prime_count(x, k, lim);
            py::dict d;
            d["x"] = r.x;
            d["k"] = r.k;
            d["count_omega"] = r.count_omega;
            d["count_Omega"] = r.count_Omega;
            d["landau_value"] = to_double(r.landau_value);
            return d;
        },
        py::arg("x"), py::arg("k"), py::arg("max_x") = 0);

    m.def(
        "ramanujan_phi_check",
        [](std::uint64_t x, double eps, int depth, bool fast) {
            RamanujanCheck c = ramanujan_phi_check(x, XReal(eps), depth, cfg_for(fast));
            py::dict d;
            d["sieve_ratio"] = to_double(c.sieve_ratio);
            d["ramanujan_sum"] = to_double(c.ramanujan_value);
            return d;
        },
        py::arg("x"), py::arg("epsilon"), py::arg("depth"), py::arg("fast") = false);

    m.def(
        "verify",
        [](std::uint64_t seed, bool fast) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.fast = fast;
            std::ostringstream out;
            int failures = run_verify(out, opt);
            return py::make_tuple(failures, out.str());
        },
        py::arg("seed") = 20260811, py::arg("fast") = true,
        "Run the module invariant suite; returns (failures, report)");
}
