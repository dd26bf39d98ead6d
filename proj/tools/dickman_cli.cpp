// Command-line front end: every subcommand prints machine-readable CSV or
// JSON, numbers in the XReal decimal format. Exit codes: 0 success, 1 usage
// error, 2 computation error (error name on stderr).

#include <CLI11.hpp>

#include "dickman/asymptotic.hpp"
#include "dickman/constants.hpp"
#include "dickman/errors.hpp"
#include "dickman/iterated.hpp"
#include "dickman/rho.hpp"
#include "dickman/sieve.hpp"
#include "dickman/verify.hpp"
#include "dickman/version.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace {

using namespace dickman;

struct OutputEnvelope {
    std::string format = "csv"; // csv | json
    std::string destination;    // empty = stdout
    std::string method_tag;
    bool fast = false;

    std::ostream& open(std::ofstream& file) const {
        if (destination.empty()) return std::cout;
        file.open(destination);
        if (!file) throw DomainError("cannot open output file " + destination);
        return file;
    }

    void csv_metadata(std::ostream& os) const {
        os << "# tool=" << kToolName << " version=" << kToolVersion
           << " precision=" << (fast ? "fast" : "default");
        if (!method_tag.empty()) os << " method=" << method_tag;
        os << '\n';
    }

    void json_head(std::ostream& os) const {
        os << "{\"tool\": \"" << kToolName << "\", \"version\": \"" << kToolVersion
           << "\", \"precision\": \"" << (fast ? "fast" : "default") << "\"";
        if (!method_tag.empty()) os << ", \"method\": \"" << method_tag << "\"";
        os << ", \"data\": ";
    }
};

struct GridSpec {
    double start = 0.0, stop = 0.0;
    int npoints = 0;
    bool geometric = false;

    std::vector<XReal> points() const {
        std::vector<XReal> pts;
        if (npoints == 1) {
            pts.emplace_back(start);
            return pts;
        }
        for (int i = 0; i < npoints; ++i) {
            double f = static_cast<double>(i) / (npoints - 1);
            double v = geometric ? start * std::pow(stop / start, f)
                                 : start + (stop - start) * f;
            pts.emplace_back(v);
        }
        return pts;
    }
};

GridSpec parse_grid(const std::string& text, bool geometric) {
    GridSpec g;
    g.geometric = geometric;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> g.start >> c1 >> g.stop >> c2 >> g.npoints) || c1 != ':' || c2 != ':' ||
        g.npoints < 1 || (geometric && (g.start <= 0.0 || g.stop <= 0.0)))
        throw CLI::ValidationError("--grid expects start:stop:npoints, got " + text);
    return g;
}

PrecisionConfig make_cfg(bool fast) {
    return fast ? PrecisionConfig::fast() : PrecisionConfig{};
}

SieveLimits sieve_limits() {
    SieveLimits lim;
    if (const char* env = std::getenv("DICKMAN_MAX_X")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) lim.max_x = v;
    }
    return lim;
}

void emit_rows(const OutputEnvelope& env, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream file;
    std::ostream& os = env.open(file);
    if (env.format == "json") {
        env.json_head(os);
        std::vector<std::string> cols;
        std::istringstream hs(header);
        std::string col;
        while (std::getline(hs, col, ',')) cols.push_back(col);
        os << "[";
        for (size_t r = 0; r < rows.size(); ++r) {
            os << (r ? ",\n " : "\n ") << "{";
            for (size_t c = 0; c < cols.size(); ++c)
                os << (c ? ", " : "") << "\"" << cols[c] << "\": \"" << rows[r][c] << "\"";
            os << "}";
        }
        os << "\n]}\n";
    } else {
        env.csv_metadata(os);
        os << header << '\n';
        for (const auto& row : rows) {
            for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
            os << '\n';
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{std::string(kToolName) + ": Dickman function laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    OutputEnvelope env;
    app.add_option("--format", env.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", env.destination, "Write to a file instead of stdout");
    app.add_flag("--fast", env.fast,
                 "Loose exploration profile (low-order quadrature, loose tolerances); "
                 "accuracy promises are voided");

    // constants
    auto* c_cmd = app.add_subcommand("constants", "Dickman constants C_k and D_k");
    int c_kmax = 8;
    std::string c_method = "zeta";
    double c_T = 1e6, c_c = 1.0, c_delta = 1e-3, c_xmax = 60.0, c_tailtol = 1e300;
    int c_nmax = 64;
    c_cmd->add_option("--kmax", c_kmax, "Largest k")->check(CLI::NonNegativeNumber);
    c_cmd->add_option("--method", c_method, "zeta | hankel | vertical")
        ->check(CLI::IsMember({"zeta", "hankel", "vertical"}));
    c_cmd->add_option("--T", c_T, "Vertical truncation height");
    c_cmd->add_option("--c", c_c, "Vertical line Re s");
    c_cmd->add_option("--delta", c_delta, "Hankel loop radius");
    c_cmd->add_option("--xmax", c_xmax, "Hankel ray truncation");
    c_cmd->add_option("--tail-tol", c_tailtol, "Reject runs whose tail estimate exceeds this");
    c_cmd->add_option("--nmax", c_nmax, "Zeta table size for the zeta route");

    // rho
    auto* r_cmd = app.add_subcommand("rho", "Dickman function rho(u)");
    double r_u = 2.0;
    std::string r_grid, r_method = "steps", r_save, r_load;
    double r_umax = 10.0;
    r_cmd->add_option("--u", r_u, "Evaluation point");
    r_cmd->add_option("--grid", r_grid, "start:stop:npoints (linear)");
    r_cmd->add_option("--method", r_method, "steps | series")
        ->check(CLI::IsMember({"steps", "series"}));
    r_cmd->add_option("--umax", r_umax, "Spline build limit");
    r_cmd->add_option("--save-spline", r_save, "Persist the spline (RHOSPLINE v1)");
    r_cmd->add_option("--load-spline", r_load, "Evaluate a persisted spline");

    // ik
    auto* i_cmd = app.add_subcommand("ik", "Iterated integral I_k(u)");
    int i_k = 2;
    double i_u = 3.0;
    std::string i_grid;
    i_cmd->add_option("--k", i_k, "Order k")->check(CLI::NonNegativeNumber);
    i_cmd->add_option("--u", i_u, "Evaluation point");
    i_cmd->add_option("--grid", i_grid, "start:stop:npoints (linear)");

    // polylog
    auto* p_cmd = app.add_subcommand("polylog", "Dickman polylogarithm L_k(t)");
    int p_k = 2;
    double p_t = 0.25;
    std::string p_method = "from-ik";
    long long p_budget = 20000000;
    p_cmd->add_option("--k", p_k, "Order k")->check(CLI::NonNegativeNumber);
    p_cmd->add_option("--t", p_t, "Evaluation point");
    p_cmd->add_option("--method", p_method, "recursion | from-ik")
        ->check(CLI::IsMember({"recursion", "from-ik"}));
    p_cmd->add_option("--budget", p_budget, "Integrand evaluation budget for the recursion");

    // expand
    auto* e_cmd = app.add_subcommand("expand", "Asymptotic expansion reports");
    int e_k = 2;
    std::string e_grid = "10:10000:4", e_form = "ik";
    e_cmd->add_option("--k", e_k, "Order k")->check(CLI::NonNegativeNumber);
    e_cmd->add_option("--grid", e_grid, "start:stop:npoints (geometric in u)");
    e_cmd->add_option("--form", e_form, "ik | lk")->check(CLI::IsMember({"ik", "lk"}));

    // perron
    auto* pe_cmd = app.add_subcommand("perron", "Truncated Perron integral");
    double pe_lambda = 1.0, pe_c = 1.0, pe_T = 1e4;
    pe_cmd->add_option("--lambda", pe_lambda, "Exponent sign parameter");
    pe_cmd->add_option("--c", pe_c, "Line Re s = c");
    pe_cmd->add_option("--T", pe_T, "Truncation height");

    // sieve
    auto* s_cmd = app.add_subcommand("sieve", "Smooth-number counts Psi(x, x^{1/u})");
    std::uint64_t s_x = 10000000;
    double s_u = 2.0;
    s_cmd->add_option("--x", s_x, "Upper limit");
    s_cmd->add_option("--u", s_u, "Smoothness parameter");

    // almostprime
    auto* a_cmd = app.add_subcommand("almostprime", "Counts of n with at most k prime factors");
    std::uint64_t a_x = 1000000;
    int a_k = 2;
    a_cmd->add_option("--x", a_x, "Upper limit");
    a_cmd->add_option("--k", a_k, "Factor bound")->check(CLI::PositiveNumber);

    // ramanujan
    auto* ra_cmd = app.add_subcommand("ramanujan", "Ramanujan nested integrals");
    int ra_j = 2;
    double ra_eps = 0.4;
    int ra_depth = -1;
    std::uint64_t ra_checkx = 0;
    ra_cmd->add_option("--j", ra_j, "Nesting depth for a single term");
    ra_cmd->add_option("--epsilon", ra_eps, "Lower limit epsilon");
    ra_cmd->add_option("--depth", ra_depth, "Alternating-sum depth (enables the sum)");
    ra_cmd->add_option("--check-x", ra_checkx, "Compare the sum with the sieve at this x");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "Run every module invariant");
    std::uint64_t v_seed = 20260811;
    v_cmd->add_option("--seed", v_seed, "Seed for randomized invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    PrecisionConfig cfg = make_cfg(env.fast);

    if (c_cmd->parsed()) {
        CoeffTable table;
        if (c_method == "zeta") {
            table = constants_from_zeta(c_kmax, c_nmax == 64 ? ZetaTable::shared()
                                                             : ZetaTable(c_nmax));
        } else {
            ContourSpec spec = c_method == "vertical"
                                   ? ContourSpec::vertical(XReal(c_c), XReal(c_T))
                                   : ContourSpec::hankel(XReal(c_delta), XReal(c_xmax));
            table = constants_from_contour(c_kmax, spec, cfg, XReal(c_tailtol));
        }
        env.method_tag = method_name(table.method);
        std::vector<std::vector<std::string>> rows;
        for (int k = 0; k <= table.k_max; ++k)
            rows.push_back({std::to_string(k), to_string(table.C[static_cast<size_t>(k)]),
                            to_string(table.D[static_cast<size_t>(k)]),
                            method_name(table.method),
                            to_string(table.err_bound[static_cast<size_t>(k)])});
        emit_rows(env, "k,C_k,D_k,method,err_bound", rows);
        return 0;
    }

    if (r_cmd->parsed()) {
        env.method_tag = r_method;
        std::vector<XReal> pts;
        if (!r_grid.empty())
            pts = parse_grid(r_grid, false).points();
        else
            pts.emplace_back(r_u);
        double top = to_double(pts.back());
        for (const XReal& p : pts) top = std::max(top, to_double(p));

        std::vector<std::vector<std::string>> rows;
        if (r_method == "steps" || !r_load.empty()) {
            RhoSpline spline = [&] {
                if (!r_load.empty()) {
                    std::ifstream in(r_load);
                    if (!in) throw DomainError("cannot open spline file " + r_load);
                    return RhoSpline::load(in);
                }
                return rho_steps(XReal(std::max(r_umax, top)), cfg,
                                 env.fast ? 12 : RhoSpline::kDefaultDegree);
            }();
            if (!r_save.empty()) {
                std::ofstream out(r_save);
                if (!out) throw DomainError("cannot open spline file " + r_save);
                spline.save(out);
            }
            for (const XReal& u : pts)
                rows.push_back({to_string(u), to_string(spline(u)), spline.method()});
        } else {
            int k_top = static_cast<int>(std::floor(top));
            IkEvaluator ev(std::max(1, k_top), XReal(top + 1.0), cfg);
            for (const XReal& u : pts)
                rows.push_back({to_string(u), to_string(rho_series(u, cfg, &ev)), "series"});
        }
        emit_rows(env, "u,rho,method", rows);
        return 0;
    }

    if (i_cmd->parsed()) {
        std::vector<XReal> pts;
        if (!i_grid.empty())
            pts = parse_grid(i_grid, false).points();
        else
            pts.emplace_back(i_u);
        double top = 0.0;
        for (const XReal& p : pts) top = std::max(top, to_double(p));
        IkEvaluator ev(i_k, XReal(top + 1.0), cfg);
        std::vector<std::vector<std::string>> rows;
        for (const XReal& u : pts)
            rows.push_back({std::to_string(i_k), to_string(u), to_string(ev.value(i_k, u))});
        emit_rows(env, "k,u,value", rows);
        return 0;
    }

    if (p_cmd->parsed()) {
        env.method_tag = p_method;
        PolylogMethod m =
            p_method == "recursion" ? PolylogMethod::recursion : PolylogMethod::from_ik;
        XReal v = dickman_polylog(p_k, XReal(p_t), m, cfg, p_budget);
        emit_rows(env, "k,t,value,method",
                  {{std::to_string(p_k), to_string(XReal(p_t)), to_string(v), p_method}});
        return 0;
    }

    if (e_cmd->parsed()) {
        std::vector<XReal> grid = parse_grid(e_grid, true).points();
        CoeffTable table = constants_from_zeta(std::max(e_k, 2), ZetaTable::shared());
        double top = to_double(grid.back());
        IkEvaluator ev(e_k, XReal(top + 1.0), cfg);
        std::vector<ExpansionReport> reports;
        if (e_form == "ik") {
            for (const XReal& u : grid) reports.push_back(expand_ik(e_k, u, table, ev));
        } else {
            for (const XReal& u : grid)
                reports.push_back(expand_lk(e_k, XReal(1.0) / u, table, ev));
        }
        std::ofstream file;
        std::ostream& os = env.open(file);
        if (env.format == "json") {
            env.json_head(os);
            write_reports_json(os, reports);
            os << "}\n";
        } else {
            env.csv_metadata(os);
            write_reports_csv(os, reports);
        }
        return 0;
    }

    if (pe_cmd->parsed()) {
        PerronResult r = perron(XReal(pe_lambda), XReal(pe_c), XReal(pe_T), cfg);
        emit_rows(env, "lambda,c,T,value,im_abs,trunc_bound",
                  {{to_string(r.lambda), to_string(r.c), to_string(r.T), to_string(r.value),
                    to_string(r.im_abs), to_string(r.trunc_bound)}});
        return 0;
    }

    if (s_cmd->parsed()) {
        SieveResult r = smooth_count(s_x, XReal(s_u), sieve_limits());
        RhoSpline spline = rho_steps(XReal(std::max(2.0, std::ceil(s_u))), cfg,
                                     env.fast ? 12 : RhoSpline::kDefaultDegree);
        XReal rho_u = spline(XReal(s_u));
        std::ofstream file;
        std::ostream& os = env.open(file);
        if (env.format == "json") {
            env.json_head(os);
            os << "[{\"x\": " << r.x << ", \"y\": " << r.y << ", \"count\": " << r.count
               << ", \"ratio\": \"" << to_string(r.ratio) << "\", \"rho_u\": \""
               << to_string(rho_u) << "\", \"abs_diff\": \"" << to_string(abs(r.ratio - rho_u))
               << "\"}]}\n";
        } else {
            env.csv_metadata(os);
            write_sieve_csv(os, r, rho_u);
        }
        return 0;
    }

    if (a_cmd->parsed()) {
        AlmostPrimeResult r = almost_prime_count(a_x, a_k, sieve_limits());
        emit_rows(env, "x,k,count_omega,count_Omega,landau_value",
                  {{std::to_string(r.x), std::to_string(r.k), std::to_string(r.count_omega),
                    std::to_string(r.count_Omega), to_string(r.landau_value)}});
        return 0;
    }

    if (ra_cmd->parsed()) {
        if (ra_checkx > 0) {
            int depth = ra_depth >= 0 ? ra_depth : ra_j;
            RamanujanCheck c =
                ramanujan_phi_check(ra_checkx, XReal(ra_eps), depth, cfg, sieve_limits());
            emit_rows(env, "x,epsilon,depth,sieve_ratio,ramanujan_sum,abs_diff",
                      {{std::to_string(c.x), to_string(c.epsilon), std::to_string(c.depth),
                        to_string(c.sieve_ratio), to_string(c.ramanujan_value),
                        to_string(abs(c.sieve_ratio - c.ramanujan_value))}});
        } else if (ra_depth >= 0) {
            XReal s = ramanujan_sum(XReal(ra_eps), ra_depth, cfg);
            emit_rows(env, "epsilon,depth,ramanujan_sum",
                      {{to_string(XReal(ra_eps)), std::to_string(ra_depth), to_string(s)}});
        } else {
            RamanujanTerm t = ramanujan_term(ra_j, XReal(ra_eps), cfg);
            emit_rows(env, "j,epsilon,value",
                      {{std::to_string(t.depth), to_string(t.epsilon), to_string(t.value)}});
        }
        return 0;
    }

    if (v_cmd->parsed()) {
        VerifyOptions opt;
        opt.seed = v_seed;
        opt.fast = env.fast;
        int failures = run_verify(std::cout, opt);
        return failures == 0 ? 0 : 2;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dickman::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
