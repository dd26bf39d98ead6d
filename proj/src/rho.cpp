#include "dickman/rho.hpp"
#include "dickman/chebyshev.hpp"
#include "dickman/errors.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <optional>
#include <sstream>

namespace dickman {

namespace {

size_t interval_index(const XReal& u, size_t count) {
    double n = std::floor(to_double(u));
    if (n < 0.0) throw OutOfRange("rho(u) needs u >= 0, got " + to_string(u));
    size_t idx = static_cast<size_t>(n);
    if (idx >= count) {
        if (u == XReal(static_cast<double>(count))) return count - 1; // right endpoint
        throw OutOfRange("rho spline covers [0, " + std::to_string(count) + "], got u = " +
                         to_string(u));
    }
    return idx;
}

std::vector<XReal> constant_one(int degree) {
    std::vector<XReal> c(static_cast<size_t>(degree) + 1);
    c[0] = XReal(1.0);
    return c;
}

} // namespace

XReal RhoSpline::operator()(const XReal& u) const {
    size_t n = interval_index(u, intervals_.size());
    return cheb_eval(intervals_[n], XReal(static_cast<double>(n)),
                     XReal(static_cast<double>(n + 1)), u);
}

XReal RhoSpline::derivative(const XReal& u) const {
    size_t n = interval_index(u, intervals_.size());
    XReal a(static_cast<double>(n)), b(static_cast<double>(n + 1));
    return cheb_eval(cheb_derivative(intervals_[n], a, b), a, b, u);
}

RhoSpline rho_steps(const XReal& u_max, const PrecisionConfig& cfg, int degree) {
    cfg.validate();
    if (!(u_max >= XReal(1.0))) throw DomainError("rho_steps needs u_max >= 1");
    if (degree < 4) throw DomainError("rho spline degree must be >= 4");

    RhoSpline s;
    s.u_max_ = u_max;
    s.degree_ = degree;
    s.method_ = "steps";
    s.intervals_.push_back(constant_one(degree)); // rho = 1 on [0, 1]

    const int n_last = static_cast<int>(std::floor(to_double(u_max)));
    for (int n = 1; n <= n_last; ++n) {
        const std::vector<XReal>& prev = s.intervals_.back();
        XReal pa(static_cast<double>(n - 1)), pb(static_cast<double>(n));
        XReal rho_n = cheb_eval(prev, pa, pb, pb); // rho(n) from the finished interval
        auto f = [&](const XReal& t) { return cheb_eval(prev, pa, pb, t - 1.0) / t; };

        // cumulative quadrature between consecutive Chebyshev nodes
        std::vector<XReal> pts =
            cheb_points(degree + 1, XReal(static_cast<double>(n)), XReal(static_cast<double>(n + 1)));
        std::vector<XReal> vals(pts.size());
        std::vector<XReal> coef;
        try {
            XReal acc(0.0);
            XReal prev_pt(static_cast<double>(n));
            for (size_t i = 0; i < pts.size(); ++i) {
                acc += integrate(f, prev_pt, pts[i], cfg);
                prev_pt = pts[i];
                vals[i] = rho_n - acc;
            }
            coef = cheb_fit(vals);
        } catch (const Error& e) {
            throw Error(std::string(e.what()) + " while building rho on interval " +
                        std::to_string(n));
        }
        // the polynomial must reproduce fresh quadrature samples to 1e-18
        // (scaled up only when the caller loosened abs_tol past that regime)
        double check_tol = to_double(cfg.abs_tol) <= 1e-17 ? 1e-18 : 8.0 * to_double(cfg.abs_tol);
        std::vector<XReal> check = cheb_points(degree + 2, XReal(static_cast<double>(n)),
                                               XReal(static_cast<double>(n + 1)));
        for (const XReal& u : check) {
            XReal direct = rho_n - integrate(f, XReal(static_cast<double>(n)), u, cfg);
            XReal fitted = cheb_eval(coef, XReal(static_cast<double>(n)),
                                     XReal(static_cast<double>(n + 1)), u);
            if (std::fabs(to_double(fitted - direct)) > check_tol * std::max(1.0, std::fabs(direct.hi)))
                throw Error("rho interval " + std::to_string(n) +
                            " polynomial failed to reproduce quadrature samples");
        }
        s.intervals_.push_back(std::move(coef));
    }
    return s;
}

XReal rho_series(const XReal& u, const PrecisionConfig& cfg, const IkEvaluator* ik) {
    if (!(u >= XReal(0.0))) throw DomainError("rho_series needs u >= 0");
    int k_top = static_cast<int>(std::floor(to_double(u)));
    if (XReal(static_cast<double>(k_top)) >= u && k_top > 0) --k_top; // I_k(u) = 0 at k = u
    if (k_top == 0) return XReal(1.0);
    std::optional<IkEvaluator> local;
    const IkEvaluator* ev = ik;
    if (!ev) {
        local.emplace(k_top, u + 0.5, cfg);
        ev = &*local;
    }
    XReal sum(1.0); // k = 0 term
    XReal fact(1.0);
    for (int k = 1; k <= k_top; ++k) {
        fact *= static_cast<double>(k);
        XReal term = ev->value(k, u) / fact;
        sum += (k & 1) ? -term : term;
    }
    return sum;
}

RhoSpline rho_series_spline(const XReal& u_max, const PrecisionConfig& cfg, int degree) {
    cfg.validate();
    if (!(u_max >= XReal(1.0))) throw DomainError("rho_series_spline needs u_max >= 1");
    const int n_last = static_cast<int>(std::floor(to_double(u_max)));
    IkEvaluator ev(n_last + 1, XReal(static_cast<double>(n_last + 1)) + 0.5, cfg);

    RhoSpline s;
    s.u_max_ = u_max;
    s.degree_ = degree;
    s.method_ = "series";
    s.intervals_.push_back(constant_one(degree));
    for (int n = 1; n <= n_last; ++n) {
        std::vector<XReal> pts = cheb_points(degree + 1, XReal(static_cast<double>(n)),
                                             XReal(static_cast<double>(n + 1)));
        std::vector<XReal> vals(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) vals[i] = rho_series(pts[i], cfg, &ev);
        s.intervals_.push_back(cheb_fit(vals));
    }
    return s;
}

void RhoSpline::save(std::ostream& os) const {
    os << "RHOSPLINE v1\n";
    for (size_t n = 0; n < intervals_.size(); ++n) {
        os << n << ' ' << degree_;
        for (const XReal& c : intervals_[n]) os << ' ' << to_string(c);
        os << '\n';
    }
}

RhoSpline RhoSpline::load(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "RHOSPLINE v1")
        throw FormatError("missing RHOSPLINE v1 header");
    RhoSpline s;
    s.method_ = "steps";
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        size_t n = 0;
        int d = 0;
        if (!(ls >> n >> d) || d < 1) throw FormatError("bad spline interval line: " + line);
        if (n != s.intervals_.size())
            throw FormatError("spline intervals out of order at n = " + std::to_string(n));
        std::vector<XReal> coef;
        std::string tok;
        while (ls >> tok) coef.push_back(parse_xreal(tok));
        if (static_cast<int>(coef.size()) != d + 1)
            throw FormatError("expected " + std::to_string(d + 1) + " coefficients, got " +
                              std::to_string(coef.size()));
        s.degree_ = d;
        s.intervals_.push_back(std::move(coef));
    }
    if (s.intervals_.empty()) throw FormatError("spline file has no intervals");
    s.u_max_ = XReal(static_cast<double>(s.intervals_.size()));
    // knot continuity
    for (size_t n = 1; n < s.intervals_.size(); ++n) {
        XReal left = cheb_eval(s.intervals_[n - 1], XReal(static_cast<double>(n - 1)),
                               XReal(static_cast<double>(n)), XReal(static_cast<double>(n)));
        XReal right = cheb_eval(s.intervals_[n], XReal(static_cast<double>(n)),
                                XReal(static_cast<double>(n + 1)), XReal(static_cast<double>(n)));
        if (std::fabs(to_double(left - right)) > 1e-16)
            throw FormatError("continuity violated at knot u = " + std::to_string(n));
    }
    return s;
}

XReal FView::operator()(const XReal& alpha) const {
    if (!(alpha > XReal(0.0))) throw DomainError("F(alpha) needs alpha > 0");
    if (alpha >= XReal(1.0)) return XReal(1.0);
    XReal u = XReal(1.0) / alpha;
    if (u > spline_->u_max() && u > spline_->cover())
        throw OutOfRange("1/alpha = " + to_string(u) + " exceeds the spline range");
    return (*spline_)(u);
}

XReal FView::derivative(const XReal& alpha) const {
    if (!(alpha > XReal(0.0))) throw DomainError("F'(alpha) needs alpha > 0");
    if (alpha >= XReal(1.0)) return XReal(0.0);
    XReal u = XReal(1.0) / alpha;
    return -spline_->derivative(u) / (alpha * alpha);
}

} // namespace dickman
