#include "abreu/estimates.hpp"

#include "abreu/convex_calculus.hpp"
#include "abreu/errors.hpp"
#include "abreu/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abreu {

namespace {

constexpr const char* kModule = "estimates_verifier";
constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json num(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

nlohmann::json EstimateReport::to_json() const
{
    nlohmann::json j;
    j["check"] = check;
    j["hypotheses"] = hypotheses;
    j["observed"] = num(observed);
    j["bound"] = num(bound);
    j["verdict"] = verdict_name(verdict);
    j["details"] = details;
    return j;
}

double d1_constant(double Kmax, double diam, int n)
{
    if (!(Kmax > 0) || !(diam > 0) || n < 1) throw Error(ErrorKind::InvalidArgument, kModule, "d1 needs Kmax > 0, diam > 0, n >= 1");
    return std::pow(4.0 * Kmax * diam * diam / n, -double(n));
}

EstimateReport check_det_lower(const GridFunction& u, const GridFunction& K)
{
    EstimateReport R;
    R.check = "det-lower";
    const double kmin = K.min(), kmax = K.max();
    const int n = u.grid().dim();
    const double diam = u.grid().domain().diameter();
    R.details["K_min"] = kmin;
    R.details["K_max"] = kmax;
    if (!(kmin > 0)) {
        R.hypotheses = "unmet: K must be positive";
        R.verdict = Verdict::NotApplicable;
        return R;
    }
    R.bound = d1_constant(kmax, diam, n);
    HessianField H = hessian_field(u);
    R.observed = kInf;
    for (std::size_t k = 0; k < u.size(); ++k) R.observed = std::min(R.observed, H.det(k));
    R.details["slack"] = 0.9;
    R.verdict = R.observed >= 0.9 * R.bound ? Verdict::Pass : Verdict::Fail;
    return R;
}

EstimateReport check_det_upper_section(const GridFunction& u, std::size_t p, double C, double b)
{
    EstimateReport R;
    R.check = "det-upper-section";
    Section S = section(u, p, C);
    if (!S.compact) throw Error(ErrorKind::SectionNotCompact, kModule, "closed section {u <= C} reaches the boundary");
    double grad2 = 0.0;
    for (auto k : S.nodes) grad2 = std::max(grad2, gradient_point(u, k).squaredNorm());
    R.details["C"] = C;
    R.details["b"] = b;
    R.details["max_grad_sq"] = grad2;
    if (grad2 > b) {
        R.hypotheses = "unmet: |grad u|^2 exceeds b on the section";
        R.verdict = Verdict::NotApplicable;
        return R;
    }
    HessianField H = hessian_field(u);
    R.observed = 0.0;
    std::size_t count = 0;
    for (auto k : S.nodes)
        if (u[k] < 0.5 * C) {
            R.observed = std::max(R.observed, H.det(k));
            ++count;
        }
    R.details["nodes"] = count;
    R.bound = std::numeric_limits<double>::quiet_NaN();
    R.verdict = std::isfinite(R.observed) && count > 0 ? Verdict::Pass : Verdict::Fail;
    return R;
}

EstimateReport refinement_stability(const std::vector<EstimateReport>& reports, double rel)
{
    EstimateReport R;
    R.check = reports.empty() ? "refinement" : reports.front().check + "-refinement";
    nlohmann::json obs = nlohmann::json::array();
    bool all_pass = !reports.empty();
    for (const auto& r : reports) {
        obs.push_back(num(r.observed));
        all_pass = all_pass && r.verdict == Verdict::Pass;
    }
    R.details["observed"] = obs;
    R.details["tolerance"] = rel;
    if (reports.size() < 2) {
        R.verdict = Verdict::NotApplicable;
        R.hypotheses = "unmet: needs at least two grids";
        return R;
    }
    double a = reports[reports.size() - 2].observed, c = reports.back().observed;
    R.observed = std::abs(c / a - 1.0);
    R.bound = rel;
    R.verdict = all_pass && R.observed <= rel ? Verdict::Pass : Verdict::Fail;
    return R;
}

EstimateReport weighted_det_functional(const GridFunction& u, std::size_t p, double C, double d)
{
    EstimateReport R;
    R.check = "weighted-det";
    Section S = section(u, p, C);
    if (!S.compact) throw Error(ErrorKind::SectionNotCompact, kModule, "section {u <= C} reaches the boundary");
    const int n = u.grid().dim();
    const Point base = u.grid().position(p);
    std::vector<Point> xs;
    for (auto k : S.nodes) xs.push_back(gradient_point(u, k));
    std::vector<double> f = conjugate_at(u, xs, base);
    HessianField H = hessian_field(u);
    R.observed = 0.0;
    double at_p = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < S.nodes.size(); ++i) {
        std::size_t k = S.nodes[i];
        double den = d + f[i];
        if (!(den > 0)) throw Error(ErrorKind::NonPositiveDenominator, kModule, "d + f <= 0");
        double v = std::exp(-4.0 * C / (C - u[k])) * H.det(k) / std::pow(den, 2 * n);
        R.observed = std::max(R.observed, v);
        if (k == p) at_p = v;
    }
    R.details["C"] = C;
    R.details["d"] = d;
    R.details["value_at_p"] = num(at_p);
    R.details["nodes"] = S.nodes.size();
    R.bound = std::numeric_limits<double>::quiet_NaN();
    R.verdict = std::isfinite(R.observed) ? Verdict::Pass : Verdict::Fail;
    return R;
}

EstimateReport weighted_det_2d(const GridFunction& u, double r, double d)
{
    EstimateReport R;
    R.check = "weighted-det-2d";
    const Grid& g = u.grid();
    if (g.dim() != 2) throw Error(ErrorKind::InvalidArgument, kModule, "needs a 2-D grid");
    if (g.domain().signed_distance(Point::Zero()) < r) throw Error(ErrorKind::DiskNotContained, kModule, "D_r(0) is not inside the domain");
    std::vector<std::size_t> nodes;
    std::vector<Point> xs;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (g.position(k).norm() < r) {
            nodes.push_back(k);
            xs.push_back(gradient_point(u, k));
        }
    std::vector<double> f = conjugate_at(u, xs, Point::Zero());
    HessianField H = hessian_field(u);
    R.observed = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double den = d + f[i];
        if (!(den > 0)) throw Error(ErrorKind::NonPositiveDenominator, kModule, "d + f <= 0");
        double q = r * r - g.position(nodes[i]).squaredNorm();
        R.observed = std::max(R.observed, q * q * H.det(nodes[i]) / std::pow(den, 4));
    }
    R.details["r"] = r;
    R.details["d"] = d;
    R.details["nodes"] = nodes.size();
    R.bound = std::numeric_limits<double>::quiet_NaN();
    R.verdict = std::isfinite(R.observed) ? Verdict::Pass : Verdict::Fail;
    return R;
}

EstimateReport cone_gradient_bound(const GridFunction& u, double t)
{
    if (!(t > 0)) throw Error(ErrorKind::OutOfRange, kModule, "t must be positive");
    EstimateReport R;
    R.check = "cone-gradient";
    const Grid& g = u.grid();
    for (std::size_t k = 0; k < g.size(); ++k)
        if (g.touches_boundary(k)) R.observed = std::max(R.observed, gradient_point(u, k).norm());
    R.bound = g.domain().circumradius() * std::pow(1.0 / t, 1.0 / g.dim());
    R.details["t"] = t;
    R.verdict = R.observed <= R.bound ? Verdict::Pass : Verdict::Fail;
    return R;
}

namespace {

EstimateReport fit_b1(const GridFunction& u, double alpha, const char* name, const std::function<double(const Point&)>& dist)
{
    const int n = u.grid().dim();
    if (alpha < 0.0 || alpha >= 1.0 / (2.0 * (n + 1)))
        throw Error(ErrorKind::OutOfRange, kModule, "alpha must lie in [0, 1/(2(n+1)))");
    EstimateReport R;
    R.check = name;
    HessianField H = hessian_field(u);
    R.observed = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        double det = H.det(k);
        if (!(det > 0)) {
            R.observed = kInf;
            break;
        }
        R.observed = std::max(R.observed, 1.0 / (det * std::pow(dist(u.grid().position(k)), alpha)));
    }
    R.details["alpha"] = alpha;
    R.bound = std::numeric_limits<double>::quiet_NaN();
    R.verdict = std::isfinite(R.observed) && R.observed > 0 ? Verdict::Pass : Verdict::Fail;
    return R;
}

}  // namespace

EstimateReport boundary_det_lower(const GridFunction& u, double alpha)
{
    const ConvexDomain& D = u.grid().domain();
    return fit_b1(u, alpha, "boundary-det", [&D](const Point& p) { return D.signed_distance(p); });
}

EstimateReport boundary_det_lower_polytope(const GridFunction& u, double alpha)
{
    const ConvexDomain& D = u.grid().domain();
    if (!D.is_polytope()) throw Error(ErrorKind::InvalidArgument, kModule, "needs a polytope");
    return fit_b1(u, alpha, "boundary-det-polytope", [&D](const Point& p) {
        double prod = 1.0;
        for (double l : D.facet_values(p)) prod *= l;
        return prod;
    });
}

EstimateReport uniform_osc_bound(const TTrace& trace, double rel)
{
    EstimateReport R;
    R.check = "osc-bound";
    nlohmann::json o = nlohmann::json::array();
    for (const auto& e : trace.entries) o.push_back(e.osc);
    R.details["osc"] = o;
    R.details["tolerance"] = rel;
    if (trace.entries.empty()) {
        R.verdict = Verdict::NotApplicable;
        R.hypotheses = "unmet: empty trace";
        return R;
    }
    std::size_t first = trace.entries.size() >= 3 ? trace.entries.size() - 3 : 0;
    double lo = kInf, hi = 0.0;
    for (std::size_t i = first; i < trace.entries.size(); ++i) {
        lo = std::min(lo, trace.entries[i].osc);
        hi = std::max(hi, trace.entries[i].osc);
    }
    R.observed = (hi - lo) / hi;
    R.bound = rel;
    R.details["d4_proxy"] = hi;
    R.verdict = R.observed <= rel ? Verdict::Pass : Verdict::Fail;
    return R;
}

EstimateReport compare_subsolution(const GridFunction& a, const GridFunction& b, const std::vector<std::size_t>& inner,
                                   const std::vector<std::size_t>& rim, double tol)
{
    if (a.grid_ptr() != b.grid_ptr()) throw Error(ErrorKind::InvalidArgument, kModule, "fields live on different grids");
    EstimateReport R;
    R.check = "comparison";
    double det_margin = kInf, rim_margin = kInf, inner_margin = kInf;
    for (auto k : inner) {
        double da = discrete_hessian(a, k).determinant(), db = discrete_hessian(b, k).determinant();
        det_margin = std::min(det_margin, (da - db) / std::max(1.0, std::abs(db)));
        inner_margin = std::min(inner_margin, b[k] - a[k]);
    }
    for (auto k : rim) rim_margin = std::min(rim_margin, b[k] - a[k]);
    R.details["det_margin"] = num(det_margin);
    R.details["rim_margin"] = num(rim_margin);
    R.details["inner_nodes"] = inner.size();
    R.observed = inner_margin;
    R.bound = -tol;
    if (det_margin < -tol || rim_margin < -tol) {
        R.hypotheses = det_margin < -tol ? "unmet: det D^2 a < det D^2 b somewhere" : "unmet: a > b on the rim";
        R.verdict = Verdict::NotApplicable;
        return R;
    }
    R.verdict = inner_margin >= -tol ? Verdict::Pass : Verdict::Fail;
    return R;
}

}  // namespace abreu
