#include "abreu/barriers.hpp"

#include "abreu/convex_calculus.hpp"
#include "abreu/errors.hpp"
#include "abreu/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abreu {

namespace {
constexpr const char* kModule = "estimates_verifier";
constexpr double kInf = std::numeric_limits<double>::infinity();

double min_eig2(const Eigen::Matrix2d& H, int n)
{
    if (n == 1) return H(0, 0);
    double m = 0.5 * (H(0, 0) + H(1, 1));
    return m - std::hypot(0.5 * (H(0, 0) - H(1, 1)), H(0, 1));
}
}  // namespace

double product_power(const std::vector<double>& y, double alpha)
{
    double p = 1.0;
    for (double v : y) p *= v;
    return -std::pow(p, alpha);
}

Eigen::MatrixXd product_power_hessian(const std::vector<double>& y, double alpha)
{
    const double g = product_power(y, alpha);
    const int k = int(y.size());
    Eigen::MatrixXd G(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            G(a, b) = a == b ? -alpha * (1 - alpha) * g / (y[a] * y[a]) : alpha * alpha * g / (y[a] * y[b]);
    return G;
}

double principal_minor_closed_form(const std::vector<double>& y, double alpha)
{
    double p = 1.0;
    for (double v : y) p *= v;
    const double k = double(y.size());
    return std::pow(2.0, -k) * (1.0 - 2.0 * k * alpha) / (p * p);
}

double principal_minor_direct(const std::vector<double>& y, double alpha)
{
    const int k = int(y.size());
    Eigen::MatrixXd M(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) M(a, b) = ((a == b ? 0.5 : 0.0) - alpha) / (y[a] * y[b]);
    return M.determinant();
}

double quadratic_form_margin(const std::vector<double>& y, const std::vector<double>& h, double alpha)
{
    Eigen::MatrixXd G = product_power_hessian(y, alpha);
    Eigen::VectorXd hv = Eigen::Map<const Eigen::VectorXd>(h.data(), Eigen::Index(h.size()));
    double lhs = hv.dot(G * hv);
    double s = 0.0;
    for (std::size_t a = 0; a < y.size(); ++a) s += h[a] * h[a] / (y[a] * y[a]);
    return lhs - (-alpha * product_power(y, alpha) / 2.0) * s;
}

double polytope_alpha_limit(const ConvexDomain& P)
{
    if (!P.is_polytope()) throw Error(ErrorKind::InvalidArgument, kModule, "needs a polytope");
    const double d = double(P.facets().size());
    return std::min(1.0 / (2.0 * d), 2.0 * P.vertex_ratio() / P.dim());
}

double polytope_barrier_value(const ConvexDomain& P, const Point& xi, double alpha)
{
    return product_power(P.facet_values(xi), alpha);
}

Eigen::Matrix2d polytope_barrier_hessian(const ConvexDomain& P, const Point& xi, double alpha)
{
    std::vector<double> y = P.facet_values(xi);
    Eigen::MatrixXd G = product_power_hessian(y, alpha);
    Eigen::Matrix2d H = Eigen::Matrix2d::Zero();
    const auto& F = P.facets();
    for (std::size_t a = 0; a < F.size(); ++a)
        for (std::size_t b = 0; b < F.size(); ++b) H += G(Eigen::Index(a), Eigen::Index(b)) * F[a].normal * F[b].normal.transpose();
    return H;
}

PolytopeBarrierReport polytope_barrier(const ConvexDomain& P, double alpha, double h)
{
    PolytopeBarrierReport out;
    out.alpha = alpha;
    out.alpha_limit = polytope_alpha_limit(P);
    if (!(alpha > 0.0) || alpha >= out.alpha_limit)
        throw Error(ErrorKind::OutOfRange, kModule, "alpha must lie in (0, min(1/(2d), 2L/n))");
    const int n = P.dim();
    out.exponent = 2.0 * P.vertex_ratio() - n * alpha;
    GridPtr g = build_grid(P, h);
    GridFunction u = GridFunction::sample(g, [&P, alpha](const Point& x) {
        std::vector<double> y = P.facet_values(x);
        for (double& v : y) v = std::max(v, 0.0);
        return product_power(y, alpha);
    });
    HessianField D = hessian_field(u);
    out.min_eig_analytic = out.min_eig_discrete = out.c_analytic = out.c_discrete = kInf;
    for (std::size_t k = 0; k < g->size(); ++k) {
        const Point& x = g->position(k);
        double prod = 1.0;
        for (double l : P.facet_values(x)) prod *= l;
        const double w = std::pow(prod, out.exponent);
        Eigen::Matrix2d Ha = polytope_barrier_hessian(P, x, alpha);
        out.min_eig_analytic = std::min(out.min_eig_analytic, min_eig2(Ha, n));
        out.min_eig_discrete = std::min(out.min_eig_discrete, D.min_eigenvalue(k));
        out.c_analytic = std::min(out.c_analytic, Ha.determinant() * w);
        out.c_discrete = std::min(out.c_discrete, D.det(k) * w);
    }
    out.nodes = g->size();
    EstimateReport& R = out.report;
    R.check = "polytope-barrier";
    R.observed = out.c_discrete;
    R.bound = 0.0;
    R.details["alpha"] = alpha;
    R.details["alpha_limit"] = out.alpha_limit;
    R.details["exponent"] = out.exponent;
    R.details["min_eig_analytic"] = out.min_eig_analytic;
    R.details["min_eig_discrete"] = out.min_eig_discrete;
    R.details["c_analytic"] = out.c_analytic;
    R.details["c_discrete"] = out.c_discrete;
    R.details["h"] = h;
    const bool ok = out.min_eig_analytic > 0 && out.min_eig_discrete > 0 && out.c_discrete > 0 && out.c_analytic > 0;
    R.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return out;
}

LogEdgeBarrier make_log_edge_barrier(double c, double r, int n, double alpha)
{
    if (n < 1 || n > 2) throw Error(ErrorKind::InvalidArgument, kModule, "dimension must be 1 or 2");
    if (!(r > 0.0) || r >= std::exp(-1.0)) throw Error(ErrorKind::OutOfRange, kModule, "r must lie in (0, 1/e)");
    if (!(c > 0.0)) throw Error(ErrorKind::OutOfRange, kModule, "c must be positive");
    if (alpha < 0.0) alpha = 1.0 / (2.0 * (n + 1));
    if (!(alpha > 0.0) || alpha >= 1.0 / n) throw Error(ErrorKind::OutOfRange, kModule, "alpha must lie in (0, 1/n)");
    return LogEdgeBarrier{c, r, alpha, n};
}

bool LogEdgeBarrier::inside(const Point& xi) const
{
    const double q = n == 2 ? xi.y() * xi.y() : 0.0;
    return xi.x() > c * q && xi.x() < r;
}

double LogEdgeBarrier::value(const Point& xi) const
{
    const double x = xi.x();
    const double q = n == 2 ? xi.y() * xi.y() : 0.0;
    const double lr = std::pow(-std::log(r), alpha);
    // The first term vanishes in the limit x -> 0.
    if (x <= 0.0) return 0.0;
    return -(x - c * q) * std::pow(-std::log(x), alpha) + x * lr;
}

Eigen::Matrix2d LogEdgeBarrier::hessian(const Point& xi) const
{
    const double x = xi.x(), y = n == 2 ? xi.y() : 0.0;
    const double L = -std::log(x);
    const double La1 = std::pow(L, alpha - 1.0);
    Eigen::Matrix2d H = Eigen::Matrix2d::Zero();
    H(0, 0) = alpha * La1 / x + alpha * c * y * y * La1 / (x * x) +
              alpha * (1 - alpha) * (1 - c * y * y / x) * std::pow(L, alpha - 2.0) / x;
    if (n == 2) {
        H(1, 1) = 2.0 * c * std::pow(L, alpha);
        H(0, 1) = H(1, 0) = -2.0 * alpha * c * y * La1 / x;
    } else {
        H(1, 1) = 1.0;
    }
    return H;
}

double LogEdgeBarrier::det_bound(const Point& xi) const
{
    const double x = xi.x();
    return alpha * std::pow(2.0 * c, n - 1) / (std::pow(-std::log(x), 1.0 - n * alpha) * x);
}

LogEdgeReport log_edge_barrier(double c, double r, int n, double h, double alpha)
{
    LogEdgeReport out;
    out.barrier = make_log_edge_barrier(c, r, n, alpha);
    const LogEdgeBarrier& B = out.barrier;
    if (!(h > 0.0) || h > r / 8) throw Error(ErrorKind::OutOfRange, kModule, "h must lie in (0, r/8]");
    out.value_at_origin = B.value(Point::Zero());
    out.min_eig_analytic = out.min_eig_discrete = kInf;
    out.max_det_ratio = 0.0;
    const double ymax = n == 2 ? std::sqrt(r / c) : 0.0;
    const int ni = int(std::floor(r / h)), nj = n == 2 ? int(std::floor(ymax / h)) : 0;
    const double h2 = h * h;
    Point worst = Point::Zero();
    for (int j = -nj; j <= nj; ++j)
        for (int i = 2; i <= ni; ++i) {
            const Point p(i * h, j * h);
            if (!B.inside(p)) continue;
            auto f = [&](int a, int b) { return B.value(p + h * Point(a, b)); };
            Eigen::Matrix2d D = Eigen::Matrix2d::Zero();
            D(0, 0) = (f(1, 0) - 2 * f(0, 0) + f(-1, 0)) / h2;
            if (n == 2) {
                D(1, 1) = (f(0, 1) - 2 * f(0, 0) + f(0, -1)) / h2;
                D(0, 1) = D(1, 0) = (f(1, 1) + f(-1, -1) - f(1, -1) - f(-1, 1)) / (4 * h2);
            }
            const double detd = n == 2 ? D.determinant() : D(0, 0);
            out.min_eig_analytic = std::min(out.min_eig_analytic, min_eig2(B.hessian(p), n));
            out.min_eig_discrete = std::min(out.min_eig_discrete, min_eig2(D, n));
            double ratio = detd / B.det_bound(p);
            if (ratio > out.max_det_ratio) {
                out.max_det_ratio = ratio;
                worst = p;
            }
            ++out.nodes;
        }
    EstimateReport& P = out.pd_report;
    P.check = "log-edge-barrier-convexity";
    P.observed = std::min(out.min_eig_analytic, out.min_eig_discrete);
    P.bound = 0.0;
    P.details["value_at_origin"] = out.value_at_origin;
    P.details["min_eig_analytic"] = out.min_eig_analytic;
    P.details["min_eig_discrete"] = out.min_eig_discrete;
    P.details["nodes"] = out.nodes;
    P.verdict = out.nodes > 0 && P.observed > 0 && out.value_at_origin == 0.0 ? Verdict::Pass : Verdict::Fail;
    EstimateReport& Dr = out.det_report;
    Dr.check = "log-edge-barrier-det-bound";
    Dr.observed = out.max_det_ratio;
    Dr.bound = 1.0;
    Dr.details["worst_point"] = {worst.x(), worst.y()};
    Dr.details["alpha"] = B.alpha;
    Dr.details["nodes"] = out.nodes;
    Dr.verdict = out.nodes > 0 && out.max_det_ratio <= 1.0 ? Verdict::Pass : Verdict::Fail;
    return out;
}

}  // namespace abreu
