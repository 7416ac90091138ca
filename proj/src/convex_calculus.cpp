#include "abreu/convex_calculus.hpp"

#include "abreu/errors.hpp"

#include <algorithm>
#include <cmath>

namespace abreu {

namespace {
constexpr const char* kModule = "convex_calculus";
constexpr double kSqrt2 = 1.4142135623730950488;
}

DirWeights second_difference_weights(const Grid& g, std::size_t k, int pair)
{
    const double L = (pair < 2 ? 1.0 : kSqrt2) * g.h();
    const double hp = g.link(k, 2 * pair).frac * L;
    const double hm = g.link(k, 2 * pair + 1).frac * L;
    DirWeights w;
    w.cp = 2.0 / (hp * (hp + hm));
    w.cm = 2.0 / (hm * (hp + hm));
    w.c0 = -(w.cp + w.cm);
    return w;
}

double second_difference(const GridFunction& u, std::size_t k, int pair)
{
    if (2 * pair + 1 >= u.grid().ndirs()) throw Error(ErrorKind::InvalidArgument, kModule, "direction pair out of range");
    DirWeights w = second_difference_weights(u.grid(), k, pair);
    return w.c0 * u[k] + w.cp * u.neighbour(k, 2 * pair) + w.cm * u.neighbour(k, 2 * pair + 1);
}

Eigen::MatrixXd discrete_hessian(const GridFunction& u, std::size_t k)
{
    if (k >= u.size()) throw Error(ErrorKind::StencilIncomplete, kModule, "node is not interior");
    const int n = u.grid().dim();
    Eigen::MatrixXd H(n, n);
    H(0, 0) = second_difference(u, k, 0);
    if (n == 2) {
        H(1, 1) = second_difference(u, k, 1);
        H(0, 1) = H(1, 0) = 0.5 * (second_difference(u, k, 2) - second_difference(u, k, 3));
    }
    return H;
}

Eigen::VectorXd discrete_gradient(const GridFunction& u, std::size_t k)
{
    if (k >= u.size()) throw Error(ErrorKind::StencilIncomplete, kModule, "node is not interior");
    const Grid& g = u.grid();
    Eigen::VectorXd out(g.dim());
    for (int a = 0; a < g.dim(); ++a) {
        const double hp = g.link(k, 2 * a).frac * g.h();
        const double hm = g.link(k, 2 * a + 1).frac * g.h();
        const double dp = u.neighbour(k, 2 * a) - u[k];
        const double dm = u[k] - u.neighbour(k, 2 * a + 1);
        out[a] = (hm * hm * dp + hp * hp * dm) / (hp * hm * (hp + hm));
    }
    return out;
}

Point gradient_point(const GridFunction& u, std::size_t k)
{
    Eigen::VectorXd g = discrete_gradient(u, k);
    return Point(g[0], g.size() > 1 ? g[1] : 0.0);
}

Eigen::MatrixXd cofactor(const Eigen::MatrixXd& H)
{
    if (H.rows() == 1) return Eigen::MatrixXd::Ones(1, 1);
    if (H.rows() != 2 || H.cols() != 2) throw Error(ErrorKind::InvalidArgument, kModule, "cofactor needs a 1x1 or 2x2 matrix");
    Eigen::MatrixXd C(2, 2);
    C << H(1, 1), -H(0, 1), -H(1, 0), H(0, 0);
    return C;
}

double HessianField::min_eigenvalue(std::size_t k) const
{
    if (dim == 1) return xx[k];
    double m = 0.5 * (xx[k] + yy[k]);
    double r = std::hypot(0.5 * (xx[k] - yy[k]), xy[k]);
    return m - r;
}

Eigen::MatrixXd HessianField::at(std::size_t k) const
{
    Eigen::MatrixXd H(dim, dim);
    H(0, 0) = xx[k];
    if (dim == 2) {
        H(1, 1) = yy[k];
        H(0, 1) = H(1, 0) = xy[k];
    }
    return H;
}

HessianField hessian_field(const GridFunction& u)
{
    HessianField F;
    F.dim = u.grid().dim();
    const std::size_t N = u.size();
    F.xx.resize(N);
    F.yy.assign(N, 0.0);
    F.xy.assign(N, 0.0);
    for (std::size_t k = 0; k < N; ++k) {
        F.xx[k] = second_difference(u, k, 0);
        if (F.dim == 2) {
            F.yy[k] = second_difference(u, k, 1);
            F.xy[k] = 0.5 * (second_difference(u, k, 2) - second_difference(u, k, 3));
        }
    }
    return F;
}

MAFields ma_fields(const GridFunction& u)
{
    HessianField H = hessian_field(u);
    std::vector<double> det(u.size()), w(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        det[k] = H.det(k);
        if (!(det[k] > 1e-14))
            throw Error(ErrorKind::DegenerateHessian, kModule, "det(D^2 u) <= 1e-14 at node " + std::to_string(k));
        w[k] = 1.0 / det[k];
    }
    return MAFields{GridFunction(u.grid_ptr(), std::move(det)), GridFunction(u.grid_ptr(), std::move(w))};
}

bool is_convex(const GridFunction& u, double tol)
{
    HessianField H = hessian_field(u);
    for (std::size_t k = 0; k < u.size(); ++k)
        if (H.min_eigenvalue(k) < -tol) return false;
    return true;
}

GridFunction normalize_at(const GridFunction& u, std::size_t p, AffineShift* shift)
{
    if (p >= u.size()) throw Error(ErrorKind::InvalidArgument, kModule, "normalization point is not an interior node");
    AffineShift s;
    s.p = u.grid().position(p);
    s.slope = gradient_point(u, p);
    s.value = u[p];
    std::vector<double> v(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) v[k] = u[k] - s.slope.dot(u.grid().position(k) - s.p) - s.value;
    v[p] = 0.0;
    ScalarFn tr;
    if (u.has_trace()) {
        ScalarFn base = u.trace();
        tr = [base, s](const Point& x) { return base(x) - s.slope.dot(x - s.p) - s.value; };
    }
    if (shift) *shift = s;
    return GridFunction(u.grid_ptr(), std::move(v), std::move(tr));
}

Section section(const GridFunction& u, std::size_t p, double b, double tol)
{
    if (p >= u.size()) throw Error(ErrorKind::InvalidArgument, kModule, "section center is not an interior node");
    const double scale = std::max(1.0, std::max(std::abs(u.max()), std::abs(u.min())));
    if (std::abs(u[p]) > tol * scale || u.min() < -tol * scale)
        throw Error(ErrorKind::NotNormalized, kModule, "u(p) must vanish and u must be non-negative");
    Section S;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] < b) S.nodes.push_back(k);
    S.compact = u.has_trace();
    if (u.has_trace()) {
        for (const auto& q : u.grid().boundary_samples()) {
            if (!(u.trace_at(q) > b)) {
                S.compact = false;
                break;
            }
        }
    }
    return S;
}

double osc(const GridFunction& u)
{
    double hi = u.max(), lo = u.min();
    if (u.has_trace()) {
        for (const auto& q : u.grid().boundary_samples()) {
            double t = u.trace_at(q);
            hi = std::max(hi, t);
            lo = std::min(lo, t);
        }
    }
    return hi - lo;
}

}  // namespace abreu
