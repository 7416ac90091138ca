#include "abreu/abreu_core.hpp"

#include "abreu/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abreu {

namespace {
constexpr const char* kModule = "abreu_core";
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

CoefficientField cofactor_field(const HessianField& H)
{
    CoefficientField a;
    a.dim = H.dim;
    const std::size_t N = H.xx.size();
    a.xx.resize(N);
    a.yy.assign(N, 0.0);
    a.xy.assign(N, 0.0);
    for (std::size_t k = 0; k < N; ++k) {
        if (H.dim == 1) {
            a.xx[k] = 1.0;
        } else {
            a.xx[k] = H.yy[k];
            a.yy[k] = H.xx[k];
            a.xy[k] = -H.xy[k];
        }
    }
    return a;
}

void operator_row(const Grid& g, const CoefficientField& a, std::size_t k, OperatorForm form, StencilRow& row)
{
    row.clear();
    const double h2 = g.h() * g.h();
    if (form == OperatorForm::Hybrid && g.core(k)) {
        auto nb = [&](int d) { return g.link(k, d).node; };
        // D_11(a11 w) + D_22(a22 w) + 2 D_12(a12 w) on the uniform 9-point block.
        row.interior.emplace_back(std::ptrdiff_t(k), -2.0 * (a.xx[k] + (g.dim() == 2 ? a.yy[k] : 0.0)) / h2);
        for (int d : {XP, XM}) row.interior.emplace_back(nb(d), a.xx[nb(d)] / h2);
        if (g.dim() == 2) {
            for (int d : {YP, YM}) row.interior.emplace_back(nb(d), a.yy[nb(d)] / h2);
            for (int d : {DP, DM}) row.interior.emplace_back(nb(d), 0.5 * a.xy[nb(d)] / h2);
            for (int d : {AP, AM}) row.interior.emplace_back(nb(d), -0.5 * a.xy[nb(d)] / h2);
        }
        return;
    }
    auto add = [&](int pair, double coef) {
        if (coef == 0.0) return;
        DirWeights w = second_difference_weights(g, k, pair);
        row.interior.emplace_back(std::ptrdiff_t(k), coef * w.c0);
        const Link& P = g.link(k, 2 * pair);
        const Link& M = g.link(k, 2 * pair + 1);
        if (P.cut()) row.boundary.emplace_back(P.at, coef * w.cp);
        else row.interior.emplace_back(P.node, coef * w.cp);
        if (M.cut()) row.boundary.emplace_back(M.at, coef * w.cm);
        else row.interior.emplace_back(M.node, coef * w.cm);
    };
    add(0, a.xx[k]);
    if (g.dim() == 2) {
        add(1, a.yy[k]);
        // 2 a12 D_12 with D_12 = (D_(1,1) - D_(1,-1)) / 2.
        add(2, a.xy[k]);
        add(3, -a.xy[k]);
    }
}

std::vector<double> apply_operator(const CoefficientField& a, const GridFunction& w, OperatorForm form)
{
    const Grid& g = w.grid();
    std::vector<double> out(w.size());
    StencilRow row;
    for (std::size_t k = 0; k < w.size(); ++k) {
        operator_row(g, a, k, form, row);
        double s = 0.0;
        for (const auto& [j, c] : row.interior) s += c * w[std::size_t(j)];
        for (const auto& [p, c] : row.boundary) s += c * w.trace_at(p);
        out[k] = s;
    }
    return out;
}

GridFunction abreu_primal(const GridFunction& u)
{
    const Grid& g = u.grid();
    HessianField H = hessian_field(u);
    // Inverse Hessian u^{ij}.
    CoefficientField inv = cofactor_field(H);
    for (std::size_t k = 0; k < u.size(); ++k) {
        double det = H.det(k);
        if (!(det > 1e-14)) throw Error(ErrorKind::DegenerateHessian, kModule, "det(D^2 u) <= 1e-14 at node " + std::to_string(k));
        inv.xx[k] /= det;
        inv.yy[k] /= det;
        inv.xy[k] /= det;
    }
    std::vector<double> S(u.size(), kNaN);
    StencilRow row;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (!g.core(k)) continue;
        operator_row(g, inv, k, OperatorForm::Hybrid, row);
        double s = 0.0;
        for (const auto& [j, c] : row.interior) s += c;
        S[k] = -s;
    }
    return GridFunction(u.grid_ptr(), std::move(S));
}

double sup_norm(const GridFunction& f)
{
    double m = 0.0;
    for (double v : f.values())
        if (std::isfinite(v)) m = std::max(m, std::abs(v));
    return m;
}

double l2_norm(const GridFunction& f)
{
    double s = 0.0;
    for (double v : f.values())
        if (std::isfinite(v)) s += v * v;
    return std::sqrt(s * std::pow(f.grid().h(), f.grid().dim()));
}

SystemResidual abreu_system_residual(const GridFunction& u, const GridFunction& w, const GridFunction& K, double theta)
{
    if (theta < 0.0 || theta > 1.0) throw Error(ErrorKind::OutOfRange, kModule, "theta must lie in [0, 1]");
    if (u.grid_ptr() != w.grid_ptr() || u.grid_ptr() != K.grid_ptr())
        throw Error(ErrorKind::InvalidArgument, kModule, "fields live on different grids");
    HessianField H = hessian_field(u);
    CoefficientField a = cofactor_field(H);
    std::vector<double> lin = apply_operator(a, w, OperatorForm::Hybrid);
    std::vector<double> con(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (!(w[k] > 0.0)) throw Error(ErrorKind::NonPositiveWeight, kModule, "w <= 0 at node " + std::to_string(k));
        lin[k] += K[k];
        con[k] = H.det(k) * std::pow(w[k], 1.0 - theta) - 1.0;
    }
    SystemResidual R{GridFunction(u.grid_ptr(), std::move(lin)), GridFunction(u.grid_ptr(), std::move(con))};
    R.sup_linear = sup_norm(R.linear);
    R.l2_linear = l2_norm(R.linear);
    R.sup_constitutive = sup_norm(R.constitutive);
    R.l2_constitutive = l2_norm(R.constitutive);
    return R;
}

std::size_t DualCurvature::defined_count() const
{
    return std::size_t(std::count(defined.begin(), defined.end(), 1));
}

DualCurvature abreu_dual(const LegendrePair& P)
{
    const DualGrid& D = P.dual;
    const std::size_t M = D.size();
    const double h2 = D.h * D.h;
    const int jr = D.dim == 2 ? 1 : 0;
    DualCurvature C;
    C.values.assign(M, kNaN);
    C.defined.assign(M, 0);
    C.logdet.assign(M, kNaN);
    C.hessian.assign(M, Eigen::Matrix2d::Constant(kNaN));
    auto block_ok = [&](int i, int j, auto&& ok) {
        for (int b = -jr; b <= jr; ++b)
            for (int a = -1; a <= 1; ++a)
                if (!D.inside(i + a, j + b) || !ok(D.index(i + a, j + b))) return false;
        return true;
    };
    auto hess_of = [&](const std::vector<double>& v, int i, int j) {
        Eigen::Matrix2d H = Eigen::Matrix2d::Zero();
        double c = v[D.index(i, j)];
        H(0, 0) = (v[D.index(i + 1, j)] - 2 * c + v[D.index(i - 1, j)]) / h2;
        if (D.dim == 2) {
            H(1, 1) = (v[D.index(i, j + 1)] - 2 * c + v[D.index(i, j - 1)]) / h2;
            H(0, 1) = H(1, 0) = (v[D.index(i + 1, j + 1)] + v[D.index(i - 1, j - 1)] - v[D.index(i + 1, j - 1)] -
                                 v[D.index(i - 1, j + 1)]) / (4 * h2);
        } else {
            H(1, 1) = 1.0;
        }
        return H;
    };
    for (int j = jr; j < D.ny - jr; ++j)
        for (int i = 1; i < D.nx - 1; ++i) {
            if (!block_ok(i, j, [&](std::size_t l) { return P.valid[l] != 0; })) continue;
            Eigen::Matrix2d H = hess_of(P.f, i, j);
            double det = H.determinant();
            if (det > 1e-14 && H(0, 0) > 0) {
                C.hessian[D.index(i, j)] = H;
                C.logdet[D.index(i, j)] = std::log(det);
            }
        }
    for (int j = jr; j < D.ny - jr; ++j)
        for (int i = 1; i < D.nx - 1; ++i) {
            if (!block_ok(i, j, [&](std::size_t l) { return std::isfinite(C.logdet[l]); })) continue;
            std::size_t l = D.index(i, j);
            Eigen::Matrix2d LH = hess_of(C.logdet, i, j);
            Eigen::Matrix2d Hi = C.hessian[l].inverse();
            double s = Hi(0, 0) * LH(0, 0);
            if (D.dim == 2) s += Hi(1, 1) * LH(1, 1) + 2.0 * Hi(0, 1) * LH(0, 1);
            C.values[l] = -s;
            C.defined[l] = 1;
        }
    bool any_hess = std::any_of(C.logdet.begin(), C.logdet.end(), [](double v) { return std::isfinite(v); });
    if (!any_hess) throw Error(ErrorKind::DegenerateHessian, kModule, "no dual node with a positive definite Hessian");
    return C;
}

KahlerMetric kahler_metric(const LegendrePair& P)
{
    KahlerMetric K;
    K.curvature = abreu_dual(P);
    const DualGrid& D = P.dual;
    K.g = K.curvature.hessian;
    K.min_eigenvalue.assign(D.size(), kNaN);
    for (std::size_t l = 0; l < D.size(); ++l) {
        if (!std::isfinite(K.curvature.logdet[l])) continue;
        const auto& H = K.g[l];
        K.min_eigenvalue[l] = D.dim == 1 ? H(0, 0) : Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(H).eigenvalues()[0];
    }
    std::size_t lmin = 0;
    double fmin = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < D.size(); ++l)
        if (P.valid[l] && P.f[l] < fmin) {
            fmin = P.f[l];
            lmin = l;
        }
    const Point x0 = D.node(lmin);
    std::vector<double> sum, cnt;
    for (std::size_t l = 0; l < D.size(); ++l) {
        if (!P.valid[l] || l == lmin) continue;
        double r = (D.node(l) - x0).norm();
        std::size_t shell = std::size_t(r / D.h);
        if (shell >= sum.size()) {
            sum.resize(shell + 1, 0.0);
            cnt.resize(shell + 1, 0.0);
        }
        sum[shell] += (P.f[l] - fmin) / r;
        cnt[shell] += 1.0;
    }
    for (std::size_t s = 0; s < sum.size(); ++s)
        if (cnt[s] > 0) K.growth.push_back(sum[s] / cnt[s]);
    int up = 0;
    for (std::size_t s = 1; s < K.growth.size(); ++s) up += K.growth[s] >= K.growth[s - 1] - 1e-12;
    K.growth_monotone_fraction = K.growth.size() > 1 ? double(up) / double(K.growth.size() - 1) : 1.0;
    return K;
}

}  // namespace abreu
