#include "abreu/legendre.hpp"

#include "abreu/convex_calculus.hpp"
#include "abreu/errors.hpp"
#include "abreu/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace abreu {

namespace {

constexpr const char* kModule = "convex_calculus";
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Argmax {
    double value = kNegInf;
    std::size_t index = 0;
};

Argmax brute_max(const SampleSet& S, const Point& x, const Point& base)
{
    Argmax best;
    const std::size_t m = S.pts.size();
    for (std::size_t s = 0; s < m; ++s) {
        double v = x.x() * (S.pts[s].x() - base.x()) + x.y() * (S.pts[s].y() - base.y()) - S.vals[s];
        if (v > best.value) {
            best.value = v;
            best.index = s;
        }
    }
    return best;
}

// Coefficients (ascending powers) of the Lagrange basis on the nodes -P..P.
std::vector<std::vector<double>> lagrange_basis(int P)
{
    const int n = 2 * P + 1;
    std::vector<std::vector<double>> out(n);
    for (int a = -P; a <= P; ++a) {
        std::vector<double> c{1.0};
        for (int b = -P; b <= P; ++b) {
            if (b == a) continue;
            std::vector<double> nc(c.size() + 1, 0.0);
            for (std::size_t m = 0; m < c.size(); ++m) {
                nc[m + 1] += c[m] / double(a - b);
                nc[m] -= c[m] * double(b) / double(a - b);
            }
            c = std::move(nc);
        }
        out[a + P] = std::move(c);
    }
    return out;
}

void eval_basis(const std::vector<std::vector<double>>& B, double s, double* v, double* d1, double* d2)
{
    for (std::size_t a = 0; a < B.size(); ++a) {
        const auto& c = B[a];
        double p = 0, dp = 0, ddp = 0;
        for (std::size_t m = c.size(); m-- > 0;) {
            ddp = ddp * s + 2.0 * dp;
            dp = dp * s + p;
            p = p * s + c[m];
        }
        v[a] = p;
        d1[a] = dp;
        d2[a] = ddp;
    }
}

// Newton polish of the maximizer of <x, xi> - u(xi) on a local polynomial interpolant.
struct Refiner {
    const GridFunction& u;
    int P;
    std::vector<std::vector<double>> B;

    Refiner(const GridFunction& uu, int p) : u(uu), P(p), B(lagrange_basis(p)) {}

    double lattice_value(int i, int j) const
    {
        const Grid& g = u.grid();
        std::ptrdiff_t k = g.interior_at(i, j);
        if (k >= 0) return u[std::size_t(k)];
        if (g.node_class(i, j) == NodeClass::Boundary && u.has_trace()) return u.trace_at(g.lattice_point(i, j));
        return std::numeric_limits<double>::quiet_NaN();
    }

    bool run(const Point& x, const Point& base, int ci, int cj, double& f, Point& xi) const
    {
        const Grid& g = u.grid();
        const int n = g.dim();
        const int W = 2 * P + 1;
        const double h = g.h();
        std::vector<double> vals(std::size_t(W) * (n == 2 ? W : 1));
        std::vector<double> v1(W), d1(W), e1(W), v2(W, 0.0), d2(W, 0.0), e2(W, 0.0);
        Point s = Point::Zero();
        int loaded_i = INT32_MIN, loaded_j = INT32_MIN;
        // Patch values are stored relative to the center value to keep rounding in G small.
        double offset = 0.0;
        for (int it = 0; it < 60; ++it) {
            if (ci != loaded_i || cj != loaded_j) {
                for (int b = 0; b < (n == 2 ? W : 1); ++b)
                    for (int a = 0; a < W; ++a) {
                        double val = lattice_value(ci + a - P, n == 2 ? cj + b - P : 0);
                        if (!std::isfinite(val)) return false;
                        vals[std::size_t(b) * W + a] = val;
                    }
                offset = vals[std::size_t(n == 2 ? P : 0) * W + P];
                for (double& v : vals) v -= offset;
                loaded_i = ci;
                loaded_j = cj;
            }
            eval_basis(B, s.x(), v1.data(), d1.data(), e1.data());
            double Pv = 0;
            Eigen::Vector2d G = Eigen::Vector2d::Zero();
            Eigen::Matrix2d H = Eigen::Matrix2d::Zero();
            if (n == 1) {
                for (int a = 0; a < W; ++a) {
                    Pv += vals[a] * v1[a];
                    G[0] += vals[a] * d1[a];
                    H(0, 0) += vals[a] * e1[a];
                }
                H(1, 1) = 1.0;
            } else {
                eval_basis(B, s.y(), v2.data(), d2.data(), e2.data());
                for (int b = 0; b < W; ++b)
                    for (int a = 0; a < W; ++a) {
                        double c = vals[std::size_t(b) * W + a];
                        Pv += c * v1[a] * v2[b];
                        G[0] += c * d1[a] * v2[b];
                        G[1] += c * v1[a] * d2[b];
                        H(0, 0) += c * e1[a] * v2[b];
                        H(1, 1) += c * v1[a] * e2[b];
                        H(0, 1) += c * d1[a] * d2[b];
                    }
                H(1, 0) = H(0, 1);
            }
            Eigen::Vector2d r = G - h * x;
            if (n == 1) r[1] = 0.0;
            if (H.determinant() <= 0 || H(0, 0) <= 0) return false;
            Eigen::Vector2d ds = -H.ldlt().solve(r);
            double step = ds.cwiseAbs().maxCoeff();
            if (step > 1.0) ds /= step;
            const Point center = g.lattice_point(ci, cj);
            // The objective is stationary at the maximizer, so f is exact to second order in the step.
            if (step < 1e-10) {
                xi = center + h * s;
                if (g.domain().signed_distance(xi) <= 0) return false;
                f = x.dot(xi - base) - (Pv + offset);
                return true;
            }
            s += ds;
            int si = int(std::lround(s.x())), sj = n == 2 ? int(std::lround(s.y())) : 0;
            if (std::abs(s.x()) > 0.5 || std::abs(s.y()) > 0.5) {
                ci += si;
                cj += sj;
                s -= Point(si, sj);
            }
        }
        return false;
    }
};

}  // namespace

DualGrid DualGrid::covering(int dim, double h, const Point& lo, const Point& hi)
{
    if (!(h > 0)) throw Error(ErrorKind::Config, kModule, "dual spacing must be positive");
    DualGrid d;
    d.dim = dim;
    d.h = h;
    int i0 = int(std::floor(lo.x() / h - 1e-9)), i1 = int(std::ceil(hi.x() / h + 1e-9));
    d.origin.x() = i0 * h;
    d.nx = i1 - i0 + 1;
    if (dim == 2) {
        int j0 = int(std::floor(lo.y() / h - 1e-9)), j1 = int(std::ceil(hi.y() / h + 1e-9));
        d.origin.y() = j0 * h;
        d.ny = j1 - j0 + 1;
    }
    return d;
}

LegendrePair LegendrePair::from_function(const DualGrid& dual, const ScalarFn& fn)
{
    LegendrePair P;
    P.dual = dual;
    P.f.resize(dual.size());
    P.valid.assign(dual.size(), 1);
    P.source.assign(dual.size(), Point::Constant(std::numeric_limits<double>::quiet_NaN()));
    P.touch = P.source;
    for (std::size_t l = 0; l < dual.size(); ++l) P.f[l] = fn(dual.node(l));
    return P;
}

double LegendrePair::interpolate(const std::vector<double>& field, const Point& x) const
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    double sx = (x.x() - dual.origin.x()) / dual.h;
    int i = int(std::floor(sx));
    double tx = sx - i;
    if (dual.dim == 1) {
        if (i < 0 || i + 1 >= dual.nx) return nan;
        return (1 - tx) * field[dual.index(i, 0)] + tx * field[dual.index(i + 1, 0)];
    }
    double sy = (x.y() - dual.origin.y()) / dual.h;
    int j = int(std::floor(sy));
    double ty = sy - j;
    if (i < 0 || j < 0 || i + 1 >= dual.nx || j + 1 >= dual.ny) return nan;
    return (1 - tx) * (1 - ty) * field[dual.index(i, j)] + tx * (1 - ty) * field[dual.index(i + 1, j)] +
           (1 - tx) * ty * field[dual.index(i, j + 1)] + tx * ty * field[dual.index(i + 1, j + 1)];
}

SampleSet primal_samples(const GridFunction& u)
{
    const Grid& g = u.grid();
    std::vector<Point> pts;
    std::vector<double> vals;
    for (std::size_t k = 0; k < u.size(); ++k) {
        pts.push_back(g.position(k));
        vals.push_back(u[k]);
    }
    if (u.has_trace()) {
        for (const auto& q : g.boundary_samples()) {
            pts.push_back(q);
            vals.push_back(u.trace_at(q));
        }
    }
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x() != pts[b].x()) return pts[a].x() < pts[b].x();
        return pts[a].y() < pts[b].y();
    });
    SampleSet S;
    S.pts.reserve(idx.size());
    S.vals.reserve(idx.size());
    for (auto i : idx) {
        S.pts.push_back(pts[i]);
        S.vals.push_back(vals[i]);
    }
    return S;
}

std::vector<double> conjugate_at(const GridFunction& u, const std::vector<Point>& xs, const Point& base)
{
    SampleSet S = primal_samples(u);
    std::vector<double> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[i] = brute_max(S, xs[i], base).value;
    });
    return out;
}

double conjugate_at(const GridFunction& u, const Point& x, const Point& base)
{
    return conjugate_at(u, std::vector<Point>{x}, base)[0];
}

LegendrePair legendre_transform(const GridFunction& u, const LegendreOptions& opt)
{
    const Grid& g = u.grid();
    if (opt.refine < 0 || opt.refine > 4) throw Error(ErrorKind::Config, kModule, "refinement half width must be in [0, 4]");
    Point lo, hi;
    if (opt.window) {
        lo = opt.window->first;
        hi = opt.window->second;
    } else {
        lo = Point::Constant(std::numeric_limits<double>::infinity());
        hi = -lo;
        for (std::size_t k = 0; k < u.size(); ++k) {
            Point x = gradient_point(u, k);
            lo = lo.cwiseMin(x);
            hi = hi.cwiseMax(x);
        }
        lo -= Point::Constant(opt.dual_h);
        hi += Point::Constant(opt.dual_h);
    }
    if (g.dim() == 1) lo.y() = hi.y() = 0.0;
    LegendrePair P;
    P.dual = DualGrid::covering(g.dim(), opt.dual_h, lo, hi);
    P.base = opt.base;
    const std::size_t M = P.dual.size();
    P.f.resize(M);
    P.valid.assign(M, 1);
    P.source.resize(M);
    P.touch.resize(M);

    SampleSet S = primal_samples(u);
    std::vector<std::size_t> arg(M);
    parallel_for(M, [&](std::size_t b, std::size_t e) {
        for (std::size_t l = b; l < e; ++l) {
            Argmax a = brute_max(S, P.dual.node(l), opt.base);
            P.f[l] = a.value;
            arg[l] = a.index;
            P.source[l] = S.pts[a.index];
            P.touch[l] = S.pts[a.index];
        }
    });
    if (opt.refine > 0) {
        Refiner R(u, opt.refine);
        parallel_for(M, [&](std::size_t b, std::size_t e) {
            for (std::size_t l = b; l < e; ++l) {
                const Point& src = P.source[l];
                Point rel = (src - g.origin()) / g.h();
                int ci = int(std::lround(rel.x())), cj = int(std::lround(rel.y()));
                // Only maximizers at interior lattice nodes can be polished.
                if ((g.lattice_point(ci, cj) - src).norm() > 1e-12 * std::max(1.0, src.norm()) || g.interior_at(ci, cj) < 0) {
                    P.valid[l] = 0;
                    continue;
                }
                double f;
                Point xi;
                if (R.run(P.dual.node(l), opt.base, ci, cj, f, xi)) {
                    P.f[l] = f;
                    P.touch[l] = xi;
                } else {
                    P.valid[l] = 0;
                }
            }
        });
    }
    return P;
}

std::vector<double> biconjugate_at(const LegendrePair& pair, const std::vector<Point>& pts)
{
    std::vector<double> out(pts.size(), kNegInf);
    parallel_for(pts.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            double best = kNegInf;
            Point q = pts[i] - pair.base;
            for (std::size_t l = 0; l < pair.f.size(); ++l) {
                if (!pair.valid[l]) continue;
                double v = q.dot(pair.dual.node(l)) - pair.f[l];
                if (v > best) best = v;
            }
            out[i] = best;
        }
    });
    return out;
}

double gradient_legendre_ratio(const GridFunction& u, double d, const Point& base)
{
    std::vector<Point> xs(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) xs[k] = gradient_point(u, k);
    std::vector<double> f = conjugate_at(u, xs, base);
    double sup = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        double den = d + f[k];
        if (!(den > 0)) throw Error(ErrorKind::NonPositiveDenominator, kModule, "d + f <= 0");
        sup = std::max(sup, xs[k].squaredNorm() / (den * den));
    }
    return sup;
}

}  // namespace abreu
