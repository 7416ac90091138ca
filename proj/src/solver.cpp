#include "abreu/solver.hpp"

#include "abreu/errors.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>

namespace abreu {

namespace {

constexpr const char* kModule = "continuation_solver";
using SpMat = Eigen::SparseMatrix<double>;

SpMat assemble(const Grid& g, const CoefficientField& a, OperatorForm form, Eigen::VectorXd* bvec, const ScalarFn* bc)
{
    const std::size_t N = g.size();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(N * (g.dim() == 1 ? 3 : 9));
    if (bvec) bvec->setZero(Eigen::Index(N));
    StencilRow row;
    for (std::size_t k = 0; k < N; ++k) {
        operator_row(g, a, k, form, row);
        for (const auto& [j, c] : row.interior) trip.emplace_back(int(k), int(j), c);
        if (bvec && bc)
            for (const auto& [p, c] : row.boundary) (*bvec)[Eigen::Index(k)] += c * (*bc)(p);
    }
    SpMat M{Eigen::Index(N), Eigen::Index(N)};
    M.setFromTriplets(trip.begin(), trip.end());
    M.makeCompressed();
    return M;
}

Eigen::VectorXd lu_solve(Eigen::SparseLU<SpMat>& lu, const SpMat& M, const Eigen::VectorXd& b)
{
    lu.compute(M);
    if (lu.info() != Eigen::Success) throw Error(ErrorKind::SingularSystem, kModule, "sparse LU factorization failed");
    Eigen::VectorXd x = lu.solve(b);
    if (lu.info() != Eigen::Success || !x.allFinite()) throw Error(ErrorKind::SingularSystem, kModule, "sparse LU solve failed");
    return x;
}

double ma_residual(const HessianField& H, const GridFunction& rhs, std::vector<double>* raw = nullptr)
{
    double r = 0.0;
    if (raw) raw->resize(rhs.size());
    for (std::size_t k = 0; k < rhs.size(); ++k) {
        double d = H.det(k) - rhs[k];
        if (raw) (*raw)[k] = d;
        r = std::max(r, std::abs(d) / std::max(1.0, std::abs(rhs[k])));
    }
    return r;
}

double min_eig(const HessianField& H)
{
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < H.xx.size(); ++k) m = std::min(m, H.min_eigenvalue(k));
    return m;
}

double sup_abs_values(const GridFunction& f)
{
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

SolverOptions default_options(int dim)
{
    SolverOptions o;
    if (dim == 2) {
        o.inner_tol = 1e-6;
        o.outer_tol = 1e-4;
    }
    return o;
}

GridFunction linearized_solve(const GridFunction& u, const GridFunction& K, const ScalarFn& bc)
{
    if (!bc) throw Error(ErrorKind::InvalidArgument, kModule, "missing boundary data for w");
    if (u.grid_ptr() != K.grid_ptr()) throw Error(ErrorKind::InvalidArgument, kModule, "u and K live on different grids");
    const Grid& g = u.grid();
    CoefficientField a = cofactor_field(hessian_field(u));
    Eigen::VectorXd b;
    SpMat M = assemble(g, a, OperatorForm::Hybrid, &b, &bc);
    for (std::size_t k = 0; k < g.size(); ++k) b[Eigen::Index(k)] = -K[k] - b[Eigen::Index(k)];
    Eigen::SparseLU<SpMat> lu;
    Eigen::VectorXd x = lu_solve(lu, M, b);
    return GridFunction(u.grid_ptr(), std::vector<double>(x.data(), x.data() + x.size()), bc);
}

GridFunction ma_solve(const GridFunction& rhs, const ScalarFn& phi, const GridFunction& u0, const SolverOptions& opt,
                      NewtonReport* report)
{
    const Grid& g = u0.grid();
    for (std::size_t k = 0; k < rhs.size(); ++k)
        if (!(rhs[k] > 0.0) || !std::isfinite(rhs[k]))
            throw Error(ErrorKind::InvalidArgument, kModule, "right-hand side must be positive");
    GridFunction u(u0.grid_ptr(), u0.values(), phi);
    HessianField H = hessian_field(u);
    if (min_eig(H) < -1e-10) throw Error(ErrorKind::NonConvexInput, kModule, "initial guess is not convex");
    std::vector<double> raw;
    double r = ma_residual(H, rhs, &raw);
    Eigen::SparseLU<SpMat> lu;
    bool analyzed = false;
    for (int it = 0; it < opt.max_newton; ++it) {
        if (report) *report = NewtonReport{it, r};
        if (r <= opt.inner_tol) return u;
        SpMat J = assemble(g, cofactor_field(H), OperatorForm::NonDivergence, nullptr, nullptr);
        Eigen::VectorXd b(Eigen::Index(g.size()));
        for (std::size_t k = 0; k < g.size(); ++k) b[Eigen::Index(k)] = -raw[k];
        if (!analyzed) {
            lu.analyzePattern(J);
            analyzed = true;
        }
        // Rounding floor of the residual: sensitivity of det to a relative perturbation eps of u.
        double floor = 0.0;
        {
            Eigen::VectorXd rows = Eigen::VectorXd::Zero(J.rows());
            for (Eigen::Index c = 0; c < J.outerSize(); ++c)
                for (SpMat::InnerIterator e(J, c); e; ++e) rows[e.row()] += std::abs(e.value());
            double umax = 1.0;
            for (double v : u.values()) umax = std::max(umax, std::abs(v));
            for (std::size_t k = 0; k < g.size(); ++k)
                floor = std::max(floor, rows[Eigen::Index(k)] / std::max(1.0, rhs[k]));
            floor *= 1e2 * std::numeric_limits<double>::epsilon() * umax;
        }
        lu.factorize(J);
        if (lu.info() != Eigen::Success) throw Error(ErrorKind::SingularSystem, kModule, "Newton Jacobian is singular");
        Eigen::VectorXd d = lu.solve(b);
        if (!d.allFinite()) throw Error(ErrorKind::SingularSystem, kModule, "Newton step is not finite");
        double step = 1.0;
        bool accepted = false;
        for (int hv = 0; hv <= opt.max_halvings; ++hv, step *= 0.5) {
            GridFunction trial = u;
            for (std::size_t k = 0; k < g.size(); ++k) trial[k] += step * d[Eigen::Index(k)];
            HessianField Ht = hessian_field(trial);
            if (min_eig(Ht) < -1e-10) continue;
            std::vector<double> rt;
            double rn = ma_residual(Ht, rhs, &rt);
            if (rn < r) {
                u = std::move(trial);
                H = std::move(Ht);
                raw = std::move(rt);
                r = rn;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // Already at roundoff: further decrease is not representable.
            if (r <= std::max(floor, 1e3 * std::numeric_limits<double>::epsilon())) {
                if (report) *report = NewtonReport{it, r};
                return u;
            }
            throw Error(ErrorKind::LineSearchFailed, kModule,
                        "no convex decrease after " + std::to_string(opt.max_halvings) + " halvings (residual " + std::to_string(r) + ")");
        }
    }
    if (r <= opt.inner_tol) return u;
    throw Error(ErrorKind::MaxIterations, kModule, "Newton did not reach the inner tolerance");
}

GridFunction initial_guess(const GridPtr& grid, const ScalarFn& phi)
{
    const Point c = grid->domain().circumcenter();
    const double R = grid->domain().circumradius();
    const bool one_d = grid->dim() == 1;
    return GridFunction::sample(grid, [phi, c, R, one_d](const Point& p) {
        Point q = p - c;
        if (one_d) q.y() = 0.0;
        return phi(p) + 0.5 * (q.squaredNorm() - R * R);
    });
}

SolverState solve_bvp(const BVPProblem& prob, const SolverOptions& opt, const SolverState* warm)
{
    if (prob.theta < 0.0 || prob.theta > 1.0) throw Error(ErrorKind::OutOfRange, kModule, "theta must lie in [0, 1]");
    if (!prob.phi || !prob.psi) throw Error(ErrorKind::InvalidArgument, kModule, "missing boundary data");
    const GridPtr& grid = prob.grid;
    SolverState S;
    S.theta = prob.theta;
    GridFunction u = warm ? GridFunction(grid, warm->u.values(), prob.phi) : initial_guess(grid, prob.phi);
    u.set_trace(prob.phi);
    std::optional<GridFunction> w_prev;
    if (warm) w_prev = GridFunction(grid, warm->w.values(), prob.psi);
    const double kscale = std::max(1.0, sup_abs_values(prob.K));
    double omega = opt.relax;
    double r_prev = std::numeric_limits<double>::infinity();
    for (int sweep = 1; sweep <= opt.max_outer; ++sweep) {
        GridFunction w_lin = linearized_solve(u, prob.K, prob.psi);
        GridFunction u_next = u;
        GridFunction w = w_lin;
        SystemResidual R;
        double r = 0.0;
        bool damped = false;
        for (;;) {
            w = w_lin;
            if (w_prev && omega < 1.0)
                for (std::size_t k = 0; k < w.size(); ++k) w[k] = (*w_prev)[k] + omega * (w_lin[k] - (*w_prev)[k]);
            for (std::size_t k = 0; k < w.size(); ++k)
                if (!(w[k] > 0.0)) throw Error(ErrorKind::NonPositiveWeight, kModule, "w <= 0 at node " + std::to_string(k));
            std::vector<double> rhs(w.size());
            for (std::size_t k = 0; k < w.size(); ++k) rhs[k] = std::pow(w[k], prob.theta - 1.0);
            NewtonReport nr;
            u_next = ma_solve(GridFunction(grid, std::move(rhs)), prob.phi, u, opt, &nr);
            S.newton_iterations += nr.iterations;
            R = abreu_system_residual(u_next, w, prob.K, prob.theta);
            r = std::max(R.sup_linear / kscale, R.sup_constitutive);
            // Damp the w update until the outer residual does not grow.
            if (r <= r_prev || !w_prev || omega < 1.0 / 64) break;
            omega *= 0.5;
            damped = true;
        }
        if (!damped) omega = std::min(opt.relax, 2.0 * omega);
        u = std::move(u_next);
        w_prev = w;
        r_prev = r;
        S.residual_history.push_back(r);
        S.sweeps = sweep;
        if (R.sup_linear <= opt.outer_tol * kscale && R.sup_constitutive <= opt.outer_tol) {
            S.u = std::move(u);
            S.w = std::move(w);
            S.sup_linear = R.sup_linear;
            S.sup_constitutive = R.sup_constitutive;
            return S;
        }
        const auto& hst = S.residual_history;
        if (int(hst.size()) > opt.stall_window &&
            hst.back() > (1.0 - opt.stall_drop) * hst[hst.size() - 1 - std::size_t(opt.stall_window)])
            throw Error(ErrorKind::OuterStalled, kModule, "residual " + std::to_string(r) + " stopped decreasing");
    }
    throw Error(ErrorKind::MaxIterations, kModule, "outer iteration did not converge");
}

std::vector<double> default_theta_schedule() { return {1e-1, 1e-2, 1e-3, 0.0}; }
std::vector<double> default_t_schedule() { return {1e-1, 1e-2, 1e-3, 1e-4}; }

ThetaTrace theta_continuation(const BVPProblem& prob, const std::vector<double>& schedule, const SolverOptions& opt)
{
    if (schedule.empty()) throw Error(ErrorKind::Config, kModule, "empty theta schedule");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] < 0.0 || schedule[i] > 1.0) throw Error(ErrorKind::OutOfRange, kModule, "theta must lie in [0, 1]");
        if (i && !(schedule[i] < schedule[i - 1])) throw Error(ErrorKind::Config, kModule, "theta schedule must decrease");
    }
    const Grid& g = *prob.grid;
    double psi_min = std::numeric_limits<double>::infinity(), psi_max = 0.0;
    for (const auto& q : g.boundary_samples()) {
        double v = prob.psi(q);
        psi_min = std::min(psi_min, v);
        psi_max = std::max(psi_max, v);
    }
    if (!(psi_min > 0.0)) throw Error(ErrorKind::NonPositiveWeight, kModule, "boundary data for w must be positive");
    const double C0 = std::max(psi_max, 1.0 / psi_min);
    const int n = g.dim();
    const double Kmax = sup_abs_values(prob.K);
    const double diam = g.domain().diameter();
    ThetaTrace T;
    for (double th : schedule) {
        BVPProblem p = prob;
        p.theta = th;
        SolverState S = solve_bvp(p, opt, T.states.empty() ? nullptr : &T.states.back());
        ThetaEntry e;
        e.theta = th;
        e.sweeps = S.sweeps;
        e.w_min = S.w.min();
        e.w_max = S.w.max();
        e.psi_min = psi_min;
        e.upper_bound = std::exp(2.0) * std::pow(C0, (n - 1) * th) * std::pow(5.0 * Kmax * diam * diam, n);
        e.upper_ok = e.w_max <= e.upper_bound;
        e.lower_ok = e.w_min >= psi_min * (1.0 - 1e-8);
        e.sup_linear = S.sup_linear;
        e.sup_constitutive = S.sup_constitutive;
        T.entries.push_back(e);
        T.states.push_back(std::move(S));
    }
    return T;
}

TTrace t_continuation(const GridPtr& grid, const GridFunction& K, const ScalarFn& phi, const std::vector<double>& schedule,
                      const SolverOptions& opt)
{
    if (schedule.empty()) throw Error(ErrorKind::Config, kModule, "empty t schedule");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0)) throw Error(ErrorKind::OutOfRange, kModule, "t must be positive");
        if (i && !(schedule[i] < schedule[i - 1])) throw Error(ErrorKind::Config, kModule, "t schedule must decrease");
    }
    const Grid& g = *grid;
    double depth = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) depth = std::max(depth, g.boundary_distance(k));
    std::vector<std::size_t> core;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (g.boundary_distance(k) >= 0.25 * depth) core.push_back(k);
    const int n = g.dim();
    const double R = g.domain().circumradius();
    TTrace T;
    for (double t : schedule) {
        BVPProblem p{grid, K, phi, [t](const Point&) { return t; }, 0.0};
        SolverState S = solve_bvp(p, opt, T.states.empty() ? nullptr : &T.states.back());
        TEntry e;
        e.t = t;
        e.osc = osc(S.u);
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g.touches_boundary(k)) e.grad_near_boundary = std::max(e.grad_near_boundary, gradient_point(S.u, k).norm());
        e.gradient_bound = R * std::pow(1.0 / t, 1.0 / n);
        HessianField H = hessian_field(S.u);
        e.det_min = std::numeric_limits<double>::infinity();
        e.det_max = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            e.det_min = std::min(e.det_min, H.det(k));
            e.det_max = std::max(e.det_max, H.det(k));
        }
        e.w_boundary = t;
        e.w_max = S.w.max();
        e.interior_change = std::numeric_limits<double>::quiet_NaN();
        if (!T.states.empty()) {
            e.interior_change = 0.0;
            for (auto k : core) e.interior_change = std::max(e.interior_change, std::abs(S.u[k] - T.states.back().u[k]));
            const auto& prev = T.entries.back();
            if (std::isfinite(prev.interior_change) && e.interior_change > prev.interior_change)
                T.interior_convergence_observed = false;
        }
        e.sweeps = S.sweeps;
        e.sup_linear = S.sup_linear;
        e.sup_constitutive = S.sup_constitutive;
        T.entries.push_back(e);
        T.states.push_back(std::move(S));
    }
    return T;
}

}  // namespace abreu
