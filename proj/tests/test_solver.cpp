#include "abreu/errors.hpp"
#include "abreu/solver.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace abreu;

namespace {

BVPProblem interval_problem(double h, double t, double theta = 0.0)
{
    BVPProblem p;
    p.grid = build_grid(ConvexDomain::interval(-1, 1), h);
    p.K = GridFunction::constant(p.grid, 2.0);
    p.phi = [](const Point&) { return std::log(2.0); };
    p.psi = [t](const Point&) { return t; };
    p.theta = theta;
    return p;
}

}  // namespace

TEST_CASE("linearized solve with the identity cofactor")
{
    auto g = build_grid(ConvexDomain::disk(Point(0, 0), 1), 1.0 / 16);
    auto u = GridFunction::sample(g, [](const Point& p) { return 0.5 * p.squaredNorm(); });
    auto K = GridFunction::constant(g, 4.0);
    auto w = linearized_solve(u, K, [](const Point&) { return 0.0; });
    for (std::size_t k = 0; k < g->size(); ++k) CHECK(w[k] == doctest::Approx(1.0 - g->position(k).squaredNorm()).epsilon(1e-10));
}

TEST_CASE("Monge-Ampere solve reproduces a quadratic")
{
    auto g = build_grid(ConvexDomain::disk(Point(0.1, 0), 0.8), 1.0 / 16);
    ScalarFn phi = [](const Point& p) { return 0.5 * p.squaredNorm(); };
    auto rhs = GridFunction::constant(g, 1.0);
    NewtonReport rep;
    auto opt = default_options(2);
    opt.inner_tol = 1e-12;
    auto u = ma_solve(rhs, phi, initial_guess(g, phi), opt, &rep);
    CHECK(rep.iterations > 0);
    for (std::size_t k = 0; k < g->size(); ++k) CHECK(std::abs(u[k] - phi(g->position(k))) < 1e-8);
}

TEST_CASE("Monge-Ampere solve rejects a nonconvex start")
{
    auto g = build_grid(ConvexDomain::unit_square(), 0.125);
    ScalarFn phi = [](const Point&) { return 0.0; };
    auto u0 = GridFunction::sample(g, [](const Point& p) { return -p.squaredNorm(); });
    u0.set_trace(phi);
    try {
        ma_solve(GridFunction::constant(g, 1.0), phi, u0, default_options(2));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonConvexInput);
    }
}

TEST_CASE("1-D problem matches the closed-form family")
{
    const double t = 0.1, h = 1.0 / 100;
    auto prob = interval_problem(h, t);
    auto st = solve_bvp(prob, default_options(1));
    const auto& g = *prob.grid;
    double werr = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) werr = std::max(werr, std::abs(st.w[k] - oracle::family_w(g.position(k).x(), t)));
    CHECK(werr < 1e-9);
    // The additive constant is fitted by midrange.
    double lo = 1e300, hi = -1e300;
    for (std::size_t k = 0; k < g.size(); ++k) {
        double x = g.position(k).x();
        if (std::abs(x) > 0.9) continue;
        double d = st.u[k] - oracle::family_u(x, t);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    CHECK(hi - lo < 2e-4);
    for (std::size_t i = 1; i < st.residual_history.size(); ++i) CHECK(st.residual_history[i] <= st.residual_history[i - 1]);
    CHECK(st.sup_linear <= 1e-6 * 2);
    CHECK(st.sup_constitutive <= 1e-6);
}

TEST_CASE("warm start from a converged state is immediate")
{
    auto prob = interval_problem(1.0 / 50, 0.05);
    auto opt = default_options(1);
    auto st = solve_bvp(prob, opt);
    auto again = solve_bvp(prob, opt, &st);
    CHECK(again.sweeps <= 2);
    for (std::size_t k = 0; k < st.u.size(); ++k) CHECK(again.u[k] == doctest::Approx(st.u[k]).epsilon(1e-8));
}

TEST_CASE("theta continuation respects the weight bounds")
{
    auto prob = interval_problem(1.0 / 50, 0.1);
    auto tr = theta_continuation(prob, {0.5, 0.1, 0.0}, default_options(1));
    REQUIRE(tr.entries.size() == 3);
    for (const auto& e : tr.entries) {
        CHECK(e.upper_ok);
        CHECK(e.lower_ok);
        CHECK(e.w_min >= 0.1 * (1 - 1e-8));
    }
    for (std::size_t k = 0; k < tr.states[0].w.size(); ++k)
        CHECK(std::abs(tr.states[2].w[k] - tr.states[0].w[k]) < 1e-8);
    CHECK_THROWS_AS(theta_continuation(prob, {0.1, 0.5}, default_options(1)), Error);
    CHECK_THROWS_AS(theta_continuation(prob, {1.5}, default_options(1)), Error);
}

TEST_CASE("2-D disk solve converges with a monotone history and w above its boundary data")
{
    BVPProblem p;
    p.grid = build_grid(ConvexDomain::disk(Point(0, 0), 1), 1.0 / 16);
    p.K = GridFunction::constant(p.grid, 4.0);
    p.phi = [](const Point&) { return 0.0; };
    p.psi = [](const Point&) { return 0.1; };
    auto opt = default_options(2);
    auto st = solve_bvp(p, opt);
    CHECK(st.sup_linear <= opt.outer_tol * 4);
    CHECK(st.sup_constitutive <= opt.outer_tol);
    for (std::size_t i = 1; i < st.residual_history.size(); ++i) CHECK(st.residual_history[i] <= st.residual_history[i - 1]);
    CHECK(st.w.min() >= 0.1 - 1e-10);
    CHECK(is_convex(st.u));
}

TEST_CASE("solver argument errors")
{
    auto prob = interval_problem(0.1, 0.1);
    prob.theta = 2.0;
    CHECK_THROWS_AS(solve_bvp(prob, default_options(1)), Error);
    auto g = prob.grid;
    CHECK_THROWS_AS(t_continuation(g, prob.K, prob.phi, {0.1, 0.2}, default_options(1)), Error);
    CHECK_THROWS_AS(t_continuation(g, prob.K, prob.phi, {}, default_options(1)), Error);
    CHECK_THROWS_AS(t_continuation(g, prob.K, prob.phi, {-0.1}, default_options(1)), Error);
}

TEST_CASE("t continuation in 1-D")
{
    auto g = build_grid(ConvexDomain::interval(-1, 1), 1.0 / 100);
    auto K = GridFunction::constant(g, 2.0);
    auto tr = t_continuation(g, K, [](const Point&) { return std::log(2.0); }, {1e-1, 1e-2, 1e-3}, default_options(1));
    REQUIRE(tr.entries.size() == 3);
    for (const auto& e : tr.entries) CHECK(e.w_boundary == doctest::Approx(e.t));
    CHECK(tr.entries[2].grad_near_boundary >= tr.entries[1].grad_near_boundary);
    CHECK(tr.entries[1].grad_near_boundary >= tr.entries[0].grad_near_boundary);
    CHECK(tr.interior_convergence_observed);
}

TEST_CASE("both solves converge at second order on a curved domain")
{
    ScalarFn U = [](const Point& p) { return std::exp(0.5 * p.x()) + 0.5 * p.squaredNorm() + 0.25 * std::pow(p.y(), 4); };
    auto hess = [](const Point& p) { return std::make_pair(0.25 * std::exp(0.5 * p.x()) + 1.0, 1.0 + 3.0 * p.y() * p.y()); };
    ScalarFn W = [](const Point& p) { return 1.0 + std::cos(p.x()) * std::sin(p.y() + 0.3); };
    // Both Hessians are diagonal, so the cofactor is diag(u_yy, u_xx).
    ScalarFn Kf = [&](const Point& p) {
        auto [uxx, uyy] = hess(p);
        const double lap = -std::cos(p.x()) * std::sin(p.y() + 0.3);
        return -(uyy * lap + uxx * lap);
    };
    std::vector<double> ma_err, lin_err;
    for (int n : {16, 32}) {
        auto g = build_grid(ConvexDomain::disk(Point(0.1, 0), 1), 1.0 / n);
        auto opt = default_options(2);
        opt.inner_tol = 1e-10;
        auto rhs = GridFunction::sample(g, [&](const Point& p) {
            auto [a, b] = hess(p);
            return a * b;
        });
        auto u = ma_solve(rhs, U, initial_guess(g, U), opt);
        auto w = linearized_solve(GridFunction::sample(g, U), GridFunction::sample(g, Kf), W);
        double em = 0.0, el = 0.0;
        for (std::size_t k = 0; k < g->size(); ++k) {
            em = std::max(em, std::abs(u[k] - U(g->position(k))));
            el = std::max(el, std::abs(w[k] - W(g->position(k))));
        }
        ma_err.push_back(em);
        lin_err.push_back(el);
    }
    CHECK(ma_err[0] / ma_err[1] > 3.5);
    CHECK(lin_err[0] / lin_err[1] > 3.5);
    CHECK(lin_err[1] < 5e-5);
}

TEST_CASE("disk solution matches the radial shooting profile")
{
    const double K = 4.0, t = 0.1;
    auto ref = oracle::radial_solution(K, t);
    REQUIRE(ref.reached);
    std::vector<double> err;
    for (int n : {16, 32}) {
        BVPProblem p;
        p.grid = build_grid(ConvexDomain::disk(Point(0, 0), 1), 1.0 / n);
        p.K = GridFunction::constant(p.grid, K);
        p.phi = [](const Point&) { return 0.0; };
        p.psi = [t](const Point&) { return t; };
        auto opt = default_options(2);
        opt.outer_tol = 1e-8;
        opt.inner_tol = 1e-10;
        auto st = solve_bvp(p, opt);
        std::size_t c = 0;
        for (std::size_t k = 0; k < p.grid->size(); ++k)
            if (p.grid->position(k).norm() < p.grid->position(c).norm()) c = k;
        err.push_back(std::abs(st.w[c] - ref.w0));
        CHECK(st.u.max() - st.u[c] == doctest::Approx(ref.osc).epsilon(2e-2));
    }
    CHECK(err[1] < 3e-3);
    CHECK(err[0] / err[1] > 3.0);
}
