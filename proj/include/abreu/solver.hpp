#pragma once

#include "abreu/abreu_core.hpp"
#include "abreu/grid_function.hpp"

#include <optional>
#include <vector>

namespace abreu {

struct SolverOptions {
    // Newton tolerance on |det - rhs| / max(1, rhs).
    double inner_tol = 1e-8;
    // Outer tolerance on the linear residual (relative to max(1, sup|K|)) and the constitutive residual.
    double outer_tol = 1e-6;
    int max_newton = 60;
    int max_halvings = 40;
    int max_outer = 200;
    // Stalled when the residual drops by less than stall_drop over stall_window sweeps.
    int stall_window = 10;
    double stall_drop = 0.01;
    // Initial weight of the new w in each sweep.
    double relax = 1.0;
};
SolverOptions default_options(int dim);

struct BVPProblem {
    GridPtr grid;
    GridFunction K;
    ScalarFn phi;  // Dirichlet data for u
    ScalarFn psi;  // Dirichlet data for w
    double theta = 0.0;
};

struct SolverState {
    GridFunction u;
    GridFunction w;
    double theta = 0.0;
    int sweeps = 0;
    int newton_iterations = 0;
    // Outer residual after every accepted sweep.
    std::vector<double> residual_history;
    double sup_linear = 0.0;
    double sup_constitutive = 0.0;
};

struct NewtonReport {
    int iterations = 0;
    double residual = 0.0;
};

// Solves sum U^{ij}(D^2 u) w_ij = -K with w = bc on the boundary.
GridFunction linearized_solve(const GridFunction& u, const GridFunction& K, const ScalarFn& bc);
// Damped Newton for det(D^2 u) = rhs, u = phi on the boundary, starting from a convex u0.
GridFunction ma_solve(const GridFunction& rhs, const ScalarFn& phi, const GridFunction& u0, const SolverOptions& opt,
                      NewtonReport* report = nullptr);
// phi + (|xi - c|^2 - R^2) / 2 with the circumscribed ball (c, R).
GridFunction initial_guess(const GridPtr& grid, const ScalarFn& phi);
SolverState solve_bvp(const BVPProblem& prob, const SolverOptions& opt, const SolverState* warm = nullptr);

struct ThetaEntry {
    double theta = 0.0;
    int sweeps = 0;
    double w_min = 0.0, w_max = 0.0;
    double psi_min = 0.0;
    double upper_bound = 0.0;
    bool upper_ok = false;
    bool lower_ok = false;
    double sup_linear = 0.0, sup_constitutive = 0.0;
};
struct ThetaTrace {
    std::vector<ThetaEntry> entries;
    std::vector<SolverState> states;
};
std::vector<double> default_theta_schedule();
// Solves along a decreasing theta schedule, warm starting each entry from the previous one.
ThetaTrace theta_continuation(const BVPProblem& prob, const std::vector<double>& schedule, const SolverOptions& opt);

struct TEntry {
    double t = 0.0;
    double osc = 0.0;
    double grad_near_boundary = 0.0;
    double gradient_bound = 0.0;  // R (1/t)^(1/n)
    double det_min = 0.0, det_max = 0.0;
    double w_boundary = 0.0;
    double w_max = 0.0;
    // sup |u_t - u_prev| over nodes at depth >= a quarter of the deepest node; NaN for the first entry.
    double interior_change = 0.0;
    int sweeps = 0;
    double sup_linear = 0.0, sup_constitutive = 0.0;
};
struct TTrace {
    std::vector<TEntry> entries;
    std::vector<SolverState> states;
    bool interior_convergence_observed = true;
};
std::vector<double> default_t_schedule();
// theta = 0, w = t on the boundary, along a decreasing t schedule.
TTrace t_continuation(const GridPtr& grid, const GridFunction& K, const ScalarFn& phi, const std::vector<double>& schedule,
                      const SolverOptions& opt);

}  // namespace abreu
