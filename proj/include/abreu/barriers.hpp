#pragma once

#include "abreu/domain.hpp"
#include "abreu/estimates.hpp"

#include <Eigen/Dense>
#include <vector>

namespace abreu {

// g(y) = -(prod y_A)^alpha and its Hessian in y.
double product_power(const std::vector<double>& y, double alpha);
Eigen::MatrixXd product_power_hessian(const std::vector<double>& y, double alpha);
// det[(delta_AB / 2 - alpha) / (y_A y_B)] for the k = y.size() entries, in closed form and directly.
double principal_minor_closed_form(const std::vector<double>& y, double alpha);
double principal_minor_direct(const std::vector<double>& y, double alpha);
// sum g_AB h_A h_B - (-alpha g / 2) sum h_A^2 / y_A^2; non-negative for alpha < 1/(2k).
double quadratic_form_margin(const std::vector<double>& y, const std::vector<double>& h, double alpha);

// Largest admissible exponent min(1/(2d), 2L/n) for a polytope barrier.
double polytope_alpha_limit(const ConvexDomain& P);
double polytope_barrier_value(const ConvexDomain& P, const Point& xi, double alpha);
Eigen::Matrix2d polytope_barrier_hessian(const ConvexDomain& P, const Point& xi, double alpha);

struct PolytopeBarrierReport {
    double alpha = 0.0;
    double alpha_limit = 0.0;
    double exponent = 0.0;  // 2L - n alpha
    double min_eig_analytic = 0.0;
    double min_eig_discrete = 0.0;
    double c_analytic = 0.0;  // min det (prod l)^exponent, analytic Hessian
    double c_discrete = 0.0;  // same with the discrete Hessian
    std::size_t nodes = 0;
    EstimateReport report;
};
PolytopeBarrierReport polytope_barrier(const ConvexDomain& P, double alpha, double h);

// -(xi_1 - c |xi'|^2)(-log xi_1)^alpha + xi_1 (-log r)^alpha on {xi_1 > c |xi'|^2, xi_1 < r}.
struct LogEdgeBarrier {
    double c = 1.0, r = 0.3, alpha = 1.0 / 6.0;
    int n = 2;
    double value(const Point& xi) const;
    Eigen::Matrix2d hessian(const Point& xi) const;
    // alpha (2c)^(n-1) / ((-log xi_1)^(1 - n alpha) xi_1)
    double det_bound(const Point& xi) const;
    bool inside(const Point& xi) const;
};
LogEdgeBarrier make_log_edge_barrier(double c, double r, int n, double alpha = -1.0);

struct LogEdgeReport {
    LogEdgeBarrier barrier;
    double value_at_origin = 0.0;
    double min_eig_analytic = 0.0;
    double min_eig_discrete = 0.0;
    double max_det_ratio = 0.0;  // sup of discrete det / det_bound
    std::size_t nodes = 0;
    EstimateReport pd_report;
    EstimateReport det_report;
};
// Samples the barrier on an h-lattice inside its region (nodes with xi_1 >= 2h) and checks
// positive definiteness and the determinant bound with centered differences.
LogEdgeReport log_edge_barrier(double c, double r, int n, double h, double alpha = -1.0);

}  // namespace abreu
