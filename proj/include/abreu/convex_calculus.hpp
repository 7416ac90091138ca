#pragma once

#include "abreu/grid_function.hpp"

#include <Eigen/Dense>
#include <vector>

namespace abreu {

// Three-point second difference along direction pair p (0: x, 1: y, 2: (1,1), 3: (1,-1)),
// D = c0 u0 + cp u(+) + cm u(-), with non-uniform spacing at cut links.
struct DirWeights {
    double c0 = 0.0, cp = 0.0, cm = 0.0;
};
DirWeights second_difference_weights(const Grid& g, std::size_t k, int pair);
double second_difference(const GridFunction& u, std::size_t k, int pair);

// Symmetric n x n discrete Hessian; the mixed entry is half the difference of the two diagonal
// second differences.
Eigen::MatrixXd discrete_hessian(const GridFunction& u, std::size_t k);
// Centered first differences, exact for quadratics at cut links too.
Eigen::VectorXd discrete_gradient(const GridFunction& u, std::size_t k);
Point gradient_point(const GridFunction& u, std::size_t k);
Eigen::MatrixXd cofactor(const Eigen::MatrixXd& H);

// Hessian entries at every interior node (xy and yy are zero in 1-D).
struct HessianField {
    int dim = 1;
    std::vector<double> xx, yy, xy;
    double det(std::size_t k) const { return dim == 1 ? xx[k] : xx[k] * yy[k] - xy[k] * xy[k]; }
    double min_eigenvalue(std::size_t k) const;
    Eigen::MatrixXd at(std::size_t k) const;
};
HessianField hessian_field(const GridFunction& u);

struct MAFields {
    GridFunction det;
    GridFunction w;
};
MAFields ma_fields(const GridFunction& u);

bool is_convex(const GridFunction& u, double tol = 1e-10);

struct AffineShift {
    Point p = Point::Zero();
    Point slope = Point::Zero();
    double value = 0.0;
};
// u - slope.(xi - p) - u(p), slope the discrete gradient at node p; the trace is shifted too.
GridFunction normalize_at(const GridFunction& u, std::size_t p, AffineShift* shift = nullptr);

struct Section {
    std::vector<std::size_t> nodes;
    bool compact = false;
};
// Interior nodes with u < b; compact when every boundary sample has u > b.
Section section(const GridFunction& u, std::size_t p, double b, double tol = 1e-9);

double osc(const GridFunction& u);

}  // namespace abreu
