#pragma once

#include "abreu/convex_calculus.hpp"
#include "abreu/grid_function.hpp"
#include "abreu/legendre.hpp"

#include <utility>
#include <vector>

namespace abreu {

// Symmetric coefficient field a^{ij} at interior nodes.
struct CoefficientField {
    int dim = 1;
    std::vector<double> xx, yy, xy;
};
CoefficientField cofactor_field(const HessianField& H);

// NonDivergence: sum a^{ij}(p) D_ij w at every node.
// Hybrid: sum D_ij(a^{ij} w) at core nodes (every lattice neighbour deep), NonDivergence elsewhere.
// Differentiating a^{ij} twice needs neighbouring Hessians free of cut-cell stencils.
enum class OperatorForm { NonDivergence, Hybrid };

struct StencilRow {
    std::vector<std::pair<std::ptrdiff_t, double>> interior;
    std::vector<std::pair<Point, double>> boundary;
    void clear()
    {
        interior.clear();
        boundary.clear();
    }
};
void operator_row(const Grid& g, const CoefficientField& a, std::size_t k, OperatorForm form, StencilRow& row);
// L w at every interior node, boundary values from the trace of w.
std::vector<double> apply_operator(const CoefficientField& a, const GridFunction& w, OperatorForm form);

// -sum D_ij u^{ij} at core nodes; NaN elsewhere.
GridFunction abreu_primal(const GridFunction& u);

struct SystemResidual {
    GridFunction linear;        // sum U^{ij} w_ij + K (hybrid form)
    GridFunction constitutive;  // det(D^2 u) w^{1-theta} - 1
    double sup_linear = 0, l2_linear = 0, sup_constitutive = 0, l2_constitutive = 0;
};
SystemResidual abreu_system_residual(const GridFunction& u, const GridFunction& w, const GridFunction& K, double theta);

double sup_norm(const GridFunction& f);
double l2_norm(const GridFunction& f);

// Curvature of the dual potential, -sum f^{ij} D_ij log det(D^2 f), on the dual lattice.
struct DualCurvature {
    std::vector<double> values;
    std::vector<char> defined;
    std::vector<double> logdet;
    std::vector<Eigen::Matrix2d> hessian;
    std::size_t defined_count() const;
};
DualCurvature abreu_dual(const LegendrePair& pair);

struct KahlerMetric {
    std::vector<Eigen::Matrix2d> g;
    std::vector<double> min_eigenvalue;
    DualCurvature curvature;
    // Mean of f/|x - x0| over shells of width h around the minimizer x0 of f.
    std::vector<double> growth;
    // Fraction of consecutive shells where the growth profile does not decrease.
    double growth_monotone_fraction = 0.0;
};
KahlerMetric kahler_metric(const LegendrePair& pair);

}  // namespace abreu
