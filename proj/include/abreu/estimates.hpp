#pragma once

#include "abreu/grid_function.hpp"
#include "abreu/solver.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace abreu {

enum class Verdict { Pass, Fail, NotApplicable };
const char* verdict_name(Verdict v);

struct EstimateReport {
    std::string check;
    std::string hypotheses = "satisfied";
    double observed = 0.0;
    double bound = 0.0;
    Verdict verdict = Verdict::NotApplicable;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json to_json() const;
};

// (4 Kmax diam^2 / n)^(-n).
double d1_constant(double Kmax, double diam, int n);

// min det(D^2 u) against d1; pass when min det >= 0.9 d1. Not applicable unless K > 0.
EstimateReport check_det_lower(const GridFunction& u, const GridFunction& K);

// u normalized at p. Reports max det over the section {u < C/2}; throws when {u <= C} is not
// compact, not applicable when |grad u|^2 exceeds b on that section.
EstimateReport check_det_upper_section(const GridFunction& u, std::size_t p, double C, double b);
// Combines reports from successively refined grids: pass when the last two observations agree within rel.
EstimateReport refinement_stability(const std::vector<EstimateReport>& reports, double rel = 0.10);

// sup over {u < C} of exp(-4C / (C - u)) det / (d + f)^(2n), f the conjugate relative to p.
EstimateReport weighted_det_functional(const GridFunction& u, std::size_t p, double C, double d = 1.0);
// 2-D: sup over |xi| < r of (r^2 - |xi|^2)^2 det / (d + f)^4, f relative to the origin.
EstimateReport weighted_det_2d(const GridFunction& u, double r, double d);

// Max |grad u| at nodes next to the boundary against R (1/t)^(1/n).
EstimateReport cone_gradient_bound(const GridFunction& u, double t);

// Smallest b1 with det >= 1 / (b1 dist^alpha); alpha in [0, 1/(2(n+1))).
EstimateReport boundary_det_lower(const GridFunction& u, double alpha);
// Polytope form: det >= 1 / (b1 (prod l_A)^alpha).
EstimateReport boundary_det_lower_polytope(const GridFunction& u, double alpha);

// Pass when osc(u) over the last three trace entries varies by at most rel.
EstimateReport uniform_osc_bound(const TTrace& trace, double rel = 0.05);

// Comparison of a candidate subsolution a with b on a node set: checks det D^2 a >= det D^2 b on
// `inner` (relative to max(1, det D^2 b)), a <= b on `rim`, and reports whether a <= b holds on `inner`.
EstimateReport compare_subsolution(const GridFunction& a, const GridFunction& b, const std::vector<std::size_t>& inner,
                                   const std::vector<std::size_t>& rim, double tol = 1e-12);

}  // namespace abreu
