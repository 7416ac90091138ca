#pragma once

#include "abreu/grid_function.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace abreu {

// Uniform rectangular lattice in the gradient variable x.
struct DualGrid {
    int dim = 1;
    double h = 0.0;
    Point origin = Point::Zero();
    int nx = 1, ny = 1;

    std::size_t size() const { return std::size_t(nx) * ny; }
    std::size_t index(int i, int j) const { return std::size_t(j) * nx + i; }
    Point node(int i, int j) const { return origin + h * Point(i, dim == 1 ? 0 : j); }
    Point node(std::size_t l) const { return node(int(l % nx), int(l / nx)); }
    bool inside(int i, int j) const { return i >= 0 && j >= 0 && i < nx && j < ny; }
    // Lattice aligned to multiples of h covering [lo, hi].
    static DualGrid covering(int dim, double h, const Point& lo, const Point& hi);
};

struct LegendreOptions {
    double dual_h = 0.05;
    // Overrides the default window (gradient range padded by one cell).
    std::optional<std::pair<Point, Point>> window;
    // f is taken relative to this base point: f(x) = max <x, xi - base> - u(xi).
    Point base = Point::Zero();
    // Half width of the local interpolation patch used to polish the maximizer; 0 keeps the
    // brute-force value.
    int refine = 0;
};

struct LegendrePair {
    DualGrid dual;
    Point base = Point::Zero();
    std::vector<double> f;
    // Nodes where f is trusted; with refinement off every node is valid.
    std::vector<char> valid;
    // Primal sample attaining the discrete maximum (the source map).
    std::vector<Point> source;
    // Maximizer after refinement (equal to source otherwise).
    std::vector<Point> touch;

    static LegendrePair from_function(const DualGrid& dual, const ScalarFn& f);
    // Bilinear interpolation of a dual-node field; NaN unless all corners are finite.
    double interpolate(const std::vector<double>& field, const Point& x) const;
};

// Primal samples: interior nodes and boundary samples (trace values), sorted lexicographically.
struct SampleSet {
    std::vector<Point> pts;
    std::vector<double> vals;
};
SampleSet primal_samples(const GridFunction& u);

LegendrePair legendre_transform(const GridFunction& u, const LegendreOptions& opt);
// Brute-force conjugate at arbitrary points.
std::vector<double> conjugate_at(const GridFunction& u, const std::vector<Point>& xs, const Point& base = Point::Zero());
double conjugate_at(const GridFunction& u, const Point& x, const Point& base = Point::Zero());
// Conjugate of the dual function (over valid dual nodes) evaluated at primal points.
std::vector<double> biconjugate_at(const LegendrePair& pair, const std::vector<Point>& pts);

// sup over interior nodes of |grad u|^2 / (d + f(grad u))^2, f relative to base.
double gradient_legendre_ratio(const GridFunction& u, double d, const Point& base = Point::Zero());

}  // namespace abreu
