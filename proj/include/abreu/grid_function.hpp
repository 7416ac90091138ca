#pragma once

#include "abreu/grid.hpp"
#include "abreu/types.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace abreu {

// Values at interior nodes plus a boundary trace evaluated at cut points and boundary nodes.
// Derived fields mark nodes outside their stencil reach with NaN.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(GridPtr grid, std::vector<double> values, ScalarFn trace = {});
    static GridFunction sample(GridPtr grid, const ScalarFn& fn);
    static GridFunction constant(GridPtr grid, double c);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    double& operator[](std::size_t k) { return values_[k]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    bool has_trace() const { return static_cast<bool>(trace_); }
    const ScalarFn& trace() const { return trace_; }
    void set_trace(ScalarFn t) { trace_ = std::move(t); }
    double trace_at(const Point& p) const;
    // Value across link d of node k: an interior value or the trace at the boundary point.
    double neighbour(std::size_t k, int d) const;
    bool defined(std::size_t k) const { return std::isfinite(values_[k]); }

    double max() const;
    double min() const;

private:
    GridPtr grid_;
    std::vector<double> values_;
    ScalarFn trace_;
};

inline constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

}  // namespace abreu
