#include "abreu/grid_function.hpp"

#include "abreu/errors.hpp"

#include <algorithm>

namespace abreu {

GridFunction::GridFunction(GridPtr grid, std::vector<double> values, ScalarFn trace)
    : grid_(std::move(grid)), values_(std::move(values)), trace_(std::move(trace))
{
    if (!grid_ || values_.size() != grid_->size())
        throw Error(ErrorKind::InvalidArgument, "convex_calculus", "value count does not match the grid");
}

GridFunction GridFunction::sample(GridPtr grid, const ScalarFn& fn)
{
    std::vector<double> v(grid->size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = fn(grid->position(k));
    return GridFunction(std::move(grid), std::move(v), fn);
}

GridFunction GridFunction::constant(GridPtr grid, double c)
{
    std::vector<double> v(grid->size(), c);
    return GridFunction(std::move(grid), std::move(v), [c](const Point&) { return c; });
}

double GridFunction::trace_at(const Point& p) const
{
    if (!trace_) throw Error(ErrorKind::StencilIncomplete, "convex_calculus", "grid function has no boundary trace");
    return trace_(p);
}

double GridFunction::neighbour(std::size_t k, int d) const
{
    const Link& L = grid_->link(k, d);
    return L.cut() ? trace_at(L.at) : values_[L.node];
}

double GridFunction::max() const
{
    double m = -std::numeric_limits<double>::infinity();
    for (double v : values_)
        if (std::isfinite(v)) m = std::max(m, v);
    return m;
}

double GridFunction::min() const
{
    double m = std::numeric_limits<double>::infinity();
    for (double v : values_)
        if (std::isfinite(v)) m = std::min(m, v);
    return m;
}

}  // namespace abreu
