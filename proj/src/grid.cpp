#include "abreu/grid.hpp"

#include "abreu/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace abreu {

namespace {
constexpr const char* kModule = "domain_grid";
}

Grid::Grid(ConvexDomain domain, double h) : domain_(std::move(domain)), dim_(domain_.dim()), h_(h)
{
    auto [lo, hi] = domain_.bounding_box();
    origin_ = lo;
    if (dim_ == 1) origin_.y() = 0.0;
    nx_ = int(std::floor((hi.x() - lo.x()) / h_ + 1e-9)) + 1;
    ny_ = dim_ == 1 ? 1 : int(std::floor((hi.y() - lo.y()) / h_ + 1e-9)) + 1;

    const double tol = 1e-9 * h_;
    cls_.assign(std::size_t(nx_) * ny_, NodeClass::Exterior);
    lat2int_.assign(cls_.size(), -1);
    for (int j = 0; j < ny_; ++j) {
        for (int i = 0; i < nx_; ++i) {
            std::size_t l = std::size_t(j) * nx_ + i;
            Point p = lattice_point(i, j);
            double sd = domain_.signed_distance(p);
            if (sd > tol) {
                cls_[l] = NodeClass::Interior;
                lat2int_[l] = std::ptrdiff_t(interior_.size());
                interior_.push_back(std::ptrdiff_t(l));
                pos_.push_back(p);
            } else if (sd >= -tol) {
                cls_[l] = NodeClass::Boundary;
                bnodes_.push_back(BoundaryNode{std::ptrdiff_t(l), p, domain_.outward_normal(p)});
            }
        }
    }

    links_.resize(interior_.size());
    deep_.assign(interior_.size(), 1);
    std::map<std::pair<double, double>, bool> seen;
    for (const auto& b : bnodes_) {
        seen[{b.at.x(), b.at.y()}] = true;
        bsamples_.push_back(b.at);
    }
    std::vector<Point> cuts;
    for (std::size_t k = 0; k < interior_.size(); ++k) {
        auto [i, j] = lattice_coords(k);
        for (int d = 0; d < ndirs(); ++d) {
            int ii = i + kDirStep[d][0], jj = j + kDirStep[d][1];
            Link& L = links_[k][d];
            std::ptrdiff_t q = interior_at(ii, jj);
            if (q >= 0) {
                L = Link{q, 1.0, lattice_point(ii, jj)};
                continue;
            }
            deep_[k] = 0;
            Point step = h_ * Point(kDirStep[d][0], kDirStep[d][1]);
            double s = domain_.exit_fraction(pos_[k], step);
            if (!std::isfinite(s)) s = 1.0;
            // Boundary lattice nodes are reached after exactly one step.
            if (node_class(ii, jj) == NodeClass::Boundary) s = 1.0;
            s = std::max(s, 1e-12);
            L = Link{-1, s, s >= 1.0 ? lattice_point(ii, jj) : Point(pos_[k] + s * step)};
            if (!seen.count({L.at.x(), L.at.y()})) {
                seen[{L.at.x(), L.at.y()}] = true;
                cuts.push_back(L.at);
            }
        }
    }
    bsamples_.insert(bsamples_.end(), cuts.begin(), cuts.end());
    core_.assign(interior_.size(), 0);
    for (std::size_t k = 0; k < interior_.size(); ++k) {
        if (!deep_[k]) continue;
        bool all = true;
        for (int d = 0; d < ndirs(); ++d) all = all && deep_[std::size_t(links_[k][d].node)];
        core_[k] = all;
    }
}

std::array<int, 2> Grid::lattice_coords(std::size_t k) const
{
    std::ptrdiff_t l = interior_[k];
    return {int(l % nx_), int(l / nx_)};
}

std::ptrdiff_t Grid::interior_at(int i, int j) const
{
    if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return -1;
    return lat2int_[std::size_t(j) * nx_ + i];
}

NodeClass Grid::node_class(int i, int j) const
{
    if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return NodeClass::Exterior;
    return cls_[std::size_t(j) * nx_ + i];
}

bool Grid::block_interior(std::size_t k, int m) const
{
    auto [i, j] = lattice_coords(k);
    int mj = dim_ == 1 ? 0 : m;
    for (int b = -mj; b <= mj; ++b)
        for (int a = -m; a <= m; ++a)
            if (interior_at(i + a, j + b) < 0) return false;
    return true;
}

bool Grid::touches_boundary(std::size_t k) const
{
    for (int d = 0; d < 2 * dim_; ++d)
        if (links_[k][d].cut()) return true;
    return false;
}

GridPtr build_grid(const ConvexDomain& domain, double h)
{
    if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorKind::Config, kModule, "grid spacing must be positive");
    const double diam = domain.diameter();
    if (h > diam / 4.0 * (1.0 + 1e-12))
        throw Error(ErrorKind::Config, kModule, "grid spacing must not exceed diam/4");
    auto g = std::make_shared<const Grid>(domain, h);
    // Longest run of interior nodes along each axis.
    auto [nx, ny] = g->shape();
    int best_x = 0, best_y = 0;
    for (int j = 0; j < ny; ++j) {
        int c = 0;
        for (int i = 0; i < nx; ++i) c += g->interior_at(i, j) >= 0;
        best_x = std::max(best_x, c);
    }
    for (int i = 0; i < nx; ++i) {
        int c = 0;
        for (int j = 0; j < ny; ++j) c += g->interior_at(i, j) >= 0;
        best_y = std::max(best_y, c);
    }
    if (best_x < 3 || (g->dim() == 2 && best_y < 3))
        throw Error(ErrorKind::Config, kModule, "fewer than 3 interior nodes per axis");
    return g;
}

}  // namespace abreu
