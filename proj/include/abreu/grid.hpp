#pragma once

#include "abreu/domain.hpp"
#include "abreu/types.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace abreu {

enum class NodeClass : std::uint8_t { Interior, Boundary, Exterior };

// Lattice directions. Axis pairs come first; the diagonal pairs exist only in 2-D.
enum Dir : int { XP = 0, XM, YP, YM, DP, DM, AP, AM };
inline constexpr int kDirStep[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};

// Neighbour of an interior node along one lattice direction. When the step leaves the open
// domain, node is -1 and `at` is the boundary point reached after `frac` of the step.
struct Link {
    std::ptrdiff_t node = -1;
    double frac = 1.0;
    Point at = Point::Zero();
    bool cut() const { return node < 0; }
};

struct BoundaryNode {
    std::ptrdiff_t lattice = -1;
    Point at = Point::Zero();
    Point normal = Point::Zero();
};

class Grid {
public:
    Grid(ConvexDomain domain, double h);

    int dim() const { return dim_; }
    double h() const { return h_; }
    const Point& origin() const { return origin_; }
    std::array<int, 2> shape() const { return {nx_, ny_}; }
    const ConvexDomain& domain() const { return domain_; }
    int ndirs() const { return dim_ == 1 ? 2 : 8; }

    // Interior nodes are the unknowns; k indexes them in lattice order.
    std::size_t size() const { return interior_.size(); }
    const Point& position(std::size_t k) const { return pos_[k]; }
    const Link& link(std::size_t k, int dir) const { return links_[k][dir]; }
    std::array<int, 2> lattice_coords(std::size_t k) const;
    std::ptrdiff_t lattice_index(std::size_t k) const { return interior_[k]; }
    std::ptrdiff_t interior_at(int i, int j) const;
    NodeClass node_class(int i, int j) const;
    Point lattice_point(int i, int j) const { return origin_ + h_ * Point(i, j); }

    // True when every lattice neighbour (3^n block) is an interior node.
    bool deep(std::size_t k) const { return deep_[k] != 0; }
    // True when every lattice neighbour is deep, so neighbouring Hessians use uniform stencils.
    bool core(std::size_t k) const { return core_[k] != 0; }
    // True when the (2m+1)^n lattice block around k lies in interior nodes.
    bool block_interior(std::size_t k, int m) const;
    bool touches_boundary(std::size_t k) const;
    double boundary_distance(std::size_t k) const { return domain_.signed_distance(pos_[k]); }

    const std::vector<BoundaryNode>& boundary_nodes() const { return bnodes_; }
    // Boundary lattice nodes followed by all distinct cut points.
    const std::vector<Point>& boundary_samples() const { return bsamples_; }

private:
    ConvexDomain domain_;
    int dim_;
    double h_;
    Point origin_;
    int nx_ = 1, ny_ = 1;
    std::vector<NodeClass> cls_;
    std::vector<std::ptrdiff_t> lat2int_;
    std::vector<std::ptrdiff_t> interior_;
    std::vector<Point> pos_;
    std::vector<std::array<Link, 8>> links_;
    std::vector<char> deep_;
    std::vector<char> core_;
    std::vector<BoundaryNode> bnodes_;
    std::vector<Point> bsamples_;
};

using GridPtr = std::shared_ptr<const Grid>;

// Validates h and builds the lattice with cut fractions.
GridPtr build_grid(const ConvexDomain& domain, double h);

}  // namespace abreu
