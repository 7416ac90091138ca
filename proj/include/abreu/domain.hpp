#pragma once

#include "abreu/types.hpp"

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace abreu {

enum class DomainKind { Interval, Disk, Polygon, Delzant };

// Affine facet function l(xi) = normal . xi - offset, non-negative on the domain.
struct Facet {
    Point normal;
    double offset = 0.0;
    double value(const Point& p) const { return normal.dot(p) - offset; }
};

class ConvexDomain {
public:
    static ConvexDomain interval(double a, double b);
    static ConvexDomain disk(const Point& center, double radius);
    static ConvexDomain polygon(const std::vector<Point>& vertices);
    // Integer primitive facet normals are derived from the edges; throws unless every vertex is unimodular.
    static ConvexDomain delzant(const std::vector<Point>& vertices);
    static ConvexDomain unit_square();
    static ConvexDomain from_json(const nlohmann::json& j);
    static ConvexDomain from_file(const std::string& path);
    nlohmann::json to_json() const;

    DomainKind kind() const { return kind_; }
    int dim() const { return kind_ == DomainKind::Interval ? 1 : 2; }
    bool is_polytope() const { return kind_ == DomainKind::Polygon || kind_ == DomainKind::Delzant; }

    // Distance to the boundary, positive inside, negative outside (exact inside, a lower bound outside).
    double signed_distance(const Point& p) const;
    bool contains(const Point& p, double tol = 0.0) const { return signed_distance(p) >= -tol; }
    // Smallest s in (0, 1] with p + s v on the boundary; returns +inf when the segment stays inside.
    double exit_fraction(const Point& p, const Point& v) const;
    Point outward_normal(const Point& p) const;

    double diameter() const;
    // Radius and center of the smallest ball containing the domain.
    double circumradius() const { return circ_radius_; }
    Point circumcenter() const { return circ_center_; }
    std::pair<Point, Point> bounding_box() const;

    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    std::vector<double> facet_values(const Point& p) const;
    // Number of vertices lying on facet a.
    int vertices_on_facet(int a) const;
    // min_A v_A / v.
    double vertex_ratio() const;
    bool is_delzant() const { return kind_ == DomainKind::Delzant; }

    double disk_radius() const { return radius_; }
    Point disk_center() const { return center_; }

private:
    void finish_polygon(const std::vector<Point>& vertices, bool integral);
    void compute_circumball();

    DomainKind kind_ = DomainKind::Interval;
    Point center_ = Point::Zero();
    double radius_ = 0.0;
    double lo_ = 0.0, hi_ = 0.0;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    Point circ_center_ = Point::Zero();
    double circ_radius_ = 0.0;
};

// Integer normals (a, b), (c, d) of two facets meeting at a vertex span Z^2.
bool unimodular_pair(const Point& a, const Point& b);

}  // namespace abreu
