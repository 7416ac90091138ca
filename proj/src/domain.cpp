#include "abreu/domain.hpp"

#include "abreu/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

namespace abreu {

namespace {

constexpr const char* kModule = "domain_grid";

[[noreturn]] void config_error(const std::string& msg)
{
    throw Error(ErrorKind::Config, kModule, msg);
}

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

// Smallest integer multiple of the direction n, made primitive.
bool integer_direction(const Point& n, Point& out)
{
    double m = std::max(std::abs(n.x()), std::abs(n.y()));
    if (m <= 0.0) return false;
    Point u = n / m;
    for (int k = 1; k <= 1000; ++k) {
        double a = k * u.x(), b = k * u.y();
        double ra = std::round(a), rb = std::round(b);
        if (std::abs(a - ra) < 1e-9 * k && std::abs(b - rb) < 1e-9 * k) {
            long ia = std::lround(ra), ib = std::lround(rb);
            long g = std::gcd(std::abs(ia), std::abs(ib));
            if (g == 0) return false;
            out = Point(double(ia / g), double(ib / g));
            return true;
        }
    }
    return false;
}

}  // namespace

bool unimodular_pair(const Point& a, const Point& b)
{
    return std::abs(std::abs(cross(a, b)) - 1.0) < 1e-9;
}

ConvexDomain ConvexDomain::interval(double a, double b)
{
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) config_error("interval needs finite a < b");
    ConvexDomain d;
    d.kind_ = DomainKind::Interval;
    d.lo_ = a;
    d.hi_ = b;
    d.vertices_ = {Point(a, 0.0), Point(b, 0.0)};
    d.facets_ = {Facet{Point(1.0, 0.0), a}, Facet{Point(-1.0, 0.0), -b}};
    d.center_ = Point(0.5 * (a + b), 0.0);
    d.radius_ = 0.5 * (b - a);
    d.compute_circumball();
    return d;
}

ConvexDomain ConvexDomain::disk(const Point& center, double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius) || !center.allFinite()) config_error("disk needs a positive radius");
    ConvexDomain d;
    d.kind_ = DomainKind::Disk;
    d.center_ = center;
    d.radius_ = radius;
    d.compute_circumball();
    return d;
}

ConvexDomain ConvexDomain::polygon(const std::vector<Point>& vertices)
{
    ConvexDomain d;
    d.kind_ = DomainKind::Polygon;
    d.finish_polygon(vertices, false);
    return d;
}

ConvexDomain ConvexDomain::delzant(const std::vector<Point>& vertices)
{
    ConvexDomain d;
    d.kind_ = DomainKind::Delzant;
    d.finish_polygon(vertices, true);
    const std::size_t m = d.facets_.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (!unimodular_pair(d.facets_[i].normal, d.facets_[(i + 1) % m].normal))
            config_error("vertex " + std::to_string((i + 1) % m) + " is not unimodular");
    }
    return d;
}

ConvexDomain ConvexDomain::unit_square()
{
    return delzant({Point(0, 1), Point(0, 0), Point(1, 0), Point(1, 1)});
}

void ConvexDomain::finish_polygon(const std::vector<Point>& v, bool integral)
{
    const std::size_t m = v.size();
    if (m < 3) config_error("polygon needs at least 3 vertices");
    for (const auto& p : v)
        if (!p.allFinite()) config_error("non-finite vertex");
    double area2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) area2 += cross(v[i], v[(i + 1) % m]);
    if (std::abs(area2) < 1e-14) config_error("degenerate polygon");
    const double orient = area2 > 0 ? 1.0 : -1.0;
    vertices_ = v;
    facets_.clear();
    // Facet i runs from vertex i to vertex i+1.
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % m];
        Point e = b - a;
        if (e.norm() < 1e-14) config_error("repeated vertex");
        Point n = orient * Point(-e.y(), e.x());
        if (integral) {
            Point ni;
            if (!integer_direction(n, ni)) config_error("edge direction is not rational");
            n = ni;
        } else {
            n /= n.norm();
        }
        facets_.push_back(Facet{n, n.dot(a)});
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double val = facets_[i].value(v[j]) / facets_[i].normal.norm();
            if (val < -1e-9) config_error("polygon is not convex");
        }
    }
    center_ = Point::Zero();
    for (const auto& p : v) center_ += p;
    center_ /= double(m);
    compute_circumball();
}

void ConvexDomain::compute_circumball()
{
    if (kind_ == DomainKind::Interval || kind_ == DomainKind::Disk) {
        circ_center_ = center_;
        circ_radius_ = radius_;
        return;
    }
    const auto& v = vertices_;
    auto encloses = [&](const Point& c, double r) {
        for (const auto& p : v)
            if ((p - c).norm() > r * (1 + 1e-12) + 1e-14) return false;
        return true;
    };
    double best = std::numeric_limits<double>::infinity();
    Point bc = center_;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Point c = 0.5 * (v[i] + v[j]);
            double r = 0.5 * (v[i] - v[j]).norm();
            if (r < best && encloses(c, r)) {
                best = r;
                bc = c;
            }
            for (std::size_t k = j + 1; k < v.size(); ++k) {
                Point a = v[j] - v[i], b = v[k] - v[i];
                double den = 2.0 * cross(a, b);
                if (std::abs(den) < 1e-14) continue;
                Point c3 = v[i] + Point(b.y() * a.squaredNorm() - a.y() * b.squaredNorm(),
                                        a.x() * b.squaredNorm() - b.x() * a.squaredNorm()) / den;
                double r3 = (c3 - v[i]).norm();
                if (r3 < best && encloses(c3, r3)) {
                    best = r3;
                    bc = c3;
                }
            }
        }
    }
    circ_center_ = bc;
    circ_radius_ = best;
}

double ConvexDomain::signed_distance(const Point& p) const
{
    switch (kind_) {
    case DomainKind::Interval: return std::min(p.x() - lo_, hi_ - p.x());
    case DomainKind::Disk: return radius_ - (p - center_).norm();
    default: break;
    }
    double d = std::numeric_limits<double>::infinity();
    for (const auto& f : facets_) d = std::min(d, f.value(p) / f.normal.norm());
    return d;
}

double ConvexDomain::exit_fraction(const Point& p, const Point& v) const
{
    const double inf = std::numeric_limits<double>::infinity();
    double s = inf;
    switch (kind_) {
    case DomainKind::Interval:
        if (v.x() > 0) s = (hi_ - p.x()) / v.x();
        else if (v.x() < 0) s = (lo_ - p.x()) / v.x();
        break;
    case DomainKind::Disk: {
        Point q = p - center_;
        double a = v.squaredNorm(), b = 2.0 * v.dot(q), c = q.squaredNorm() - radius_ * radius_;
        double disc = std::max(0.0, b * b - 4.0 * a * c);
        // Stable root of the quadratic; c <= 0 for points inside.
        double sq = std::sqrt(disc);
        s = (b > 0) ? (-2.0 * c) / (b + sq) : (-b + sq) / (2.0 * a);
        break;
    }
    default:
        for (const auto& f : facets_) {
            double nv = f.normal.dot(v);
            if (nv < 0) s = std::min(s, -f.value(p) / nv);
        }
        break;
    }
    if (s > 1.0 + 1e-12) return inf;
    return std::clamp(s, 0.0, 1.0);
}

Point ConvexDomain::outward_normal(const Point& p) const
{
    switch (kind_) {
    case DomainKind::Interval: return Point(p.x() - lo_ < hi_ - p.x() ? -1.0 : 1.0, 0.0);
    case DomainKind::Disk: {
        Point q = p - center_;
        double r = q.norm();
        return r > 0 ? Point(q / r) : Point(1.0, 0.0);
    }
    default: break;
    }
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& f : facets_) dmin = std::min(dmin, std::abs(f.value(p)) / f.normal.norm());
    Point n = Point::Zero();
    for (const auto& f : facets_)
        if (std::abs(f.value(p)) / f.normal.norm() <= dmin + 1e-12) n -= f.normal / f.normal.norm();
    return n / n.norm();
}

double ConvexDomain::diameter() const
{
    switch (kind_) {
    case DomainKind::Interval: return hi_ - lo_;
    case DomainKind::Disk: return 2.0 * radius_;
    default: break;
    }
    double d = 0.0;
    for (const auto& a : vertices_)
        for (const auto& b : vertices_) d = std::max(d, (a - b).norm());
    return d;
}

std::pair<Point, Point> ConvexDomain::bounding_box() const
{
    switch (kind_) {
    case DomainKind::Interval: return {Point(lo_, 0.0), Point(hi_, 0.0)};
    case DomainKind::Disk: return {center_ - Point(radius_, radius_), center_ + Point(radius_, radius_)};
    default: break;
    }
    Point lo = vertices_[0], hi = vertices_[0];
    for (const auto& p : vertices_) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    return {lo, hi};
}

std::vector<double> ConvexDomain::facet_values(const Point& p) const
{
    if (kind_ == DomainKind::Disk) throw Error(ErrorKind::InvalidArgument, kModule, "facet values need a polytope");
    std::vector<double> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) out.push_back(f.value(p));
    return out;
}

int ConvexDomain::vertices_on_facet(int a) const
{
    const auto& f = facets_.at(a);
    double scale = std::max(1.0, diameter()) * f.normal.norm();
    int c = 0;
    for (const auto& v : vertices_)
        if (std::abs(f.value(v)) <= 1e-9 * scale) ++c;
    return c;
}

double ConvexDomain::vertex_ratio() const
{
    if (vertices_.empty()) throw Error(ErrorKind::InvalidArgument, kModule, "vertex ratio needs a polytope");
    int vmin = std::numeric_limits<int>::max();
    for (std::size_t a = 0; a < facets_.size(); ++a) vmin = std::min(vmin, vertices_on_facet(int(a)));
    return double(vmin) / double(vertices_.size());
}

namespace {

Point read_point(const nlohmann::json& j, int dim)
{
    if (!j.is_array() || int(j.size()) != dim) config_error("point must be an array of " + std::to_string(dim) + " numbers");
    Point p = Point::Zero();
    for (int i = 0; i < dim; ++i) {
        if (!j[i].is_number()) config_error("point coordinate is not a number");
        p[i] = j[i].get<double>();
    }
    return p;
}

}  // namespace

ConvexDomain ConvexDomain::from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) config_error("domain needs a string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "interval") {
        if (j.contains("bounds")) {
            const auto& b = j["bounds"];
            if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) config_error("interval bounds must be [a, b]");
            return interval(b[0].get<double>(), b[1].get<double>());
        }
        if (j.contains("vertices")) {
            const auto& v = j["vertices"];
            if (!v.is_array() || v.size() != 2) config_error("interval needs two vertices");
            return interval(read_point(v[0], 1).x(), read_point(v[1], 1).x());
        }
        config_error("interval needs 'bounds' or 'vertices'");
    }
    if (kind == "disk") {
        if (!j.contains("radius") || !j["radius"].is_number()) config_error("disk needs a numeric 'radius'");
        Point c = j.contains("center") ? read_point(j["center"], 2) : Point(Point::Zero());
        return disk(c, j["radius"].get<double>());
    }
    if (kind == "polygon" || kind == "delzant-polytope" || kind == "delzant") {
        if (!j.contains("vertices") || !j["vertices"].is_array()) config_error("polygon needs 'vertices'");
        std::vector<Point> v;
        for (const auto& p : j["vertices"]) v.push_back(read_point(p, 2));
        return kind == "polygon" ? polygon(v) : delzant(v);
    }
    config_error("unknown domain kind '" + kind + "'");
}

ConvexDomain ConvexDomain::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) config_error("cannot open domain file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        config_error(std::string("malformed domain file: ") + e.what());
    }
    return from_json(j);
}

nlohmann::json ConvexDomain::to_json() const
{
    nlohmann::json j;
    switch (kind_) {
    case DomainKind::Interval:
        j["kind"] = "interval";
        j["bounds"] = {lo_, hi_};
        break;
    case DomainKind::Disk:
        j["kind"] = "disk";
        j["center"] = {center_.x(), center_.y()};
        j["radius"] = radius_;
        break;
    default: {
        j["kind"] = kind_ == DomainKind::Delzant ? "delzant-polytope" : "polygon";
        nlohmann::json v = nlohmann::json::array();
        for (const auto& p : vertices_) v.push_back({p.x(), p.y()});
        j["vertices"] = v;
    }
    }
    return j;
}

}  // namespace abreu
