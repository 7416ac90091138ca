#include "abreu/convex_calculus.hpp"
#include "abreu/legendre.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace abreu;

TEST_CASE("conjugate of a linear function on the unit square")
{
    auto g = build_grid(ConvexDomain::unit_square(), 0.25);
    const Point a(0.3, -0.7);
    auto u = GridFunction::sample(g, [a](const Point& p) { return a.dot(p); });
    CHECK(std::abs(conjugate_at(u, a)) < 1e-15);
    CHECK(conjugate_at(u, a + Point(1, 0)) == doctest::Approx(1.0));
    CHECK(conjugate_at(u, a + Point(1, 1)) == doctest::Approx(2.0));
    LegendreOptions o;
    o.dual_h = 0.1;
    auto P = legendre_transform(u, o);
    CHECK(P.dual.size() >= 9);
}

TEST_CASE("conjugate of the squared norm on the disk")
{
    const double h = 1.0 / 32;
    auto g = build_grid(ConvexDomain::disk(Point(0, 0), 1), h);
    auto u = GridFunction::sample(g, [](const Point& p) { return 0.5 * p.squaredNorm(); });
    LegendreOptions o;
    o.dual_h = 0.05;
    auto P = legendre_transform(u, o);
    for (std::size_t l = 0; l < P.dual.size(); ++l) {
        Point x = P.dual.node(l);
        if (x.norm() > 0.95) continue;
        // Brute force lies below the continuous conjugate by at most h^2 / 4.
        CHECK(P.f[l] <= 0.5 * x.squaredNorm() + 1e-14);
        CHECK(P.f[l] >= 0.5 * x.squaredNorm() - 0.25 * h * h);
    }
    o.refine = 2;
    auto R = legendre_transform(u, o);
    int valid = 0;
    for (std::size_t l = 0; l < R.dual.size(); ++l) {
        if (!R.valid[l]) continue;
        ++valid;
        CHECK(R.f[l] == doctest::Approx(0.5 * R.dual.node(l).squaredNorm()).epsilon(1e-10));
    }
    CHECK(valid > 100);
}

TEST_CASE("Young's inequality holds at every sample and dual node")
{
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> U(-1, 1);
    auto g = build_grid(ConvexDomain::polygon({Point(0, 0), Point(1.2, 0.2), Point(0.9, 1.0), Point(-0.1, 0.8)}), 1.0 / 16);
    for (int rep = 0; rep < 3; ++rep) {
        double c1 = U(rng), c2 = U(rng);
        auto u = GridFunction::sample(g, [&](const Point& p) { return std::exp(c1 * p.x() + c2 * p.y()) + p.squaredNorm(); });
        LegendreOptions o;
        o.dual_h = 0.1;
        o.base = Point(0.2, 0.1);
        auto P = legendre_transform(u, o);
        SampleSet S = primal_samples(u);
        for (std::size_t l = 0; l < P.dual.size(); ++l)
            for (std::size_t s = 0; s < S.pts.size(); ++s)
                CHECK(S.vals[s] + P.f[l] >= P.dual.node(l).dot(S.pts[s] - o.base) - 1e-12);
    }
}

TEST_CASE("ties go to the lexicographically smallest sample")
{
    auto g = build_grid(ConvexDomain::interval(-1, 1), 0.25);
    auto u = GridFunction::constant(g, 0.0);
    LegendreOptions o;
    o.dual_h = 0.5;
    o.window = std::make_pair(Point(0, 0), Point(0, 0));
    auto P = legendre_transform(u, o);
    for (std::size_t l = 0; l < P.dual.size(); ++l)
        if (std::abs(P.dual.node(l).x()) < 1e-12) CHECK(P.source[l].x() == doctest::Approx(-1.0));
}

TEST_CASE("brute-force conjugate agrees with a plain loop")
{
    auto g = build_grid(ConvexDomain::disk(Point(0.2, 0.1), 0.8), 1.0 / 16);
    auto u = GridFunction::sample(g, [](const Point& p) { return std::cosh(p.x()) + p.y() * p.y() + 0.3 * p.x() * p.y(); });
    std::vector<std::pair<double, double>> pts;
    std::vector<double> vals;
    for (std::size_t k = 0; k < g->size(); ++k) {
        pts.emplace_back(g->position(k).x(), g->position(k).y());
        vals.push_back(u[k]);
    }
    for (const auto& q : g->boundary_samples()) {
        pts.emplace_back(q.x(), q.y());
        vals.push_back(u.trace_at(q));
    }
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 50; ++i) {
        Point x(U(rng), U(rng));
        CHECK(conjugate_at(u, x) == doctest::Approx(oracle::conjugate(pts, vals, x.x(), x.y())).epsilon(1e-14));
    }
}

TEST_CASE("biconjugate stays below u and close to it")
{
    const double h = 1.0 / 32;
    auto g = build_grid(ConvexDomain::unit_square(), h);
    auto u = GridFunction::sample(g, [](const Point& p) { return p.x() * p.x() + 0.5 * p.x() * p.y() + 0.8 * p.y() * p.y(); });
    LegendreOptions o;
    o.dual_h = h;
    auto P = legendre_transform(u, o);
    std::vector<Point> pts;
    for (std::size_t k = 0; k < g->size(); ++k) pts.push_back(g->position(k));
    auto ff = biconjugate_at(P, pts);
    for (std::size_t k = 0; k < g->size(); ++k) {
        CHECK(ff[k] <= u[k] + 1e-12);
        CHECK(ff[k] >= u[k] - 3 * h);
    }
}

TEST_CASE("gradient-to-conjugate ratio of the squared norm")
{
    const double h = 1.0 / 64;
    auto g = build_grid(ConvexDomain::disk(Point(0, 0), 1), h);
    auto u = GridFunction::sample(g, [](const Point& p) { return 0.5 * p.squaredNorm(); });
    double r = gradient_legendre_ratio(u, 1.0);
    // |xi|^2 / (1 + |xi|^2 / 2)^2 is increasing on [0, 1] with value 4/9 at 1.
    CHECK(r <= 4.0 / 9.0 + 1e-12);
    CHECK(r >= 4.0 / 9.0 - 4 * h);
}

TEST_CASE("affine renormalization shifts the conjugate exactly")
{
    // With u~ = u - a.(xi - p) - b: f~(x - a) = f(x) - a.p + b, and the ratio bound transfers.
    auto g = build_grid(ConvexDomain::disk(Point(0, 0), 1), 1.0 / 24);
    auto u = GridFunction::sample(g, [](const Point& p) { return 0.5 * p.squaredNorm() + 0.2 * std::pow(p.x(), 4); });
    std::mt19937 rng(23);
    for (int rep = 0; rep < 3; ++rep) {
        std::size_t p = std::uniform_int_distribution<std::size_t>(0, g->size() - 1)(rng);
        AffineShift s;
        auto v = normalize_at(u, p, &s);
        std::uniform_real_distribution<double> U(-1.5, 1.5);
        for (int i = 0; i < 20; ++i) {
            Point x(U(rng), U(rng));
            CHECK(conjugate_at(v, x - s.slope) == doctest::Approx(conjugate_at(u, x) - s.slope.dot(s.p) + s.value).epsilon(1e-12));
        }
        const double d = 1.0;
        const double b = gradient_legendre_ratio(u, d);
        // With d' = d + a.p - b the denominators d' + f~ and d + f coincide.
        const double dprime = d + s.slope.dot(s.p) - s.value;
        std::vector<Point> xs;
        for (std::size_t k = 0; k < g->size(); ++k) xs.push_back(gradient_point(u, k));
        auto f = conjugate_at(u, xs);
        double fmin = *std::min_element(f.begin(), f.end());
        const double bprime = 2 * b + 2 * s.slope.squaredNorm() / ((d + fmin) * (d + fmin));
        CHECK(gradient_legendre_ratio(v, dprime) <= bprime * (1 + 1e-12));
    }
}
