#include "abreu/convex_calculus.hpp"
#include "abreu/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace abreu;

namespace {

struct Quad {
    double a, b, c, p, q, r;  // a x^2 + 2 b x y + c y^2 + p x + q y + r
    double operator()(const Point& x) const
    {
        return a * x.x() * x.x() + 2 * b * x.x() * x.y() + c * x.y() * x.y() + p * x.x() + q * x.y() + r;
    }
};

Quad random_quad(std::mt19937& rng)
{
    std::uniform_real_distribution<double> U(-1, 1);
    Quad Q{1.0 + std::abs(U(rng)), 0.4 * U(rng), 1.0 + std::abs(U(rng)), U(rng), U(rng), U(rng)};
    return Q;
}

}  // namespace

TEST_CASE("second differences are exact for quadratics, including cut stencils")
{
    std::mt19937 rng(3);
    auto g = build_grid(ConvexDomain::disk(Point(0.1, -0.05), 0.93), 1.0 / 20);
    for (int rep = 0; rep < 5; ++rep) {
        Quad Q = random_quad(rng);
        auto u = GridFunction::sample(g, Q);
        for (std::size_t k = 0; k < g->size(); ++k) {
            auto H = discrete_hessian(u, k);
            CHECK(H(0, 0) == doctest::Approx(2 * Q.a).epsilon(1e-8));
            CHECK(H(1, 1) == doctest::Approx(2 * Q.c).epsilon(1e-8));
            CHECK(H(0, 1) == doctest::Approx(2 * Q.b).epsilon(1e-7));
            auto G = discrete_gradient(u, k);
            const Point& x = g->position(k);
            CHECK(G[0] == doctest::Approx(2 * Q.a * x.x() + 2 * Q.b * x.y() + Q.p).epsilon(1e-8));
            CHECK(G[1] == doctest::Approx(2 * Q.b * x.x() + 2 * Q.c * x.y() + Q.q).epsilon(1e-8));
        }
    }
}

TEST_CASE("second difference of the limit profile at the origin")
{
    auto g = build_grid(ConvexDomain::interval(-1, 1), 0.01);
    auto u = GridFunction::sample(g, [](const Point& p) { return oracle::limit_u(p.x()); });
    std::size_t mid = g->size() / 2;
    REQUIRE(std::abs(g->position(mid).x()) < 1e-12);
    CHECK(std::abs(discrete_hessian(u, mid)(0, 0) - 1.0) < 1e-4);
}

TEST_CASE("cofactor times Hessian is det times identity")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 100; ++i) {
        Eigen::MatrixXd H(2, 2);
        double b = U(rng);
        H << U(rng), b, b, U(rng);
        Eigen::MatrixXd P = cofactor(H) * H;
        double d = H.determinant();
        CHECK(P(0, 0) == doctest::Approx(d));
        CHECK(P(1, 1) == doctest::Approx(d));
        CHECK(std::abs(P(0, 1)) < 1e-12);
    }
    CHECK(cofactor(Eigen::MatrixXd::Constant(1, 1, 3.0))(0, 0) == 1.0);
}

TEST_CASE("Monge-Ampere fields and degeneracy")
{
    auto g = build_grid(ConvexDomain::disk(Point(0, 0), 1), 0.1);
    auto u = GridFunction::sample(g, [](const Point& p) { return 0.5 * p.squaredNorm(); });
    auto F = ma_fields(u);
    for (std::size_t k = 0; k < g->size(); ++k) {
        CHECK(F.det[k] == doctest::Approx(1.0));
        CHECK(F.w[k] == doctest::Approx(1.0));
    }
    auto lin = GridFunction::sample(g, [](const Point& p) { return p.x() + 2 * p.y(); });
    try {
        ma_fields(lin);
        FAIL("linear function accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateHessian);
    }
    CHECK(is_convex(u));
    auto concave = GridFunction::sample(g, [](const Point& p) { return -p.squaredNorm(); });
    CHECK_FALSE(is_convex(concave));
}

TEST_CASE("normalization and sections")
{
    auto g = build_grid(ConvexDomain::disk(Point(0, 0), 1), 1.0 / 32);
    std::mt19937 rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        Quad Q = random_quad(rng);
        auto u = GridFunction::sample(g, Q);
        std::size_t p = std::uniform_int_distribution<std::size_t>(0, g->size() - 1)(rng);
        auto v = normalize_at(u, p);
        CHECK(v[p] == 0.0);
        CHECK(v.min() >= -1e-10);
        for (const auto& q : g->boundary_samples()) CHECK(v.trace_at(q) >= -1e-10);
    }
    auto u = GridFunction::sample(g, [](const Point& p) { return 0.5 * p.squaredNorm(); });
    std::size_t c = 0;
    for (std::size_t k = 0; k < g->size(); ++k)
        if (g->position(k).norm() < 1e-12) c = k;
    Section S = section(u, c, 0.125);
    std::size_t expect = 0;
    for (std::size_t k = 0; k < g->size(); ++k) expect += g->position(k).norm() < 0.5;
    CHECK(S.nodes.size() == expect);
    CHECK(S.compact);
    Section all = section(u, c, 10.0);
    CHECK(all.nodes.size() == g->size());
    CHECK_FALSE(all.compact);
    auto shifted = GridFunction::sample(g, [](const Point& p) { return 0.5 * p.squaredNorm() + 1.0; });
    try {
        section(shifted, c, 0.5);
        FAIL("unnormalized function accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotNormalized);
    }
}
