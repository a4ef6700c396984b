#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "setrec/convexcal.hpp"
#include "support/oracles.hpp"

using namespace setrec;
using testsupport::random_cloud;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("circle grid geometry") {
    const GridPtr g = DirectionGrid::circle(720);
    CHECK(g->dim() == 2);
    CHECK(g->size() == 720);
    CHECK(std::fabs(g->covering_angle() - kPi / 720.0) <= 1e-15);
    for (std::size_t j = 0; j < g->size(); ++j) {
        CHECK(std::fabs(norm(g->direction(j)) - 1.0) <= 1e-15);
        const std::size_t k = g->antipode(j);
        CHECK(k != j);
        CHECK(g->antipode(k) == j);
        CHECK(g->direction(k)[0] == -g->direction(j)[0]);
        CHECK(g->direction(k)[1] == -g->direction(j)[1]);
    }
}

TEST_CASE("sphere and high-dimension grids") {
    const GridPtr s = DirectionGrid::fibonacci_sphere(1024);
    CHECK(s->dim() == 3);
    CHECK(s->size() == 2048);
    const GridPtr q = DirectionGrid::quasi_random(5);
    CHECK(q->dim() == 5);
    CHECK(q->size() == 8192);
    for (const GridPtr& g : {s, q}) {
        CHECK(g->covering_angle() > 0.0);
        for (std::size_t j = 0; j < g->size(); j += 97) {
            CHECK(std::fabs(norm(g->direction(j)) - 1.0) <= 1e-12);
            CHECK(g->antipode(g->antipode(j)) == j);
        }
    }
}

TEST_CASE("default grids are cached") {
    CHECK(DirectionGrid::for_dimension(2).get() == DirectionGrid::for_dimension(2).get());
    CHECK(DirectionGrid::for_dimension(3).get() == DirectionGrid::for_dimension(3).get());
}

TEST_CASE("embedding a square") {
    const GridPtr g = DirectionGrid::circle(720);
    const PointCloud sq({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
    const ConvexBody body = embed(sq, g);
    CHECK(body.value(0) == 1.0);            // +e1
    CHECK(body.value(360) == 1.0);          // -e1
    CHECK(std::fabs(body.value(90) - std::sqrt(2.0)) <= 1e-15);  // 45 degrees
}

TEST_CASE("embedding ignores non-extreme points") {
    const GridPtr g = DirectionGrid::circle(720);
    detail::SplitMix64 rng(23);
    for (int it = 0; it < 20; ++it) {
        const PointCloud a = random_cloud(rng, 2, 8);
        const ConvexBody lhs = embed(a, g);
        const ConvexBody rhs = embed(convex_hull_2d(a), g);
        for (std::size_t j = 0; j < g->size(); ++j) CHECK(lhs.value(j) == rhs.value(j));
    }
}

TEST_CASE("body combination is linear in support space") {
    const GridPtr g = DirectionGrid::for_dimension(3);
    detail::SplitMix64 rng(29);
    for (int it = 0; it < 10; ++it) {
        const ConvexBody x = embed(random_cloud(rng, 3, 6), g);
        const ConvexBody y = embed(random_cloud(rng, 3, 6), g);
        const ConvexBody z = embed(random_cloud(rng, 3, 6), g);
        const ConvexBody xy = body_combine(2.0, x, 3.0, y);
        for (std::size_t j = 0; j < g->size(); j += 131)
            CHECK(std::fabs(xy.value(j) - (2.0 * x.value(j) + 3.0 * y.value(j))) <=
                  1e-12);

        // commutativity and associativity
        const ConvexBody ab = body_combine(1.0, body_combine(1.0, x, 1.0, y), 1.0, z);
        const ConvexBody ba = body_combine(1.0, x, 1.0, body_combine(1.0, y, 1.0, z));
        const ConvexBody comm = body_combine(3.0, y, 2.0, x);
        for (std::size_t j = 0; j < g->size(); j += 131) {
            CHECK(std::fabs(ab.value(j) - ba.value(j)) <= 1e-12);
            CHECK(std::fabs(xy.value(j) - comm.value(j)) <= 1e-12);
        }
    }
}

TEST_CASE("negation uses exact antipodes") {
    const GridPtr g = DirectionGrid::for_dimension(2);
    detail::SplitMix64 rng(31);
    const ConvexBody x = embed(random_cloud(rng, 2, 6), g);
    const ConvexBody nx = negate(x);
    for (std::size_t j = 0; j < g->size(); ++j)
        CHECK(nx.value(j) == x.value(g->antipode(j)));
    const ConvexBody back = negate(nx);
    for (std::size_t j = 0; j < g->size(); ++j) CHECK(back.value(j) == x.value(j));
}

TEST_CASE("width stays nonnegative through operations") {
    const GridPtr g = DirectionGrid::for_dimension(2);
    detail::SplitMix64 rng(37);
    for (int it = 0; it < 20; ++it) {
        const ConvexBody x = embed(random_cloud(rng, 2, 6), g);
        const ConvexBody y = embed(random_cloud(rng, 2, 6), g);
        const ConvexBody z = body_combine(0.5, negate(x), 1.5, y);
        for (std::size_t j = 0; j < g->size(); ++j)
            CHECK(z.value(j) + z.value(g->antipode(j)) >= -1e-12);
    }
}

TEST_CASE("body distance against the polygon oracle") {
    const GridPtr g = DirectionGrid::circle(720);

    // On-grid extremal directions: agreement near machine precision, far
    // inside the documented resolution bound.
    const PointCloud sq({{0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}});
    const PointCloud big = scale_cloud(1.5, sq);
    const double body_d = body_hausdorff(embed(sq, g), embed(big, g));
    const double oracle = testsupport::polygon_hausdorff(convex_hull_2d(sq).points(),
                                                         convex_hull_2d(big).points());
    CHECK(std::fabs(oracle - 0.25 * std::sqrt(2.0)) <= 1e-15);
    CHECK(std::fabs(body_d - oracle) <= g->support_error_bound(2.0));
    CHECK(std::fabs(body_d - oracle) <= 1e-12);

    // Random polygons: the defect is below the chord bound, and the grid
    // maximum never exceeds the true distance.
    detail::SplitMix64 rng(41);
    for (int it = 0; it < 50; ++it) {
        const PointCloud a = random_cloud(rng, 2, 7);
        const PointCloud b = random_cloud(rng, 2, 7);
        double rho = 0.0;
        for (const Vector& p : a.points()) rho = std::max(rho, norm(p));
        for (const Vector& p : b.points()) rho = std::max(rho, norm(p));
        const double bd = body_hausdorff(embed(a, g), embed(b, g));
        const double po = testsupport::polygon_hausdorff(convex_hull_2d(a).points(),
                                                         convex_hull_2d(b).points());
        CHECK(bd <= po + 1e-12);
        CHECK(bd <= hausdorff(a, b) + 1e-12);
        CHECK(po - bd <= 2.0 * rho * std::sin(0.5 * g->covering_angle()) * 2.0 + 1e-12);
    }
}

TEST_CASE("body and bound validation") {
    const GridPtr g = DirectionGrid::circle(720);
    CHECK_THROWS_AS(ConvexBody(g, std::vector<double>(3, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(g->support_error_bound(-1.0), std::invalid_argument);
    CHECK(g->support_error_bound(2.0) ==
          doctest::Approx(2.0 * (1.0 - std::cos(g->covering_angle()))).epsilon(1e-15));
    const PointCloud p3({{1.0, 2.0, 3.0}});
    CHECK_THROWS_AS(embed(p3, g), std::invalid_argument);
}
