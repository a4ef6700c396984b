#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "setrec/geometry.hpp"
#include "support/oracles.hpp"

using namespace setrec;
using testsupport::random_cloud;

TEST_CASE("point cloud validation") {
    CHECK_THROWS_AS(PointCloud({}), std::invalid_argument);
    CHECK_THROWS_AS(PointCloud({{1.0, 2.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PointCloud({{1.0, std::nan("")}}), std::invalid_argument);
    const PointCloud a({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(a.dim() == 2);
    CHECK(a.size() == 2);
    CHECK(PointCloud::origin(3).dim() == 3);
    CHECK(PointCloud::origin(3)[0] == Vector{0.0, 0.0, 0.0});
}

TEST_CASE("vector helpers") {
    CHECK(dot({1.0, 2.0}, {3.0, -4.0}) == -5.0);
    CHECK(norm({3.0, 4.0}) == 5.0);
    CHECK(distance({1.0, 1.0}, {4.0, 5.0}) == 5.0);
}

TEST_CASE("minkowski combination is pairwise") {
    const PointCloud a({{1.0, 0.0}, {0.0, 1.0}});
    const PointCloud b({{10.0, 10.0}});
    const PointCloud c = minkowski_combine(2.0, a, 3.0, b);
    REQUIRE(c.size() == 2);
    // Output points are sorted lexicographically.
    CHECK(c[0] == Vector{30.0, 32.0});
    CHECK(c[1] == Vector{32.0, 30.0});
    const PointCloud s = scale_cloud(-1.0, b);
    CHECK(s[0] == Vector{-10.0, -10.0});
}

TEST_CASE("hausdorff hand examples") {
    const PointCloud a({{0.0, 0.0}});
    const PointCloud b({{3.0, 4.0}});
    CHECK(hausdorff(a, a) == 0.0);
    CHECK(hausdorff(a, b) == 5.0);
    const PointCloud c({{0.0, 0.0}, {10.0, 0.0}});
    CHECK(directed_hausdorff(a, c) == 0.0);
    CHECK(directed_hausdorff(c, a) == 10.0);
    CHECK(hausdorff(a, c) == 10.0);

    // Shifting every point moves the distance by exactly the shift.
    const PointCloud sq({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
    const PointCloud shifted = minkowski_combine(1.0, sq, 1.0, PointCloud({{0.3, 0.4}}));
    CHECK(hausdorff(sq, shifted) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("metric axioms on seeded clouds") {
    detail::SplitMix64 rng(2026);
    for (int it = 0; it < 200; ++it) {
        const std::size_t dim = 2 + rng.next() % 2;
        const PointCloud a = random_cloud(rng, dim, 6);
        const PointCloud b = random_cloud(rng, dim, 6);
        const PointCloud c = random_cloud(rng, dim, 6);
        const double ab = hausdorff(a, b), ba = hausdorff(b, a);
        CHECK(ab >= 0.0);
        CHECK(ab == ba);
        CHECK(hausdorff(a, a) == 0.0);
        CHECK(ab <= hausdorff(a, c) + hausdorff(c, b) + 1e-12);
    }
}

TEST_CASE("positive homogeneity") {
    detail::SplitMix64 rng(7);
    for (int it = 0; it < 100; ++it) {
        const PointCloud a = random_cloud(rng, 2, 5);
        const PointCloud b = random_cloud(rng, 2, 5);
        const double lambda = 0.25 + 4.0 * rng.uniform01();
        const double lhs = hausdorff(scale_cloud(lambda, a), scale_cloud(lambda, b));
        const double rhs = lambda * hausdorff(a, b);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
    }
}

TEST_CASE("sum inequality") {
    detail::SplitMix64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const PointCloud a = random_cloud(rng, 3, 5);
        const PointCloud b = random_cloud(rng, 3, 5);
        const PointCloud c = random_cloud(rng, 3, 5);
        const PointCloud d = random_cloud(rng, 3, 5);
        const double lhs = hausdorff(minkowski_combine(1.0, a, 1.0, b),
                                     minkowski_combine(1.0, c, 1.0, d));
        CHECK(lhs <= hausdorff(a, c) + hausdorff(b, d) + 1e-12);
    }
}

TEST_CASE("convex hull drops interior, duplicate, and collinear points") {
    const PointCloud a({{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}, {2.0, 2.0}, {0.0, 2.0},
                        {1.0, 1.0}, {0.0, 0.0}, {0.0, 1.0}});
    const PointCloud hull = convex_hull_2d(a);
    REQUIRE(hull.size() == 4);
    CHECK(hull[0] == Vector{0.0, 0.0});
    CHECK(hull[1] == Vector{2.0, 0.0});
    CHECK(hull[2] == Vector{2.0, 2.0});
    CHECK(hull[3] == Vector{0.0, 2.0});
}

TEST_CASE("convex hull degenerate inputs") {
    CHECK(convex_hull_2d(PointCloud({{1.0, 1.0}})).size() == 1);
    const PointCloud seg = convex_hull_2d(
        PointCloud({{0.0, 0.0}, {2.0, 2.0}, {1.0, 1.0}, {0.5, 0.5}}));
    REQUIRE(seg.size() == 2);
    CHECK(seg[0] == Vector{0.0, 0.0});
    CHECK(seg[1] == Vector{2.0, 2.0});
    CHECK_THROWS_AS(convex_hull_2d(PointCloud({{1.0, 2.0, 3.0}})),
                    std::invalid_argument);
}

TEST_CASE("hull contraction against the polygon oracle") {
    detail::SplitMix64 rng(13);
    for (int it = 0; it < 100; ++it) {
        const PointCloud a = random_cloud(rng, 2, 7);
        const PointCloud b = random_cloud(rng, 2, 7);
        const double cloud_dist = hausdorff(a, b);
        const double hull_dist = testsupport::polygon_hausdorff(
            convex_hull_2d(a).points(), convex_hull_2d(b).points());
        CHECK(hull_dist <= cloud_dist + 1e-12);
    }
}

TEST_CASE("hull commutes with scaling and Minkowski sums") {
    detail::SplitMix64 rng(17);
    for (int it = 0; it < 50; ++it) {
        const PointCloud a = random_cloud(rng, 2, 6);
        const PointCloud b = random_cloud(rng, 2, 6);
        const double mu = 0.5 + 2.0 * rng.uniform01();

        const PointCloud lhs_scale = convex_hull_2d(scale_cloud(mu, a));
        const PointCloud rhs_scale = scale_cloud(mu, convex_hull_2d(a));
        CHECK(testsupport::polygon_hausdorff(lhs_scale.points(), rhs_scale.points()) <=
              1e-12);

        const PointCloud lhs_sum = convex_hull_2d(minkowski_combine(1.0, a, 1.0, b));
        const PointCloud rhs_sum = convex_hull_2d(
            minkowski_combine(1.0, convex_hull_2d(a), 1.0, convex_hull_2d(b)));
        REQUIRE(lhs_sum.size() == rhs_sum.size());
        for (std::size_t i = 0; i < lhs_sum.size(); ++i)
            CHECK(distance(lhs_sum[i], rhs_sum[i]) <= 1e-12);
    }
}
