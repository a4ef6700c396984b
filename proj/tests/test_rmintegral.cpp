#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "setrec/rmintegral.hpp"
#include "support/oracles.hpp"

using namespace setrec;

namespace {
const double kPi = 3.14159265358979323846;

SetTrajectory rotating_segment() {
    return SetTrajectory::custom(2, [](double t) {
        const double x = std::cos(kPi * t), y = std::sin(kPi * t);
        return PointCloud({{x, y}, {-x, -y}});
    });
}
}  // namespace

TEST_CASE("partition validation and mesh") {
    CHECK_THROWS_AS(Partition({0.0, 1.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0.1, 1.0}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0.0, 0.9}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0.0, 0.5, 0.4, 1.0}, {0.2, 0.45, 0.7}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Partition({0.0, 0.5, 1.0}, {0.7, 0.9}), std::invalid_argument);

    const Partition p = Partition::uniform_midpoint(4);
    CHECK(p.cells() == 4);
    CHECK(p.mesh() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.tags[0] == doctest::Approx(0.125).epsilon(1e-15));
    CHECK_THROWS_AS(Partition::uniform_midpoint(0), std::invalid_argument);
}

TEST_CASE("constant trajectories integrate to their own embedding") {
    const GridPtr grid = DirectionGrid::for_dimension(2);
    const PointCloud a({{0.5, -0.25}, {1.0, 1.0}, {-0.5, 0.75}});
    const IntegralResult r = integrate(SetTrajectory::constant(a),
                                       Weight::constant_one(), 1e-10, grid);
    const ConvexBody direct = embed(a, grid);
    CHECK(body_hausdorff(r.body, direct) <= 1e-12);
    CHECK(r.achieved_tolerance <= 1e-10);
}

TEST_CASE("profile trajectories match closed forms") {
    const GridPtr grid = DirectionGrid::circle(720);

    // profile g(t) = 0.25 + t - t^2, weight 0.5 + x: integral of g*P = 5/12.
    const SetTrajectory sp = SetTrajectory::scalar_profile(
        [](double t) { return 0.25 + t * (1.0 - t); }, {0.6, 0.8});
    const Weight P = Weight::polynomial({0.5, 1.0});
    const IntegralResult r = integrate(sp, P, 1e-9, grid);
    const double mass = 5.0 / 12.0;
    CHECK(std::fabs(r.body.value(0) - mass * 0.6) <= 1e-9);

    // scaled square, constant weight: mass = 1 + 0.5/2 = 1.25.
    const PointCloud sq({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
    const SetTrajectory sb = SetTrajectory::scaled_body(
        [](double t) { return 1.0 + 0.5 * t; }, sq);
    const IntegralResult s = integrate(sb, Weight::constant_one(), 1e-9, grid);
    CHECK(std::fabs(s.body.value(0) - 1.25) <= 1e-9);
    CHECK(std::fabs(s.body.value(90) - 1.25 * std::sqrt(2.0)) <= 1e-9);
}

TEST_CASE("riemann sums agree with the point-cloud Minkowski oracle") {
    const GridPtr grid = DirectionGrid::circle(720);
    const PointCloud base({{1.0, 0.2}, {-0.4, 0.9}, {-0.6, -0.7}, {0.3, -1.0}});
    const SetTrajectory f = SetTrajectory::scaled_body(
        [](double t) { return 0.5 + t * t; }, base);
    const Weight P = Weight::polynomial({0.25, 0.5});

    for (const std::size_t cells : {1u, 7u, 64u}) {
        const Partition part = Partition::uniform_midpoint(cells);
        const ConvexBody support_path = riemann_sum(f, part, P, grid);
        const PointCloud cloud_path = testsupport::cloud_riemann_sum(f, part, P);
        const ConvexBody embedded = embed(cloud_path, grid);
        double worst = 0.0;
        for (std::size_t j = 0; j < grid->size(); ++j)
            worst = std::max(worst,
                             std::fabs(support_path.value(j) - embedded.value(j)));
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("midpoint riemann sums sit inside the recovery error bound") {
    // For f Lipschitz (omega(t)=t) and the n-cell midpoint partition, the
    // distance to the true integral is at most the envelope integral 1/(4n).
    const GridPtr grid = DirectionGrid::circle(720);
    const SetTrajectory f = SetTrajectory::scalar_profile(
        [](double t) { return 0.2 + 0.8 * std::fabs(t - 0.4); }, {1.0, 0.0});
    const IntegralResult truth = integrate(f, Weight::constant_one(), 1e-10, grid);
    for (const std::size_t n : {4u, 8u, 16u}) {
        const ConvexBody sum = riemann_sum(f, Partition::uniform_midpoint(n),
                                           Weight::constant_one(), grid);
        const double err = body_hausdorff(sum, truth.body);
        CHECK(err <= 1.0 / (4.0 * n) + 1e-9);
    }
}

TEST_CASE("refinement history is reproducible and eventually monotone") {
    const GridPtr grid = DirectionGrid::circle(720);
    const IntegralResult a = integrate(rotating_segment(), Weight::constant_one(),
                                       1e-6, grid);
    const IntegralResult b = integrate(rotating_segment(), Weight::constant_one(),
                                       1e-6, grid);
    CHECK(a.achieved_tolerance <= 1e-6);
    REQUIRE(a.history.size() == b.history.size());
    for (std::size_t i = 0; i < a.history.size(); ++i) {
        CHECK(a.history[i].distance == b.history[i].distance);
        CHECK(a.history[i].cells == b.history[i].cells);
    }
    for (std::size_t i = 0; i + 1 < a.history.size(); ++i)
        if (a.history[i].cells >= 8)
            CHECK(a.history[i + 1].distance <= a.history[i].distance + 1e-15);
    for (std::size_t j = 0; j < grid->size(); ++j)
        CHECK(a.body.value(j) == b.body.value(j));
}

TEST_CASE("refinement failure carries the best iterate") {
    const GridPtr grid = DirectionGrid::circle(720);
    const SetTrajectory f = SetTrajectory::scalar_profile(
        [](double t) { return t * t; }, {1.0, 0.0});
    const SetTrajectory slow = SetTrajectory::custom(2, [&f](double t) { return f(t); });
    try {
        integrate(slow, Weight::constant_one(), 1e-13, grid, 3);
        FAIL("expected nonconvergence");
    } catch (const IntegrationError& e) {
        CHECK(e.best().history.size() >= 1);
        CHECK(e.best().body.grid()->size() == grid->size());
        CHECK(e.best().achieved_tolerance > 1e-13);
    }
}

TEST_CASE("integral law property suite stays at numerical noise") {
    const GridPtr grid = DirectionGrid::circle(720);
    const PointCloud sq({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
    const SetTrajectory f = SetTrajectory::scaled_body(
        [](double t) { return 1.0 + 0.5 * t; }, sq);
    const SetTrajectory g = SetTrajectory::scalar_profile(
        [](double t) { return 0.25 + t * (1.0 - t); }, {0.6, 0.8});
    const PropertyReport rep = integral_property_suite(
        f, g, Weight::polynomial({0.5, 1.0}), grid, 256);
    CHECK(rep.entries.size() >= 5);
    CHECK(rep.worst() <= 1e-9);
}
