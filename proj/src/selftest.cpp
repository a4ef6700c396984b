#include "setrec/selftest.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "setrec/convexcal.hpp"
#include "setrec/detail/rng.hpp"
#include "setrec/funcspace.hpp"
#include "setrec/geometry.hpp"
#include "setrec/knots.hpp"
#include "setrec/noisy.hpp"
#include "setrec/recovery.hpp"
#include "setrec/rmintegral.hpp"

namespace setrec {

namespace {

PointCloud random_cloud(detail::SplitMix64& rng, std::size_t dim, std::size_t count) {
    std::vector<Vector> pts(count, Vector(dim));
    for (Vector& p : pts)
        for (double& c : p) c = 2.0 * rng.uniform01() - 1.0;
    return PointCloud(std::move(pts));
}

bool hull_drops_interior_points() {
    const PointCloud square({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
    const PointCloud hull = convex_hull_2d(square);
    if (hull.size() != 4) return false;
    if (hull[0] != Vector{0, 0}) return false;
    // Counterclockwise from the lexicographic minimum.
    return hull[1] == Vector{2, 0} && hull[2] == Vector{2, 2} && hull[3] == Vector{0, 2};
}

bool hausdorff_metric_axioms() {
    detail::SplitMix64 rng(101);
    for (int t = 0; t < 40; ++t) {
        const std::size_t dim = t % 2 == 0 ? 2 : 3;
        const PointCloud a = random_cloud(rng, dim, 5);
        const PointCloud b = random_cloud(rng, dim, 7);
        const PointCloud c = random_cloud(rng, dim, 3);
        if (hausdorff(a, a) != 0.0) return false;
        if (std::fabs(hausdorff(a, b) - hausdorff(b, a)) > 1e-12) return false;
        if (hausdorff(a, c) > hausdorff(a, b) + hausdorff(b, c) + 1e-12) return false;
    }
    return true;
}

bool support_linearity() {
    detail::SplitMix64 rng(202);
    const GridPtr grid = DirectionGrid::for_dimension(2);
    const ConvexBody x = embed(random_cloud(rng, 2, 6), grid);
    const ConvexBody y = embed(random_cloud(rng, 2, 4), grid);
    const ConvexBody z = body_combine(2.0, x, 3.0, y);
    for (std::size_t j = 0; j < grid->size(); ++j) {
        if (std::fabs(z.value(j) - (2.0 * x.value(j) + 3.0 * y.value(j))) > 1e-12)
            return false;
    }
    const ConvexBody back = negate(negate(x));
    for (std::size_t j = 0; j < grid->size(); ++j)
        if (back.value(j) != x.value(j)) return false;
    return true;
}

bool embedding_scales() {
    detail::SplitMix64 rng(303);
    const GridPtr grid = DirectionGrid::for_dimension(2);
    const PointCloud a = random_cloud(rng, 2, 8);
    const ConvexBody lhs = embed(scale_cloud(2.5, a), grid);
    const ConvexBody rhs = embed(a, grid);
    for (std::size_t j = 0; j < grid->size(); ++j)
        if (std::fabs(lhs.value(j) - 2.5 * rhs.value(j)) > 1e-12) return false;
    return true;
}

bool body_width_nonnegative() {
    detail::SplitMix64 rng(404);
    const GridPtr grid = DirectionGrid::for_dimension(2);
    for (int t = 0; t < 25; ++t) {
        const ConvexBody b = embed(random_cloud(rng, 2, 5), grid);
        for (std::size_t j = 0; j < grid->size(); ++j)
            if (b.value(j) + b.value(grid->antipode(j)) < 0.0) return false;
    }
    return true;
}

bool modulus_validation_rejects() {
    try {
        Modulus::power(0.0, 1.0);
        return false;
    } catch (const std::invalid_argument&) {
    }
    try {
        // Convex (not concave) samples must be rejected.
        Modulus::tabulated({0.0, 0.5, 1.0}, {0.0, 0.1, 1.0});
        return false;
    } catch (const std::invalid_argument&) {
    }
    return true;
}

bool uniform_error_matches_envelope_integral() {
    const Modulus omega = Modulus::power(1.0, 0.5);
    const double direct = uniform_optimal_error(omega, 3);
    const double via_envelope =
        worst_case_error(omega, Weight::constant_one(), midpoint_knots(3));
    return std::fabs(direct - via_envelope) <= 2e-10;
}

bool accumulated_modulus_round_trip() {
    const Modulus root = Modulus::power(1.0, 0.5);
    for (double x : {0.001, 0.1, 0.37, 0.8}) {
        if (std::fabs(omega_big_inv(root, omega_big(root, x)) - x) > 1e-10) return false;
    }
    const Modulus linear = Modulus::power(1.0, 1.0);
    return std::fabs(omega_big(linear, 0.5) - 1.0 / 16.0) <= 1e-12;
}

bool unit_weight_sums_collapse() {
    const AsymptoticReport rep = asymptotic_constant(
        Weight::constant_one(), Modulus::power(1.0, 0.5), {4, 64});
    for (double b : rep.b_values)
        if (std::fabs(b - 1.0) > 1e-12) return false;
    return true;
}

bool noisy_reduces_at_zero_budget() {
    const Modulus omega = Modulus::power(1.0, 1.0);
    const KnotSet knots = midpoint_knots(3);
    const ErrorBudget zero(std::vector<double>(3, 0.0));
    const Weight one = Weight::constant_one();
    if (std::fabs(noisy_error_value(omega, knots, zero, one) -
                  worst_case_error(omega, one, knots)) > 1e-9)
        return false;
    const ActiveDecomposition decomp = active_cells(omega, knots, zero, one);
    if (decomp.nu() != 3) return false;
    for (const ActiveCell& cell : decomp.cells)
        if (std::fabs(cell.weight - 1.0 / 3.0) > 1e-6) return false;
    return true;
}

bool uniform_budget_shifts_error() {
    const double v = noisy_error_value(Modulus::power(1.0, 1.0), midpoint_knots(4),
                                       ErrorBudget(std::vector<double>(4, 0.05)),
                                       Weight::constant_one());
    return std::fabs(v - 0.1125) <= 1e-9;
}

bool dominated_knot_is_pruned() {
    const ActiveDecomposition decomp =
        active_cells(Modulus::power(1.0, 1.0), KnotSet({0.5, 0.51}),
                     ErrorBudget({0.0, 1.0}), Weight::constant_one());
    return decomp.nu() == 1 && decomp.cells[0].index == 0;
}

bool integral_properties_hold() {
    const GridPtr grid = DirectionGrid::for_dimension(2);
    const PointCloud square({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const SetTrajectory f =
        SetTrajectory::scaled_body([](double t) { return 1.0 + 0.5 * t; }, square);
    const SetTrajectory g = SetTrajectory::scalar_profile(
        [](double t) { return 0.25 + t * (1.0 - t); }, Vector{0.6, 0.8});
    const PropertyReport rep =
        integral_property_suite(f, g, Weight::polynomial({0.5, 1.0}), grid, 256);
    return rep.worst() <= 1e-9;
}

bool optimizer_reproduces_midpoints() {
    const OptimizedKnots got =
        optimize_knots(Weight::constant_one(), Modulus::power(1.0, 1.0), 4);
    const KnotSet expect = midpoint_knots(4);
    for (std::size_t i = 0; i < 4; ++i)
        if (std::fabs(got.knots.knots[i] - expect.knots[i]) > 1e-6) return false;
    return std::fabs(got.error - 1.0 / 16.0) <= 1e-9;
}

bool optimizer_improves_on_midpoints() {
    const Modulus omega = Modulus::power(1.0, 1.0);
    const Weight P = Weight::polynomial({0.0, 1.0});
    const OptimizedKnots got = optimize_knots(P, omega, 8);
    return got.error <= worst_case_error(omega, P, midpoint_knots(8)) + 1e-12;
}

bool scaling_probe_constant_for_powers() {
    const ScalingProbe probe =
        scaling_monotonicity_probe(Modulus::power(2.0, 0.7), 0.5);
    return probe.classification == MonotoneClass::Constant;
}

bool extremal_trajectory_in_class() {
    const Modulus omega = Modulus::power(1.0, 1.0);
    const SetTrajectory f =
        extremal_trajectory(omega, midpoint_knots(3), Vector{1.0, 0.0});
    return holder_check(f, omega).ok;
}

bool circle_grid_geometry() {
    const GridPtr grid = DirectionGrid::circle(720);
    if (std::fabs(grid->covering_angle() - 3.14159265358979323846 / 720.0) > 1e-15)
        return false;
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const std::size_t k = grid->antipode(j);
        if (k == j || grid->antipode(k) != j) return false;
    }
    return true;
}

bool constant_trajectory_integrates_exactly() {
    const GridPtr grid = DirectionGrid::for_dimension(2);
    const PointCloud a({{0.5, -0.25}, {1.0, 1.0}});
    const IntegralResult r = integrate(SetTrajectory::constant(a),
                                       Weight::constant_one(), 1e-9, grid);
    const ConvexBody direct = embed(a, grid);
    for (std::size_t j = 0; j < grid->size(); ++j)
        if (std::fabs(r.body.value(j) - direct.value(j)) > 1e-12) return false;
    return true;
}

}  // namespace

SelfTestReport run_selftest() {
    SelfTestReport rep;
    const auto run = [&rep](const char* name, const std::function<bool()>& f) {
        bool ok = false;
        try {
            ok = f();
        } catch (...) {
            ok = false;
        }
        if (ok) {
            ++rep.passed;
        } else {
            ++rep.failed;
            rep.failures.push_back(name);
        }
    };

    run("planar hull drops interior points", hull_drops_interior_points);
    run("hausdorff metric axioms", hausdorff_metric_axioms);
    run("support linearity under combination", support_linearity);
    run("embedding commutes with scaling", embedding_scales);
    run("body width nonnegative", body_width_nonnegative);
    run("modulus validation rejects bad input", modulus_validation_rejects);
    run("uniform error matches envelope integral", uniform_error_matches_envelope_integral);
    run("accumulated modulus round trip", accumulated_modulus_round_trip);
    run("unit weight sums collapse to one", unit_weight_sums_collapse);
    run("noisy recovery reduces at zero budget", noisy_reduces_at_zero_budget);
    run("uniform budget shifts error by epsilon", uniform_budget_shifts_error);
    run("dominated knot is pruned", dominated_knot_is_pruned);
    run("integral property suite", integral_properties_hold);
    run("optimizer reproduces midpoints", optimizer_reproduces_midpoints);
    run("optimizer improves on midpoints", optimizer_improves_on_midpoints);
    run("scaling probe constant for power moduli", scaling_probe_constant_for_powers);
    run("extremal trajectory stays in class", extremal_trajectory_in_class);
    run("circle grid geometry", circle_grid_geometry);
    run("constant trajectory integrates exactly", constant_trajectory_integrates_exactly);
    return rep;
}

}  // namespace setrec
