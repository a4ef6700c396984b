#include "setrec/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "setrec/quadrature.hpp"

namespace setrec {

KnotSet::KnotSet(std::vector<double> ks) : knots(std::move(ks)) {
    if (knots.empty()) throw std::invalid_argument("KnotSet: needs at least one knot");
    for (double x : knots) {
        if (!(x >= 0.0) || !(x <= 1.0))
            throw std::invalid_argument("KnotSet: knot outside [0,1]");
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1]))
            throw std::invalid_argument("KnotSet: knots must strictly increase");
    }
}

CellDecomposition decompose(const KnotSet& knots, const Weight& P) {
    const std::size_t n = knots.size();
    CellDecomposition cells;
    cells.breakpoints.resize(n + 1);
    cells.breakpoints[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i)
        cells.breakpoints[i] = 0.5 * (knots.knots[i - 1] + knots.knots[i]);
    cells.breakpoints[n] = 1.0;
    cells.weights.resize(n);
    const std::vector<double> pk = P.kinks();
    for (std::size_t i = 0; i < n; ++i) {
        const double a = cells.breakpoints[i];
        const double b = cells.breakpoints[i + 1];
        if (P.is_constant_one()) {
            cells.weights[i] = b - a;
        } else if (a == b) {
            cells.weights[i] = 0.0;
        } else {
            cells.weights[i] = integrate_with_breakpoints(
                [&P](double x) { return P(x); }, a, b, pk, 1e-10);
        }
    }
    return cells;
}

ConvexBody optimal_estimate(const std::vector<PointCloud>& samples,
                            const CellDecomposition& cells, const GridPtr& grid) {
    if (!grid) throw std::invalid_argument("optimal_estimate: missing grid");
    if (samples.size() != cells.size())
        throw std::invalid_argument("optimal_estimate: one sample per cell required");
    std::vector<double> h(grid->size(), 0.0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].dim() != grid->dim())
            throw std::invalid_argument("optimal_estimate: sample dimension mismatch");
        const ConvexBody b = embed(samples[i], grid);
        const double w = cells.weights[i];
        for (std::size_t j = 0; j < h.size(); ++j) h[j] += w * b.value(j);
    }
    return ConvexBody(grid, std::move(h));
}

Envelope::Envelope(Modulus omega, KnotSet knots)
    : omega_(std::move(omega)), knots_(std::move(knots)) {
    const auto& xs = knots_.knots;
    std::vector<double> bps = {0.0, 1.0};
    for (double x : xs) bps.push_back(x);
    for (std::size_t i = 1; i < xs.size(); ++i) bps.push_back(0.5 * (xs[i - 1] + xs[i]));
    for (double k : omega_.kinks()) {
        for (double x : xs) {
            if (x + k < 1.0) bps.push_back(x + k);
            if (x - k > 0.0) bps.push_back(x - k);
        }
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<double> clipped;
    for (double b : bps) {
        if (b >= 0.0 && b <= 1.0) clipped.push_back(b);
    }
    breakpoints_ = std::move(clipped);
}

double Envelope::nearest_knot_distance(double x) const {
    const auto& xs = knots_.knots;
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != xs.end()) best = std::min(best, *it - x);
    if (it != xs.begin()) best = std::min(best, x - *(it - 1));
    return best;
}

double Envelope::operator()(double x) const {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error("Envelope: argument outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    return omega_(std::min(1.0, nearest_knot_distance(x)));
}

Envelope envelope(const Modulus& omega, const KnotSet& knots) {
    return Envelope(omega, knots);
}

double worst_case_error(const Modulus& omega, const Weight& P, const KnotSet& knots) {
    const Envelope env(omega, knots);
    std::vector<double> cuts = env.breakpoints();
    for (double k : P.kinks()) cuts.push_back(k);
    return integrate_with_breakpoints(
        [&](double x) { return P(x) * env(x); }, 0.0, 1.0, cuts, 1e-10);
}

SetTrajectory extremal_trajectory(const Modulus& omega, const KnotSet& knots,
                                  const Vector& a) {
    if (std::fabs(norm(a) - 1.0) > 1e-12)
        throw std::invalid_argument("extremal_trajectory: direction must be a unit vector");
    const Envelope env(omega, knots);
    return SetTrajectory::scalar_profile([env](double t) { return env(t); }, a);
}

double sharpness_gap(const Modulus& omega, const Weight& P, const KnotSet& knots,
                     const Vector& a, const GridPtr& grid, double integrate_tol) {
    const SetTrajectory f = extremal_trajectory(omega, knots, a);
    const IntegralResult lhs = integrate(f, P, integrate_tol, grid);
    const CellDecomposition cells = decompose(knots, P);
    const std::vector<PointCloud> zeros(knots.size(), PointCloud::origin(grid->dim()));
    const ConvexBody estimate = optimal_estimate(zeros, cells, grid);
    const double method_error = body_hausdorff(lhs.body, estimate);
    return std::fabs(method_error - worst_case_error(omega, P, knots));
}

}  // namespace setrec
