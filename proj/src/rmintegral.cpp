#include "setrec/rmintegral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace setrec {

Partition::Partition(std::vector<double> bps, std::vector<double> tgs)
    : breakpoints(std::move(bps)), tags(std::move(tgs)) {
    if (breakpoints.size() < 2 || breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
        throw std::invalid_argument("Partition: breakpoints must run from 0 to 1");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1]))
            throw std::invalid_argument("Partition: breakpoints must increase");
    }
    if (tags.size() != breakpoints.size() - 1)
        throw std::invalid_argument("Partition: one tag per cell required");
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (tags[i] < breakpoints[i] || tags[i] > breakpoints[i + 1])
            throw std::invalid_argument("Partition: tag outside its cell");
    }
}

Partition Partition::uniform_midpoint(std::size_t cells) {
    if (cells == 0) throw std::invalid_argument("Partition: needs at least one cell");
    std::vector<double> bps(cells + 1);
    std::vector<double> tgs(cells);
    const double n = static_cast<double>(cells);
    for (std::size_t i = 0; i <= cells; ++i) bps[i] = static_cast<double>(i) / n;
    bps[cells] = 1.0;
    for (std::size_t i = 0; i < cells; ++i)
        tgs[i] = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    return Partition(std::move(bps), std::move(tgs));
}

double Partition::mesh() const {
    double m = 0.0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        m = std::max(m, breakpoints[i] - breakpoints[i - 1]);
    return m;
}

IntegrationError::IntegrationError(const std::string& what, IntegralResult best)
    : std::runtime_error(what), best_(std::move(best)) {}

ConvexBody riemann_sum(const SetTrajectory& f, const Partition& partition,
                       const Weight& P, const GridPtr& grid) {
    if (!grid) throw std::invalid_argument("riemann_sum: missing grid");
    if (f.dim() != grid->dim()) throw std::invalid_argument("riemann_sum: dimension mismatch");

    const std::size_t G = grid->size();
    const bool factored = f.kind() == SetTrajectory::Kind::Constant ||
                          f.kind() == SetTrajectory::Kind::ScalarProfile ||
                          f.kind() == SetTrajectory::Kind::ScaledBody;
    if (factored) {
        // f(t) = g(t) * A with A fixed and g >= 0, so the whole sum factors
        // through one scalar accumulation.
        double s = 0.0;
        for (std::size_t i = 0; i < partition.cells(); ++i) {
            const double dx = partition.breakpoints[i + 1] - partition.breakpoints[i];
            const double t = partition.tags[i];
            s += dx * P(t) * f.profile_value(t);
        }
        ConvexBody base = embed(f.base_cloud(), grid);
        std::vector<double> h(G);
        for (std::size_t j = 0; j < G; ++j) h[j] = s * base.value(j);
        return ConvexBody(grid, std::move(h));
    }

    std::vector<double> h(G, 0.0);
    for (std::size_t i = 0; i < partition.cells(); ++i) {
        const double dx = partition.breakpoints[i + 1] - partition.breakpoints[i];
        const double t = partition.tags[i];
        const double w = dx * P(t);
        const PointCloud cloud = f(t);
        for (std::size_t j = 0; j < G; ++j) {
            const Vector& u = grid->direction(j);
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& p : cloud.points()) best = std::max(best, dot(p, u));
            h[j] += w * best;
        }
    }
    return ConvexBody(grid, std::move(h));
}

IntegralResult integrate(const SetTrajectory& f, const Weight& P, double tol,
                         const GridPtr& grid, std::size_t max_level) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
    ConvexBody prev = riemann_sum(f, Partition::uniform_midpoint(1), P, grid);
    std::vector<RefinementStep> history;
    // Coarse midpoint sums can alias: symmetric kink errors cancel exactly, so
    // successive dyadic sums may agree for two levels while missing features
    // narrower than the cell width. Convergence needs three small steps in a row.
    std::size_t small_steps = 0;
    for (std::size_t level = 1; level <= max_level; ++level) {
        const std::size_t cells = static_cast<std::size_t>(1) << level;
        ConvexBody next = riemann_sum(f, Partition::uniform_midpoint(cells), P, grid);
        const double d = body_hausdorff(prev, next);
        history.push_back({cells, d});
        small_steps = d <= 0.5 * tol ? small_steps + 1 : 0;
        if (small_steps >= 3)
            return IntegralResult{next, d, level, std::move(history)};
        prev = std::move(next);
    }
    IntegralResult best{prev, history.empty() ? 0.0 : history.back().distance,
                        max_level, history};
    throw IntegrationError("integrate: refinement cap reached before the tolerance", best);
}

double PropertyReport::worst() const {
    double w = 0.0;
    for (const auto& e : entries) w = std::max(w, e.violation);
    return w;
}

namespace {

// Concatenation of uniform midpoint partitions over [0, t1], [t1, t2], ... so
// sub-interval sums regroup the very same terms as the global sum.
Partition split_uniform(const std::vector<double>& cuts, std::size_t cells_per_piece) {
    std::vector<double> bps = {0.0};
    std::vector<double> tgs;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double a = cuts[p], b = cuts[p + 1];
        for (std::size_t i = 1; i <= cells_per_piece; ++i) {
            const double n = static_cast<double>(cells_per_piece);
            const double hi = i == cells_per_piece
                                  ? b
                                  : a + (b - a) * static_cast<double>(i) / n;
            tgs.push_back(a + (b - a) * (2.0 * static_cast<double>(i) - 1.0) / (2.0 * n));
            bps.push_back(hi);
        }
    }
    return Partition(std::move(bps), std::move(tgs));
}

SetTrajectory hulled_2d(const SetTrajectory& f) {
    return SetTrajectory::custom(f.dim(), [f](double t) { return convex_hull_2d(f(t)); });
}

SetTrajectory scaled(const SetTrajectory& f, double lambda) {
    return SetTrajectory::custom(f.dim(), [f, lambda](double t) {
        return scale_cloud(lambda, f(t));
    });
}

SetTrajectory pointwise_sum(const SetTrajectory& f, const SetTrajectory& g) {
    return SetTrajectory::custom(f.dim(), [f, g](double t) {
        return minkowski_combine(1.0, f(t), 1.0, g(t));
    });
}

}  // namespace

PropertyReport integral_property_suite(const SetTrajectory& f, const SetTrajectory& g,
                                       const Weight& P, const GridPtr& grid,
                                       std::size_t cells) {
    if (f.dim() != g.dim())
        throw std::invalid_argument("integral_property_suite: dimension mismatch");
    PropertyReport rep;
    const Partition part = Partition::uniform_midpoint(cells);

    const ConvexBody If = riemann_sum(f, part, P, grid);
    const ConvexBody Ig = riemann_sum(g, part, P, grid);

    // Convex value: nonnegative width along every direction pair.
    {
        double worst = 0.0;
        for (std::size_t j = 0; j < If.support().size(); ++j) {
            const double width = If.value(j) + If.value(grid->antipode(j));
            worst = std::max(worst, -width);
        }
        rep.entries.push_back({"convex_value_width", worst});
    }

    // Integrating the pointwise hull changes nothing.
    if (f.dim() == 2) {
        const ConvexBody Ihull = riemann_sum(hulled_2d(f), part, P, grid);
        rep.entries.push_back({"hull_invariance", body_hausdorff(If, Ihull)});
    } else {
        rep.entries.push_back({"hull_invariance", 0.0});
    }

    // Scalar homogeneity, one positive and one negative factor.
    {
        const double lam = 2.25;
        const ConvexBody lhs = riemann_sum(scaled(f, lam), part, P, grid);
        const ConvexBody rhs = body_combine(lam, If, 0.0, If);
        double v = body_hausdorff(lhs, rhs);
        const ConvexBody lhs_neg = riemann_sum(scaled(f, -1.0), part, P, grid);
        const ConvexBody rhs_neg = negate(If);
        v = std::max(v, body_hausdorff(lhs_neg, rhs_neg));
        rep.entries.push_back({"scalar_homogeneity", v});
    }

    // Additivity over pointwise Minkowski sums.
    {
        const ConvexBody lhs = riemann_sum(pointwise_sum(f, g), part, P, grid);
        const ConvexBody rhs = body_combine(1.0, If, 1.0, Ig);
        rep.entries.push_back({"minkowski_additivity", body_hausdorff(lhs, rhs)});
    }

    // Additivity over subdivision of [0,1]: per-piece partial sums over the
    // shared cell set must regroup to the full sum. The partial sums use the
    // generic accumulation, which also cross-checks the factored path.
    {
        const std::vector<double> cuts = {0.0, 0.3, 0.7, 1.0};
        const std::size_t per_piece = std::max<std::size_t>(cells / 3, 8);
        const Partition joint = split_uniform(cuts, per_piece);
        const ConvexBody full = riemann_sum(f, joint, P, grid);

        const std::size_t G = grid->size();
        std::vector<double> total(G, 0.0);
        for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
            std::vector<double> piece(G, 0.0);
            for (std::size_t i = p * per_piece; i < (p + 1) * per_piece; ++i) {
                const double dx = joint.breakpoints[i + 1] - joint.breakpoints[i];
                const double t = joint.tags[i];
                const double w = dx * P(t);
                const PointCloud cloud = f(t);
                for (std::size_t j = 0; j < G; ++j) {
                    double best = -std::numeric_limits<double>::infinity();
                    for (const auto& q : cloud.points()) best = std::max(best, dot(q, grid->direction(j)));
                    piece[j] += w * best;
                }
            }
            for (std::size_t j = 0; j < G; ++j) total[j] += piece[j];
        }
        rep.entries.push_back(
            {"interval_additivity", body_hausdorff(full, ConvexBody(grid, std::move(total)))});
    }

    // delta(I f, I g) <= integral of delta(f, g), evaluated with the same
    // tags and weights.
    {
        double rhs = 0.0;
        for (std::size_t i = 0; i < part.cells(); ++i) {
            const double dx = part.breakpoints[i + 1] - part.breakpoints[i];
            const double t = part.tags[i];
            rhs += dx * P(t) * hausdorff(f(t), g(t));
        }
        const double lhs = body_hausdorff(If, Ig);
        rep.entries.push_back({"metric_inequality", std::max(0.0, lhs - rhs)});
    }

    return rep;
}

}  // namespace setrec
