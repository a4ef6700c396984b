#include "setrec/convexcal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "setrec/detail/rng.hpp"

namespace setrec {

namespace {

constexpr double kPi = 3.14159265358979323846;

using detail::SplitMix64;

double estimate_covering(const std::vector<Vector>& dirs, std::size_t dim) {
    // Probe the sphere with seeded quasi-random directions; report the worst
    // observed angle to the nearest grid direction.
    SplitMix64 rng(0x5eedc0ff'ee42ULL);
    const std::size_t probes = dim <= 3 ? 16384 : 4096;
    double worst = 0.0;
    Vector p(dim);
    for (std::size_t t = 0; t < probes; ++t) {
        double nrm2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            // Box-Muller from uniform bits keeps the probe platform-stable.
            const double u1 = std::max(rng.uniform01(), 1e-300);
            const double u2 = rng.uniform01();
            p[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
            nrm2 += p[i] * p[i];
        }
        if (nrm2 == 0.0) continue;
        const double inv = 1.0 / std::sqrt(nrm2);
        double best_dot = -1.0;
        for (const auto& d : dirs) {
            double s = 0.0;
            for (std::size_t i = 0; i < dim; ++i) s += d[i] * p[i];
            best_dot = std::max(best_dot, s * inv);
        }
        worst = std::max(worst, std::acos(std::clamp(best_dot, -1.0, 1.0)));
    }
    return worst;
}

}  // namespace

DirectionGrid::DirectionGrid(std::size_t dim, std::vector<Vector> dirs,
                             std::vector<std::size_t> antipode, double covering)
    : dim_(dim), dirs_(std::move(dirs)), antipode_(std::move(antipode)),
      covering_angle_(covering) {
    if (dirs_.size() < 2 * dim_)
        throw std::invalid_argument("DirectionGrid: needs at least 2m directions");
    for (std::size_t j = 0; j < dirs_.size(); ++j) {
        if (dirs_[j].size() != dim_)
            throw std::invalid_argument("DirectionGrid: direction dimension mismatch");
        if (std::fabs(norm(dirs_[j]) - 1.0) > 1e-12)
            throw std::invalid_argument("DirectionGrid: non-unit direction");
        const std::size_t k = antipode_[j];
        if (k >= dirs_.size() || k == j || antipode_[k] != j)
            throw std::invalid_argument("DirectionGrid: antipodal map is not an involution");
        for (std::size_t i = 0; i < dim_; ++i) {
            if (std::fabs(dirs_[j][i] + dirs_[k][i]) > 1e-12)
                throw std::invalid_argument("DirectionGrid: antipode is not the negation");
        }
    }
}

namespace {

// Same-spec grids are shared so that bodies built independently still
// compare by grid identity.
std::mutex g_grid_cache_mutex;
std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, GridPtr> g_grid_cache;

GridPtr cache_lookup(std::size_t kind, std::size_t a, std::uint64_t b) {
    std::lock_guard<std::mutex> lock(g_grid_cache_mutex);
    auto it = g_grid_cache.find({kind, a, b});
    return it == g_grid_cache.end() ? nullptr : it->second;
}

void cache_store(std::size_t kind, std::size_t a, std::uint64_t b, const GridPtr& g) {
    std::lock_guard<std::mutex> lock(g_grid_cache_mutex);
    g_grid_cache.emplace(std::make_tuple(kind, a, b), g);
}

}  // namespace

GridPtr DirectionGrid::circle(std::size_t count) {
    if (count < 4 || count % 2 != 0)
        throw std::invalid_argument("DirectionGrid::circle: count must be even and >= 4");
    if (GridPtr hit = cache_lookup(2, count, 0)) return hit;
    std::vector<Vector> dirs(count);
    std::vector<std::size_t> anti(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(count);
        dirs[j] = {std::cos(phi), std::sin(phi)};
        anti[j] = (j + count / 2) % count;
    }
    // Make antipodal pairs exact negations despite trig rounding.
    for (std::size_t j = 0; j < count / 2; ++j) {
        dirs[anti[j]] = {-dirs[j][0], -dirs[j][1]};
    }
    const double covering = kPi / static_cast<double>(count);
    GridPtr g(new DirectionGrid(2, std::move(dirs), std::move(anti), covering));
    cache_store(2, count, 0, g);
    return g;
}

GridPtr DirectionGrid::fibonacci_sphere(std::size_t pairs) {
    if (pairs < 3) throw std::invalid_argument("DirectionGrid::fibonacci_sphere: too few pairs");
    if (GridPtr hit = cache_lookup(3, pairs, 0)) return hit;
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    std::vector<Vector> dirs(2 * pairs);
    std::vector<std::size_t> anti(2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(pairs);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        Vector d = {r * std::cos(phi), r * std::sin(phi), z};
        const double n = norm(d);
        for (auto& c : d) c /= n;
        dirs[i] = d;
        dirs[pairs + i] = {-d[0], -d[1], -d[2]};
        anti[i] = pairs + i;
        anti[pairs + i] = i;
    }
    const double covering = estimate_covering(dirs, 3);
    GridPtr g(new DirectionGrid(3, std::move(dirs), std::move(anti), covering));
    cache_store(3, pairs, 0, g);
    return g;
}

GridPtr DirectionGrid::quasi_random(std::size_t dim, std::size_t pairs, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("DirectionGrid::quasi_random: bad dimension");
    if (pairs < dim) throw std::invalid_argument("DirectionGrid::quasi_random: too few pairs");
    if (GridPtr hit = cache_lookup(1000 + dim, pairs, seed)) return hit;
    SplitMix64 rng(seed);
    std::vector<Vector> dirs(2 * pairs);
    std::vector<std::size_t> anti(2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        Vector d(dim);
        double nrm2 = 0.0;
        do {
            nrm2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double u1 = std::max(rng.uniform01(), 1e-300);
                const double u2 = rng.uniform01();
                d[k] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
                nrm2 += d[k] * d[k];
            }
        } while (nrm2 < 1e-12);
        const double inv = 1.0 / std::sqrt(nrm2);
        for (auto& c : d) c *= inv;
        dirs[i] = d;
        Vector nd(dim);
        for (std::size_t k = 0; k < dim; ++k) nd[k] = -d[k];
        dirs[pairs + i] = std::move(nd);
        anti[i] = pairs + i;
        anti[pairs + i] = i;
    }
    const double covering = dim == 1 ? 0.0 : estimate_covering(dirs, dim);
    GridPtr g(new DirectionGrid(dim, std::move(dirs), std::move(anti), covering));
    cache_store(1000 + dim, pairs, seed, g);
    return g;
}

GridPtr DirectionGrid::for_dimension(std::size_t dim) { return for_dimension(dim, 0); }

GridPtr DirectionGrid::for_dimension(std::size_t dim, std::size_t size_hint) {
    switch (dim) {
        case 0:
            throw std::invalid_argument("DirectionGrid::for_dimension: bad dimension");
        case 1: {
            if (GridPtr hit = cache_lookup(1, 2, 0)) return hit;
            std::vector<Vector> dirs = {{1.0}, {-1.0}};
            std::vector<std::size_t> anti = {1, 0};
            GridPtr g(new DirectionGrid(1, std::move(dirs), std::move(anti), 0.0));
            cache_store(1, 2, 0, g);
            return g;
        }
        case 2:
            return circle(size_hint == 0 ? 720 : size_hint);
        case 3:
            return fibonacci_sphere(size_hint == 0 ? 1024 : size_hint / 2);
        default:
            return quasi_random(dim, size_hint == 0 ? 4096 : size_hint / 2);
    }
}

double DirectionGrid::support_error_bound(double rho) const {
    if (rho < 0.0) throw std::invalid_argument("support_error_bound: negative circumradius");
    return rho * (1.0 - std::cos(covering_angle_));
}

ConvexBody::ConvexBody(GridPtr grid, std::vector<double> support)
    : grid_(std::move(grid)), support_(std::move(support)) {
    if (!grid_) throw std::invalid_argument("ConvexBody: missing grid");
    if (support_.size() != grid_->size())
        throw std::invalid_argument("ConvexBody: support length does not match grid");
    double scale = 1.0;
    for (double h : support_) {
        if (!std::isfinite(h)) throw std::invalid_argument("ConvexBody: non-finite support value");
        scale = std::max(scale, std::fabs(h));
    }
    for (std::size_t j = 0; j < support_.size(); ++j) {
        if (support_[j] + support_[grid_->antipode(j)] < -1e-9 * scale)
            throw std::invalid_argument("ConvexBody: negative width along a direction pair");
    }
}

ConvexBody embed(const PointCloud& a, const GridPtr& grid) {
    if (!grid) throw std::invalid_argument("embed: missing grid");
    if (a.dim() != grid->dim()) throw std::invalid_argument("embed: dimension mismatch");
    std::vector<double> h(grid->size(), -std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const Vector& u = grid->direction(j);
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& p : a.points()) best = std::max(best, dot(p, u));
        h[j] = best;
    }
    return ConvexBody(grid, std::move(h));
}

ConvexBody body_combine(double lambda, const ConvexBody& x,
                        double mu, const ConvexBody& y) {
    if (x.grid() != y.grid())
        throw std::invalid_argument("body_combine: bodies live on different grids");
    if (lambda < 0.0 || mu < 0.0)
        throw std::invalid_argument("body_combine: negative coefficient (apply negate first)");
    std::vector<double> h(x.support().size());
    for (std::size_t j = 0; j < h.size(); ++j)
        h[j] = lambda * x.value(j) + mu * y.value(j);
    return ConvexBody(x.grid(), std::move(h));
}

ConvexBody negate(const ConvexBody& x) {
    const auto& g = *x.grid();
    std::vector<double> h(x.support().size());
    for (std::size_t j = 0; j < h.size(); ++j) h[j] = x.value(g.antipode(j));
    return ConvexBody(x.grid(), std::move(h));
}

double body_hausdorff(const ConvexBody& x, const ConvexBody& y) {
    if (x.grid() != y.grid())
        throw std::invalid_argument("body_hausdorff: bodies live on different grids");
    double worst = 0.0;
    for (std::size_t j = 0; j < x.support().size(); ++j)
        worst = std::max(worst, std::fabs(x.value(j) - y.value(j)));
    return worst;
}

}  // namespace setrec
