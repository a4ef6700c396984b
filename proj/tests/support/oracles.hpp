#pragma once

// Test-only oracles computed by independent algorithms: exact Hausdorff
// distance between 2D convex polygons (vertex-to-solid-polygon; the maximum
// of a convex function over a convex set sits at a vertex), and a point-cloud
// Minkowski Riemann sum that never touches support space.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "setrec/detail/rng.hpp"
#include "setrec/funcspace.hpp"
#include "setrec/geometry.hpp"
#include "setrec/rmintegral.hpp"

namespace testsupport {

inline double dist_point_segment(const setrec::Vector& p, const setrec::Vector& a,
                                 const setrec::Vector& b) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0)
        t = std::clamp(((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2, 0.0, 1.0);
    const double qx = a[0] + t * dx - p[0], qy = a[1] + t * dy - p[1];
    return std::sqrt(qx * qx + qy * qy);
}

// verts must be a convex polygon in counter-clockwise order.
inline bool point_in_convex(const setrec::Vector& p,
                            const std::vector<setrec::Vector>& verts) {
    const std::size_t n = verts.size();
    if (n == 1) return p[0] == verts[0][0] && p[1] == verts[0][1];
    for (std::size_t i = 0; i < n; ++i) {
        const setrec::Vector& a = verts[i];
        const setrec::Vector& b = verts[(i + 1) % n];
        const double cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        if (cross < 0.0) return false;
    }
    return true;
}

inline double dist_point_polygon(const setrec::Vector& p,
                                 const std::vector<setrec::Vector>& verts) {
    if (verts.size() >= 3 && point_in_convex(p, verts)) return 0.0;
    if (verts.size() == 1) return setrec::distance(p, verts[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verts.size(); ++i)
        best = std::min(best,
                        dist_point_segment(p, verts[i], verts[(i + 1) % verts.size()]));
    return best;
}

// Exact Hausdorff distance between solid convex polygons (vertex lists CCW).
inline double polygon_hausdorff(const std::vector<setrec::Vector>& a,
                                const std::vector<setrec::Vector>& b) {
    double worst = 0.0;
    for (const setrec::Vector& p : a) worst = std::max(worst, dist_point_polygon(p, b));
    for (const setrec::Vector& p : b) worst = std::max(worst, dist_point_polygon(p, a));
    return worst;
}

// Point-cloud Minkowski Riemann sum: iterated hull of pairwise sums. 2D only;
// usable up to a few dozen cells before hull sizes matter.
inline setrec::PointCloud cloud_riemann_sum(const setrec::SetTrajectory& f,
                                            const setrec::Partition& partition,
                                            const setrec::Weight& P) {
    if (f.dim() != 2)
        throw std::invalid_argument("cloud_riemann_sum: 2D only");
    std::vector<setrec::Vector> acc = {{0.0, 0.0}};
    for (std::size_t i = 0; i < partition.cells(); ++i) {
        const double width = partition.breakpoints[i + 1] - partition.breakpoints[i];
        const double tag = partition.tags[i];
        const setrec::PointCloud term =
            setrec::scale_cloud(width * P(tag), f(tag));
        std::vector<setrec::Vector> sums;
        sums.reserve(acc.size() * term.size());
        for (const setrec::Vector& s : acc)
            for (const setrec::Vector& t : term.points())
                sums.push_back({s[0] + t[0], s[1] + t[1]});
        acc = setrec::convex_hull_2d(setrec::PointCloud(std::move(sums))).points();
    }
    return setrec::PointCloud(std::move(acc));
}

// Seeded random point cloud with coordinates in [-scale, scale].
inline setrec::PointCloud random_cloud(setrec::detail::SplitMix64& rng,
                                       std::size_t dim, std::size_t max_points,
                                       double scale = 1.0) {
    const std::size_t count = 1 + rng.next() % max_points;
    std::vector<setrec::Vector> pts(count, setrec::Vector(dim, 0.0));
    for (setrec::Vector& p : pts)
        for (double& c : p) c = scale * (2.0 * rng.uniform01() - 1.0);
    return setrec::PointCloud(std::move(pts));
}

}  // namespace testsupport
