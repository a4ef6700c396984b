#include "setrec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace setrec {

namespace {

constexpr double kCoordTol = 1e-12;
constexpr double kAreaTol = 1e-12;

bool nearly_equal(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::fabs(a[i] - b[i]) > kCoordTol) return false;
    }
    return true;
}

void sort_dedup(std::vector<Vector>& pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<Vector> kept;
    kept.reserve(pts.size());
    for (auto& p : pts) {
        if (kept.empty() || !nearly_equal(kept.back(), p)) kept.push_back(std::move(p));
    }
    pts = std::move(kept);
}

}  // namespace

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

double distance(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

PointCloud::PointCloud(std::vector<Vector> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("PointCloud: empty point set");
    const std::size_t m = points_[0].size();
    if (m == 0) throw std::invalid_argument("PointCloud: zero-dimensional point");
    for (const auto& p : points_) {
        if (p.size() != m) throw std::invalid_argument("PointCloud: mixed dimensions");
        for (double c : p) {
            if (!std::isfinite(c)) throw std::invalid_argument("PointCloud: non-finite coordinate");
        }
    }
}

PointCloud PointCloud::single(Vector p) {
    return PointCloud(std::vector<Vector>{std::move(p)});
}

PointCloud PointCloud::origin(std::size_t dim) {
    return PointCloud(std::vector<Vector>{Vector(dim, 0.0)});
}

PointCloud minkowski_combine(double lambda, const PointCloud& a,
                             double mu, const PointCloud& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("minkowski_combine: dimension mismatch");
    if (!std::isfinite(lambda) || !std::isfinite(mu))
        throw std::invalid_argument("minkowski_combine: non-finite coefficient");
    std::vector<Vector> pts;
    pts.reserve(a.size() * b.size());
    const std::size_t m = a.dim();
    for (const auto& pa : a.points()) {
        for (const auto& pb : b.points()) {
            Vector q(m);
            for (std::size_t i = 0; i < m; ++i) q[i] = lambda * pa[i] + mu * pb[i];
            pts.push_back(std::move(q));
        }
    }
    sort_dedup(pts);
    return PointCloud(std::move(pts));
}

PointCloud scale_cloud(double lambda, const PointCloud& a) {
    return minkowski_combine(lambda, a, 0.0, PointCloud::origin(a.dim()));
}

double distance_to_cloud(const Vector& p, const PointCloud& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b.points()) best = std::min(best, distance(p, q));
    return best;
}

double directed_hausdorff(const PointCloud& a, const PointCloud& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("directed_hausdorff: dimension mismatch");
    double worst = 0.0;
    for (const auto& p : a.points()) worst = std::max(worst, distance_to_cloud(p, b));
    return worst;
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

namespace {

double cross(const Vector& o, const Vector& p, const Vector& q) {
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
}

}  // namespace

PointCloud convex_hull_2d(const PointCloud& a) {
    if (a.dim() != 2) throw std::invalid_argument("convex_hull_2d: cloud is not planar");
    std::vector<Vector> pts = a.points();
    sort_dedup(pts);
    const std::size_t n = pts.size();
    if (n <= 2) return PointCloud(std::move(pts));

    std::vector<Vector> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kAreaTol) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kAreaTol) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return PointCloud(std::move(hull));
}

}  // namespace setrec
