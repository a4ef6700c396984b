#pragma once

// Finite point clouds in R^m: Minkowski arithmetic, the Hausdorff metric,
// and planar convex hulls.

#include <cstddef>
#include <vector>

namespace setrec {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);
double distance(const Vector& a, const Vector& b);

// Nonempty finite subset of R^m; every point has the same dimension and all
// coordinates are finite.
class PointCloud {
public:
    explicit PointCloud(std::vector<Vector> points);
    static PointCloud single(Vector p);
    static PointCloud origin(std::size_t dim);

    std::size_t dim() const { return points_[0].size(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<Vector>& points() const { return points_; }
    const Vector& operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<Vector> points_;
};

// {lambda*a + mu*b : a in A, b in B}. Near-duplicate points (every
// coordinate within 1e-12) are merged; output is lexicographically sorted.
PointCloud minkowski_combine(double lambda, const PointCloud& a,
                             double mu, const PointCloud& b);

PointCloud scale_cloud(double lambda, const PointCloud& a);

// min over b in B of |p - b|.
double distance_to_cloud(const Vector& p, const PointCloud& b);

// d(A,B) = max over a in A of min over b in B of |a - b|.
double directed_hausdorff(const PointCloud& a, const PointCloud& b);

// max(d(A,B), d(B,A)); exact over all point pairs.
double hausdorff(const PointCloud& a, const PointCloud& b);

// Extreme points of the planar hull in counterclockwise order, starting from
// the lexicographic minimum. Collinear interior points are dropped (signed
// area tolerance 1e-12). Degenerate inputs collapse to a point or a pair.
PointCloud convex_hull_2d(const PointCloud& a);

}  // namespace setrec
