#pragma once

// Support-function calculus on finite direction grids. A ConvexBody is the
// vector of support values of a convex compact over a shared grid; Minkowski
// arithmetic and the Hausdorff metric become coordinate-wise operations.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "setrec/geometry.hpp"

namespace setrec {

// Immutable set of unit directions closed under negation. antipode(j) gives
// the index of -u_j; the involution has no fixed points.
class DirectionGrid {
public:
    // 2D: `count` equally spaced angles (count even, default 720).
    static std::shared_ptr<const DirectionGrid> circle(std::size_t count = 720);
    // 3D: `pairs` Fibonacci-sphere directions plus their negations.
    static std::shared_ptr<const DirectionGrid> fibonacci_sphere(std::size_t pairs = 1024);
    // m >= 1: `pairs` seeded quasi-random unit directions plus negations.
    static std::shared_ptr<const DirectionGrid> quasi_random(std::size_t dim,
                                                             std::size_t pairs = 4096,
                                                             std::uint64_t seed = 42);
    // Default grid for a dimension: {+1,-1} (1D), circle(720) (2D),
    // fibonacci_sphere(1024) (3D), quasi_random(m, 4096) above.
    static std::shared_ptr<const DirectionGrid> for_dimension(std::size_t dim);
    static std::shared_ptr<const DirectionGrid> for_dimension(std::size_t dim,
                                                              std::size_t size_hint);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dirs_.size(); }
    const std::vector<Vector>& directions() const { return dirs_; }
    const Vector& direction(std::size_t j) const { return dirs_[j]; }
    std::size_t antipode(std::size_t j) const { return antipode_[j]; }

    // Covering radius in radians: exact for 1D/2D, a seeded probe estimate
    // otherwise.
    double covering_angle() const { return covering_angle_; }
    // Documented underestimation bound for body_hausdorff on bodies of
    // circumradius rho: rho * (1 - cos(covering_angle)). Tight for smooth
    // support maxima such as singleton pairs.
    double support_error_bound(double rho) const;

private:
    DirectionGrid(std::size_t dim, std::vector<Vector> dirs,
                  std::vector<std::size_t> antipode, double covering);

    std::size_t dim_;
    std::vector<Vector> dirs_;
    std::vector<std::size_t> antipode_;
    double covering_angle_;
};

using GridPtr = std::shared_ptr<const DirectionGrid>;

// Support values of a convex compact over a grid. Width along every
// direction pair is nonnegative: h(u) + h(-u) >= 0.
class ConvexBody {
public:
    ConvexBody(GridPtr grid, std::vector<double> support);

    const GridPtr& grid() const { return grid_; }
    const std::vector<double>& support() const { return support_; }
    double value(std::size_t j) const { return support_[j]; }

private:
    GridPtr grid_;
    std::vector<double> support_;
};

// h_A(u_j) = max over points of <a, u_j>; represents co(A).
ConvexBody embed(const PointCloud& a, const GridPtr& grid);

// lambda*X + mu*Y for lambda, mu >= 0 (use negate for reflection).
ConvexBody body_combine(double lambda, const ConvexBody& x,
                        double mu, const ConvexBody& y);

// Support of -X via the antipodal permutation.
ConvexBody negate(const ConvexBody& x);

// max over j of |h_X(u_j) - h_Y(u_j)|; lower-approximates the Hausdorff
// distance with grid-resolution error.
double body_hausdorff(const ConvexBody& x, const ConvexBody& y);

}  // namespace setrec
