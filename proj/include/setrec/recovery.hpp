#pragma once

// Optimal recovery of the weighted set-valued integral from exact samples at
// fixed knots: nearest-knot cells, the weighted-sample method, its worst-case
// error over H^omega, and the envelope trajectory attaining it.

#include <cstddef>
#include <vector>

#include "setrec/convexcal.hpp"
#include "setrec/funcspace.hpp"
#include "setrec/rmintegral.hpp"

namespace setrec {

// Strictly increasing knots inside [0,1] (endpoints allowed).
struct KnotSet {
    std::vector<double> knots;

    explicit KnotSet(std::vector<double> knots);
    std::size_t size() const { return knots.size(); }
};

// Nearest-knot cells: breakpoints 0, midpoints between neighbours, 1; weight
// i is the P-mass of cell i. Weights sum to the total mass of P.
struct CellDecomposition {
    std::vector<double> breakpoints;  // size n+1
    std::vector<double> weights;      // size n
    std::size_t size() const { return weights.size(); }
};

CellDecomposition decompose(const KnotSet& knots, const Weight& P);

// Weighted support-space combination of the samples: sum of w_i * co(A_i).
ConvexBody optimal_estimate(const std::vector<PointCloud>& samples,
                            const CellDecomposition& cells, const GridPtr& grid);

// x -> omega(min_i |x - x_i|); zero exactly at the knots and maximal on cell
// boundaries. Breakpoints list every non-smooth point the quadrature must
// split at.
class Envelope {
public:
    Envelope(Modulus omega, KnotSet knots);

    double operator()(double x) const;
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const KnotSet& knots() const { return knots_; }
    const Modulus& modulus() const { return omega_; }
    double nearest_knot_distance(double x) const;

private:
    Modulus omega_;
    KnotSet knots_;
    std::vector<double> breakpoints_;
};

Envelope envelope(const Modulus& omega, const KnotSet& knots);

// integral of P * omega(min_i |x - x_i|) over [0,1]; the sharp worst-case
// recovery error for exact samples at the given knots.
double worst_case_error(const Modulus& omega, const Weight& P, const KnotSet& knots);

// t -> omega(min_i |t - x_i|) * {a} for a unit vector a; lies in H^omega and
// vanishes at every knot.
SetTrajectory extremal_trajectory(const Modulus& omega, const KnotSet& knots,
                                  const Vector& a);

// |body_hausdorff(integral of P*f_extremal, estimate from all-origin samples)
//  - worst_case_error|; small gaps certify sharpness on the grid.
double sharpness_gap(const Modulus& omega, const Weight& P, const KnotSet& knots,
                     const Vector& a, const GridPtr& grid,
                     double integrate_tol = 1e-7);

}  // namespace setrec
