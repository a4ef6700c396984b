#pragma once

// Weighted set-valued Riemann integration over [0,1] in support space, with
// dyadic refinement and a numerical property suite for the integral laws.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "setrec/convexcal.hpp"
#include "setrec/funcspace.hpp"

namespace setrec {

// Tagged partition of [0,1]: strictly increasing breakpoints from 0 to 1 and
// one tag inside each cell.
struct Partition {
    std::vector<double> breakpoints;
    std::vector<double> tags;

    Partition(std::vector<double> breakpoints, std::vector<double> tags);
    static Partition uniform_midpoint(std::size_t cells);

    std::size_t cells() const { return tags.size(); }
    double mesh() const;
};

struct RefinementStep {
    std::size_t cells = 0;
    double distance = 0.0;  // to the previous dyadic iterate
};

struct IntegralResult {
    ConvexBody body;
    double achieved_tolerance = 0.0;
    std::size_t refinement_count = 0;
    std::vector<RefinementStep> history;
};

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, IntegralResult best);
    const IntegralResult& best() const { return best_; }

private:
    IntegralResult best_;
};

// sum over cells of |cell| * P(tag) * f(tag), accumulated in support space in
// ascending cell order.
ConvexBody riemann_sum(const SetTrajectory& f, const Partition& partition,
                       const Weight& P, const GridPtr& grid);

// Dyadic midpoint refinement n = 1, 2, 4, ... until successive iterates stay
// within tol/2 in body_hausdorff for three levels running (one agreement can
// be a sampling alias); the last iterate is returned. Refinement stops with
// IntegrationError (carrying the best iterate) past 2^22 cells.
IntegralResult integrate(const SetTrajectory& f, const Weight& P, double tol,
                         const GridPtr& grid, std::size_t max_level = 22);

struct PropertyReport {
    struct Entry {
        std::string name;
        double violation = 0.0;
    };
    std::vector<Entry> entries;
    double worst() const;
};

// Checks the integral laws (convex value, hull invariance, scalar
// homogeneity, additivity, interval additivity, metric inequality) on shared
// partitions; violations are the observed numerical defects.
PropertyReport integral_property_suite(const SetTrajectory& f, const SetTrajectory& g,
                                       const Weight& P, const GridPtr& grid,
                                       std::size_t cells = 512);

}  // namespace setrec
