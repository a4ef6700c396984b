#pragma once

// Recovery from noisy samples: the lower envelope of error-shifted moduli,
// the active cells it induces, the pruned weighted method, and its sharp
// worst-case error.

#include <cstddef>
#include <utility>
#include <vector>

#include "setrec/convexcal.hpp"
#include "setrec/funcspace.hpp"
#include "setrec/recovery.hpp"

namespace setrec {

// Per-knot upper bounds on the sample error, aligned with a KnotSet.
struct ErrorBudget {
    std::vector<double> epsilons;

    explicit ErrorBudget(std::vector<double> epsilons);
    std::size_t size() const { return epsilons.size(); }
};

// Maximal subinterval on which one knot's shifted modulus attains the
// envelope minimum.
struct EnvelopeRun {
    double lo = 0.0, hi = 1.0;
    std::size_t index = 0;  // winning knot, 0-based
};

// x -> min_k (eps_k + omega(|x - x_k|)). Requires a strictly increasing
// modulus; the winning index is located by a dense scan with boundaries
// refined by bisection on pairwise differences.
class NoisyEnvelope {
public:
    NoisyEnvelope(Modulus omega, KnotSet knots, ErrorBudget budget);

    double operator()(double x) const;
    // Index attaining the minimum at x; ties resolve to the lowest index.
    std::size_t argmin_index(double x) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<EnvelopeRun>& runs() const { return runs_; }
    const KnotSet& knots() const { return knots_; }
    const ErrorBudget& budget() const { return budget_; }
    const Modulus& modulus() const { return omega_; }

private:
    Modulus omega_;
    KnotSet knots_;
    ErrorBudget budget_;
    std::vector<EnvelopeRun> runs_;
    std::vector<double> breakpoints_;
};

NoisyEnvelope noisy_envelope(const Modulus& omega, const KnotSet& knots,
                             const ErrorBudget& budget);

// One active knot: the closed intervals where it wins and their P-mass.
struct ActiveCell {
    std::size_t index = 0;
    std::vector<std::pair<double, double>> intervals;
    double weight = 0.0;
};

struct ActiveDecomposition {
    std::size_t knot_count = 0;
    std::vector<ActiveCell> cells;  // ascending by index

    std::size_t nu() const { return cells.size(); }
    std::vector<std::size_t> active_indices() const;
};

ActiveDecomposition active_cells(const Modulus& omega, const KnotSet& knots,
                                 const ErrorBudget& budget, const Weight& P);

// Weighted support-space combination over the active samples only; inactive
// samples never influence the result.
ConvexBody noisy_optimal_estimate(const std::vector<PointCloud>& samples,
                                  const ActiveDecomposition& decomp,
                                  const GridPtr& grid);

// integral of P times the noisy envelope over [0,1]; the sharp worst-case
// recovery error under the given error budget.
double noisy_error_value(const Modulus& omega, const KnotSet& knots,
                         const ErrorBudget& budget, const Weight& P);

// |body_hausdorff(integral of P * envelope * {a}, estimate from all-origin
// samples) - noisy_error_value|; small gaps certify sharpness on the grid.
double noisy_sharpness_gap(const Modulus& omega, const KnotSet& knots,
                           const ErrorBudget& budget, const Weight& P,
                           const Vector& a, const GridPtr& grid,
                           double integrate_tol = 1e-7);

}  // namespace setrec
