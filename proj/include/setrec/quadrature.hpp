#pragma once

// Internal scalar numerics: adaptive Gauss-Kronrod quadrature with
// breakpoint pre-splitting, golden-section minimization, and monotone
// inversion by bisection.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace setrec {

class NonconvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

// Adaptive G7/K15 on [a,b]; splits the worst panel until the summed error
// estimate falls below abs_tol or the panel budget runs out.
QuadResult adaptive_integrate(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              std::size_t max_panels = 4096);

// Splits [a,b] at the given interior breakpoints first, then integrates each
// piece adaptively. Throws NonconvergenceError when the tolerance cannot be
// met.
double integrate_with_breakpoints(const std::function<double(double)>& f,
                                  double a, double b,
                                  const std::vector<double>& breakpoints,
                                  double abs_tol);

// Value of one 15-point Gauss-Kronrod panel over [a,b]; exact for
// polynomials up to degree 22, no error control.
double gauss_kronrod_panel(const std::function<double(double)>& f, double a, double b);

// Composite G7/K15 on [0,x] over a fixed geometric ladder toward 0, split at
// the given interior kinks. The panel structure does not adapt, so the result
// is a smooth, monotone-in-x function of near machine precision for
// piecewise-smooth nonnegative integrands (endpoint power singularities
// included); used where inverse functions must reproduce arguments exactly.
double integrate_from_zero(const std::function<double(double)>& f, double x,
                           const std::vector<double>& kinks = {});

struct MinResult {
    double x = 0.0;
    double value = 0.0;
};

// Golden-section search on (lo, hi); returns the best interior point probed.
MinResult golden_section_minimize(const std::function<double(double)>& f,
                                  double lo, double hi, double x_tol);

// Solves F(x) = y for nondecreasing F on [lo, hi]; bisects down to adjacent
// doubles. Requires F(lo) <= y <= F(hi) up to value_slack.
double inverse_monotone(const std::function<double(double)>& F, double y,
                        double lo, double hi, double value_slack = 1e-9);

// Root of f on [lo, hi] given a sign change; bisects to width x_tol.
double bisect_root(const std::function<double(double)>& f,
                   double lo, double hi, double x_tol);

}  // namespace setrec
