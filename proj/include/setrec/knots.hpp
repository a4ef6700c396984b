#pragma once

// Knot placement: closed-form midpoint optima for constant weight, the
// asymptotic constant and error scale for general weights, and a direct
// coordinate-descent knot optimizer.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "setrec/funcspace.hpp"
#include "setrec/recovery.hpp"

namespace setrec {

// {(2i-1)/(2n) : i = 1..n}; the optimal knots for constant weight.
KnotSet midpoint_knots(std::size_t n);

// 2n * integral of omega over [0, 1/(2n)]; equals
// worst_case_error(omega, constant_one, midpoint_knots(n)).
double uniform_optimal_error(const Modulus& omega, std::size_t n);

// Omega(x) = integral of omega(t/2) over [0, x].
double omega_big(const Modulus& omega, double x);

// Inverse of Omega on [0,1]; requires 0 <= y <= Omega(1).
double omega_big_inv(const Modulus& omega, double y);

struct AsymptoticReport {
    std::vector<std::size_t> ns;
    std::vector<double> b_values;       // B_n per n
    std::vector<double> n_omega_b;      // n * Omega(B_n / n) per n
    double extrapolated_b = 0.0;        // last raw B_n, no extrapolation
    // Optimal-to-asymptotic error ratios, filled only when requested.
    std::vector<std::size_t> ratio_ns;
    std::vector<double> ratios;
    // Per-term domain failures (inverse argument past Omega(1)), as
    // "n=<n> k=<k>" notes; the affected B_n is NaN.
    std::vector<std::string> notes;
};

// B_n = sum over k of Omega^{-1}(P((2k-1)/(2n)) * Omega(1/n)). Raw values
// per n; with_ratios also runs the knot optimizer per n and reports
// optimal_error / (n * Omega(B_n / n)).
AsymptoticReport asymptotic_constant(const Weight& P, const Modulus& omega,
                                     const std::vector<std::size_t>& n_list,
                                     bool with_ratios = false);

// First-order optimal error for omega(t) = t^alpha:
// (2n)^{-alpha}/(alpha+1) * (integral of P^{1/(1+alpha)})^{alpha+1}.
double power_weight_error_estimate(double alpha, const Weight& P, std::size_t n);

struct OptimizeOptions {
    std::size_t max_sweeps = 200;
    double objective_tol = 1e-10;
    std::uint64_t seed = 42;
    bool quantile_start = true;  // P^{1/(1+alpha)} quantiles (power moduli)
    bool jitter_start = true;    // seeded perturbation of the midpoints
};

struct OptimizedKnots {
    KnotSet knots;
    double error = 0.0;
    std::size_t sweeps = 0;
    std::string start;  // which start produced the best result
};

// Coordinate descent with golden-section line search per knot (neighbours as
// brackets), multi-start, deterministic tie-break by (error, knot order).
OptimizedKnots optimize_knots(const Weight& P, const Modulus& omega, std::size_t n,
                              const OptimizeOptions& opts = {});

enum class MonotoneClass { Increasing, Decreasing, Constant, Mixed };

struct ScalingProbe {
    MonotoneClass classification = MonotoneClass::Constant;
    std::vector<double> xs;
    std::vector<double> ratios;  // Omega^{-1}(c * Omega(x)) / x
};

// Samples x -> Omega^{-1}(c * Omega(x)) / x on the geometric grid x = 2^-j,
// j = 4 .. 3+samples, and classifies its monotonicity in x.
ScalingProbe scaling_monotonicity_probe(const Modulus& omega, double c,
                                        std::size_t samples = 17);

}  // namespace setrec
