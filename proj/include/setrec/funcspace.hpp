#pragma once

// Moduli of continuity, integration weights, and set-valued trajectories on
// [0,1], plus a sampled membership check for the class H^omega.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "setrec/geometry.hpp"

namespace setrec {

// Modulus of continuity on [0,1]: omega(0) = 0, nondecreasing, subadditive.
class Modulus {
public:
    enum class Kind { Power, CappedLinear, Tabulated };

    // c * t^alpha with c > 0 and 0 < alpha <= 1.
    static Modulus power(double c, double alpha);
    // min(L*t, C) with L, C > 0.
    static Modulus capped_linear(double L, double C);
    // Linear interpolation of concave nondecreasing samples on [0,1] with
    // value 0 at 0; abscissae must start at 0 and end at 1.
    static Modulus tabulated(std::vector<double> ts, std::vector<double> values);

    double operator()(double t) const;
    Kind kind() const { return kind_; }
    // True when omega is strictly increasing on all of [0,1].
    bool strictly_increasing() const;
    // Interior points of (0,1) where the graph may have a kink; integrands
    // built from omega split there before adapting.
    std::vector<double> kinks() const;

    double power_c() const { return c_; }
    double power_alpha() const { return alpha_; }

    // (intercept, slope) of the linear piece containing t, valid between the
    // surrounding kinks; capped-linear and tabulated kinds only.
    std::pair<double, double> linear_piece(double t) const;

private:
    Modulus() = default;
    Kind kind_ = Kind::Power;
    double c_ = 1.0, alpha_ = 1.0;   // power
    double L_ = 1.0, cap_ = 1.0;     // capped linear
    std::vector<double> ts_, vs_;    // tabulated
};

// Evaluates omega at t, rejecting arguments outside [0,1].
double omega_eval(const Modulus& omega, double t);

// Nonnegative integration weight on [0,1].
class Weight {
public:
    enum class Kind { ConstantOne, Polynomial, Tabulated };

    static Weight constant_one();
    // coeffs[k] multiplies x^k.
    static Weight polynomial(std::vector<double> coeffs);
    static Weight tabulated(std::vector<double> xs, std::vector<double> values);

    double operator()(double x) const;
    Kind kind() const { return kind_; }
    bool is_constant_one() const { return kind_ == Kind::ConstantOne; }
    // Nonnegative on a 10^4 grid and zero on at most 1% of it.
    bool positive_almost_everywhere() const;
    // Interior non-smooth points (tabulated sample abscissae).
    std::vector<double> kinks() const;

    // Coefficients (in powers of x) of the polynomial piece containing x,
    // valid between the surrounding kinks; enables closed-form moments.
    std::vector<double> piece_coefficients(double x) const;

private:
    Weight() = default;
    Kind kind_ = Kind::ConstantOne;
    std::vector<double> coeffs_;
    std::vector<double> xs_, vs_;
};

// Set-valued map [0,1] -> K(R^m), given by an evaluator rule. The named
// factories cover the declarable kinds; custom wraps an arbitrary rule.
class SetTrajectory {
public:
    enum class Kind { Constant, ScalarProfile, ScaledBody, UserSampled, Custom };

    static SetTrajectory constant(PointCloud a);
    // t -> g(t) * {a} with g >= 0.
    static SetTrajectory scalar_profile(std::function<double(double)> g, Vector a);
    // t -> g(t) * A with g >= 0 and a fixed cloud A.
    static SetTrajectory scaled_body(std::function<double(double)> g, PointCloud base);
    // Nearest-sample evaluation of a uniform grid of clouds; the grid step
    // must satisfy omega(step) <= tol.
    static SetTrajectory user_sampled(std::vector<PointCloud> samples,
                                      const Modulus& omega, double tol);
    static SetTrajectory custom(std::size_t dim, std::function<PointCloud(double)> rule);

    PointCloud operator()(double t) const;
    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    // Profile access for the factored integration paths.
    double profile_value(double t) const;
    const PointCloud& base_cloud() const { return base_; }

private:
    SetTrajectory() : base_(PointCloud::origin(1)) {}
    Kind kind_ = Kind::Custom;
    std::size_t dim_ = 0;
    std::function<PointCloud(double)> rule_;
    std::function<double(double)> profile_;
    PointCloud base_;
};

struct HolderReport {
    bool ok = true;
    double worst_ratio = 0.0;
    double t1 = 0.0, t2 = 0.0;  // witness pair for the worst ratio
};

// Sampled membership check for H^omega: delta(f(t'), f(t'')) <=
// omega(|t'-t''|) on `pairs` seeded pairs (ratio slack 1e-9). A positive
// distance where omega vanishes fails the check outright.
HolderReport holder_check(const SetTrajectory& f, const Modulus& omega,
                          std::size_t pairs = 4096);

}  // namespace setrec
