#include "setrec/knots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "setrec/detail/rng.hpp"
#include "setrec/quadrature.hpp"

namespace setrec {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Monotone prefix integral of a nonnegative integrand over [0,1] on a fixed
// panel decomposition: uniform cells, a geometric refinement toward zero, and
// the integrand's kinks. Evaluation and inversion share one code path, so the
// round trip inverse(eval(x)) reproduces x to the ulp level.
class PrefixIntegral {
public:
    PrefixIntegral(std::function<double(double)> f, const std::vector<double>& kinks)
        : f_(std::move(f)) {
        grid_.push_back(0.0);
        for (int k = 52; k >= 11; --k) grid_.push_back(std::pow(0.5, k));
        for (int j = 1; j <= 1024; ++j) grid_.push_back(static_cast<double>(j) / 1024.0);
        for (double t : kinks)
            if (t > 0.0 && t < 1.0) grid_.push_back(t);
        std::sort(grid_.begin(), grid_.end());
        grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
        prefix_.resize(grid_.size());
        prefix_[0] = 0.0;
        for (std::size_t j = 1; j < grid_.size(); ++j)
            prefix_[j] = prefix_[j - 1] + gauss_kronrod_panel(f_, grid_[j - 1], grid_[j]);
    }

    double total() const { return prefix_.back(); }

    double eval(double x) const {
        if (!(x >= 0.0 && x <= 1.0))
            throw std::domain_error("accumulated modulus: argument outside [0,1]");
        const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
        const std::size_t j = static_cast<std::size_t>(it - grid_.begin()) - 1;
        if (x == grid_[j]) return prefix_[j];
        return prefix_[j] + gauss_kronrod_panel(f_, grid_[j], x);
    }

    // Monotone inverse on [0,1]; bisects to adjacent doubles inside one cell.
    double inverse(double y) const {
        if (y <= 0.0) return 0.0;
        if (y >= total()) return 1.0;
        const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), y);
        const std::size_t j = static_cast<std::size_t>(it - prefix_.begin()) - 1;
        double lo = grid_[j], hi = grid_[j + 1];
        int guard = 0;
        while (++guard < 90) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double fm = prefix_[j] + gauss_kronrod_panel(f_, grid_[j], mid);
            if (fm < y) lo = mid; else hi = mid;
        }
        return 0.5 * (lo + hi);
    }

private:
    std::function<double(double)> f_;
    std::vector<double> grid_;
    std::vector<double> prefix_;
};

std::vector<double> halved_argument_kinks(const Modulus& omega) {
    std::vector<double> ks;
    for (double k : omega.kinks()) {
        const double t = 2.0 * k;
        if (t < 1.0) ks.push_back(t);
    }
    return ks;
}

PrefixIntegral accumulated_modulus(const Modulus& omega) {
    return PrefixIntegral([&omega](double t) { return omega(0.5 * t); },
                          halved_argument_kinks(omega));
}

// --- closed-form cell costs for the knot optimizer ---

// integral over [u1,u2] of c * u^alpha * sum_k q[k] u^k.
double power_moment(double c, double alpha, const std::vector<double>& q,
                    double u1, double u2) {
    double total = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0.0) continue;
        const double e = alpha + static_cast<double>(k) + 1.0;
        total += q[k] / e * (std::pow(u2, e) - std::pow(u1, e));
    }
    return c * total;
}

// Coefficients of P(x0 + s*u) in powers of u, taken from the polynomial piece
// of P containing the probe point.
std::vector<double> shifted_piece(const Weight& P, double x0, double s, double probe) {
    const std::vector<double> cx =
        P.piece_coefficients(std::min(1.0, std::max(0.0, probe)));
    std::vector<double> q{0.0};
    for (std::size_t j = cx.size(); j-- > 0;) {
        std::vector<double> next(q.size() + 1, 0.0);
        for (std::size_t k = 0; k < q.size(); ++k) {
            next[k] += q[k] * x0;
            next[k + 1] += q[k] * s;
        }
        next[0] += cx[j];
        q = std::move(next);
    }
    while (q.size() > 1 && q.back() == 0.0) q.pop_back();
    return q;
}

// integral over [0,w] of P(x0 + s*u) * omega(u) du, exact per polynomial
// piece (power moduli give power moments, the others are piecewise linear).
double side_cost(const Weight& P, const Modulus& omega, double x0, double s, double w) {
    if (w <= 0.0) return 0.0;
    std::vector<double> cuts;
    for (double k : omega.kinks())
        if (k < w) cuts.push_back(k);
    for (double t : P.kinks()) {
        const double u = s > 0.0 ? t - x0 : x0 - t;
        if (u > 0.0 && u < w) cuts.push_back(u);
    }
    cuts.push_back(w);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const bool power = omega.kind() == Modulus::Kind::Power;
    double total = 0.0;
    double u1 = 0.0;
    for (double u2 : cuts) {
        const double um = 0.5 * (u1 + u2);
        const std::vector<double> q = shifted_piece(P, x0, s, x0 + s * um);
        if (power) {
            total += power_moment(omega.power_c(), omega.power_alpha(), q, u1, u2);
        } else {
            const auto piece = omega.linear_piece(um);
            std::vector<double> r(q.size() + 1, 0.0);
            for (std::size_t k = 0; k < q.size(); ++k) {
                r[k] += piece.first * q[k];
                r[k + 1] += piece.second * q[k];
            }
            total += power_moment(1.0, 0.0, r, u1, u2);
        }
        u1 = u2;
    }
    return total;
}

double cell_cost(const Weight& P, const Modulus& omega, double xi, double a, double b) {
    return side_cost(P, omega, xi, -1.0, xi - a) + side_cost(P, omega, xi, 1.0, b - xi);
}

double full_objective(const Weight& P, const Modulus& omega, const std::vector<double>& x) {
    const std::size_t n = x.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = (i > 0) ? 0.5 * (x[i - 1] + x[i]) : 0.0;
        const double hi = (i + 1 < n) ? 0.5 * (x[i] + x[i + 1]) : 1.0;
        total += cell_cost(P, omega, x[i], lo, hi);
    }
    return total;
}

// Objective restricted to the cells whose boundaries move with knot i: the
// knot's own cell plus the facing halves of both neighbour cells.
double window_cost(const Weight& P, const Modulus& omega, const std::vector<double>& x,
                   std::size_t i, double c) {
    const std::size_t n = x.size();
    const double left_fixed = (i >= 2) ? 0.5 * (x[i - 2] + x[i - 1]) : 0.0;
    const double right_fixed = (i + 2 < n) ? 0.5 * (x[i + 1] + x[i + 2]) : 1.0;
    const double lo = (i > 0) ? 0.5 * (x[i - 1] + c) : 0.0;
    const double hi = (i + 1 < n) ? 0.5 * (c + x[i + 1]) : 1.0;
    double v = cell_cost(P, omega, c, lo, hi);
    if (i > 0) v += cell_cost(P, omega, x[i - 1], left_fixed, lo);
    if (i + 1 < n) v += cell_cost(P, omega, x[i + 1], hi, right_fixed);
    return v;
}

struct DescentResult {
    std::vector<double> x;
    double total = 0.0;
    std::size_t sweeps = 0;
};

// Cyclic coordinate descent; a knot only moves on a strict improvement of its
// window, so an already optimal configuration is returned unchanged.
DescentResult descend(const Weight& P, const Modulus& omega, std::vector<double> x,
                      const OptimizeOptions& opts) {
    const std::size_t n = x.size();
    double total = full_objective(P, omega, x);
    std::size_t sweeps = 0;
    while (sweeps < opts.max_sweeps) {
        ++sweeps;
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            const double lo_b = (i > 0) ? x[i - 1] : 0.0;
            const double hi_b = (i + 1 < n) ? x[i + 1] : 1.0;
            const double margin = 1e-12 + 1e-9 * (hi_b - lo_b);
            if (hi_b - lo_b <= 4.0 * margin) continue;
            const double cur = window_cost(P, omega, x, i, x[i]);
            const MinResult best = golden_section_minimize(
                [&](double c) { return window_cost(P, omega, x, i, c); },
                lo_b + margin, hi_b - margin, 1e-9);
            if (best.value < cur - 1e-13 * std::max(1.0, cur) && best.x != x[i]) {
                x[i] = best.x;
                moved = true;
            }
        }
        const double next_total = full_objective(P, omega, x);
        const bool done = !moved || (total - next_total) < opts.objective_tol;
        total = next_total;
        if (done) break;
    }
    return {std::move(x), total, sweeps};
}

std::vector<double> midpoint_positions(std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(n));
    return x;
}

// Quantiles of P^{1/(1+alpha)}; false when the mass degenerates.
bool quantile_positions(const Weight& P, double alpha, std::size_t n,
                        std::vector<double>& out) {
    const double p = 1.0 / (1.0 + alpha);
    const PrefixIntegral mass(
        [&P, p](double x) { return std::pow(std::max(0.0, P(x)), p); }, P.kinks());
    const double tot = mass.total();
    if (!(tot > 0.0)) return false;
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double target =
            (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(n)) * tot;
        out[i] = mass.inverse(target);
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(out[i + 1] - out[i] > 1e-9)) return false;
    return out.front() > 1e-12 && out.back() < 1.0 - 1e-12;
}

// Midpoints with a seeded perturbation of at most a quarter gap, which keeps
// the order strict by construction.
std::vector<double> jitter_positions(std::size_t n, std::uint64_t seed) {
    detail::SplitMix64 rng(seed);
    std::vector<double> x = midpoint_positions(n);
    for (double& xi : x)
        xi += (2.0 * rng.uniform01() - 1.0) * 0.25 / static_cast<double>(n);
    return x;
}

}  // namespace

KnotSet midpoint_knots(std::size_t n) {
    if (n == 0) throw std::invalid_argument("midpoint_knots: n must be positive");
    return KnotSet(midpoint_positions(n));
}

double uniform_optimal_error(const Modulus& omega, std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_optimal_error: n must be positive");
    const double half_cell = 1.0 / (2.0 * static_cast<double>(n));
    const double mass = integrate_from_zero([&omega](double t) { return omega(t); },
                                            half_cell, omega.kinks());
    return 2.0 * static_cast<double>(n) * mass;
}

double omega_big(const Modulus& omega, double x) {
    if (!(x >= 0.0 && x <= 1.0 + 1e-12))
        throw std::domain_error("omega_big: argument outside [0,1]");
    return accumulated_modulus(omega).eval(std::min(x, 1.0));
}

double omega_big_inv(const Modulus& omega, double y) {
    const PrefixIntegral acc = accumulated_modulus(omega);
    const double total = acc.total();
    if (!(y >= -1e-12 * (1.0 + total) && y <= total * (1.0 + 1e-12) + 1e-300))
        throw std::domain_error("omega_big_inv: target outside [0, omega_big(1)]");
    return acc.inverse(std::min(std::max(y, 0.0), total));
}

AsymptoticReport asymptotic_constant(const Weight& P, const Modulus& omega,
                                     const std::vector<std::size_t>& n_list,
                                     bool with_ratios) {
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] == 0)
            throw std::invalid_argument("asymptotic_constant: n must be positive");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("asymptotic_constant: n_list must be strictly increasing");
    }
    if (!P.positive_almost_everywhere())
        throw std::invalid_argument(
            "asymptotic_constant: the weight must be positive almost everywhere");

    AsymptoticReport report;
    report.ns = n_list;
    if (n_list.empty()) return report;

    const PrefixIntegral acc = accumulated_modulus(omega);
    const double total = acc.total();
    for (std::size_t n : n_list) {
        const double y_base = acc.eval(1.0 / static_cast<double>(n));
        KahanSum sum;
        bool ok = true;
        double prev_y = kNan, prev_term = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const double tk = (2.0 * static_cast<double>(k) - 1.0) /
                              (2.0 * static_cast<double>(n));
            const double y = P(tk) * y_base;
            if (!(y <= total * (1.0 + 1e-12) + 1e-300)) {
                report.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k));
                ok = false;
                continue;
            }
            double term;
            if (y == prev_y) {
                term = prev_term;
            } else {
                term = acc.inverse(std::min(y, total));
                prev_y = y;
                prev_term = term;
            }
            sum.add(term);
        }
        const double b = ok ? sum.s : kNan;
        report.b_values.push_back(b);
        report.n_omega_b.push_back(
            std::isnan(b) ? kNan
                          : static_cast<double>(n) *
                                acc.eval(std::min(1.0, b / static_cast<double>(n))));
    }
    report.extrapolated_b = report.b_values.back();

    if (with_ratios) {
        for (std::size_t i = 0; i < n_list.size(); ++i) {
            const std::size_t n = n_list[i];
            const double denom = report.n_omega_b[i];
            const double optimal = P.is_constant_one()
                                       ? uniform_optimal_error(omega, n)
                                       : optimize_knots(P, omega, n).error;
            report.ratio_ns.push_back(n);
            report.ratios.push_back(denom > 0.0 ? optimal / denom : kNan);
        }
    }
    return report;
}

double power_weight_error_estimate(double alpha, const Weight& P, std::size_t n) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("power_weight_error_estimate: alpha must lie in (0,1]");
    if (n == 0) throw std::invalid_argument("power_weight_error_estimate: n must be positive");
    const double p = 1.0 / (1.0 + alpha);
    const double q = integrate_with_breakpoints(
        [&P, p](double x) { return std::pow(std::max(0.0, P(x)), p); }, 0.0, 1.0,
        P.kinks(), 1e-12);
    return std::pow(2.0 * static_cast<double>(n), -alpha) / (1.0 + alpha) *
           std::pow(q, 1.0 + alpha);
}

OptimizedKnots optimize_knots(const Weight& P, const Modulus& omega, std::size_t n,
                              const OptimizeOptions& opts) {
    if (n == 0) throw std::invalid_argument("optimize_knots: n must be positive");
    if (opts.max_sweeps == 0)
        throw std::invalid_argument("optimize_knots: max_sweeps must be positive");
    if (!(opts.objective_tol > 0.0))
        throw std::invalid_argument("optimize_knots: objective_tol must be positive");

    struct Candidate {
        DescentResult result;
        const char* name;
    };
    std::vector<Candidate> candidates;
    candidates.push_back({descend(P, omega, midpoint_positions(n), opts), "midpoints"});
    if (opts.quantile_start && omega.kind() == Modulus::Kind::Power &&
        !P.is_constant_one()) {
        std::vector<double> q;
        if (quantile_positions(P, omega.power_alpha(), n, q))
            candidates.push_back({descend(P, omega, std::move(q), opts), "quantiles"});
    }
    if (opts.jitter_start)
        candidates.push_back(
            {descend(P, omega, jitter_positions(n, opts.seed), opts), "jitter"});

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const DescentResult& a = candidates[i].result;
        const DescentResult& b = candidates[best].result;
        if (a.total < b.total || (a.total == b.total && a.x < b.x)) best = i;
    }
    OptimizedKnots out{KnotSet(candidates[best].result.x), 0.0,
                       candidates[best].result.sweeps, candidates[best].name};
    out.error = worst_case_error(omega, P, out.knots);
    return out;
}

ScalingProbe scaling_monotonicity_probe(const Modulus& omega, double c,
                                        std::size_t samples) {
    if (!(c > 0.0))
        throw std::invalid_argument("scaling_monotonicity_probe: c must be positive");
    if (samples < 2)
        throw std::invalid_argument("scaling_monotonicity_probe: need at least 2 samples");

    const PrefixIntegral acc = accumulated_modulus(omega);
    const double total = acc.total();
    ScalingProbe probe;
    for (std::size_t s = 0; s < samples; ++s) {
        const double x = std::pow(0.5, static_cast<double>(4 + s));
        const double y = c * acc.eval(x);
        if (!(y <= total * (1.0 + 1e-12)))
            throw std::domain_error(
                "scaling_monotonicity_probe: c * omega_big(x) exceeds omega_big(1)");
        probe.xs.push_back(x);
        probe.ratios.push_back(acc.inverse(std::min(y, total)) / x);
    }

    // Classify monotonicity in x; the samples are stored with x descending.
    double scale = 0.0;
    for (double r : probe.ratios) scale = std::max(scale, std::fabs(r));
    const double tol = 1e-9 * std::max(1e-300, scale);
    bool any_up = false, any_down = false;
    for (std::size_t s = 0; s + 1 < probe.ratios.size(); ++s) {
        const double diff_in_x = probe.ratios[s] - probe.ratios[s + 1];
        if (diff_in_x > tol) any_up = true;
        if (diff_in_x < -tol) any_down = true;
    }
    if (any_up && any_down) probe.classification = MonotoneClass::Mixed;
    else if (any_up) probe.classification = MonotoneClass::Increasing;
    else if (any_down) probe.classification = MonotoneClass::Decreasing;
    else probe.classification = MonotoneClass::Constant;
    return probe;
}

}  // namespace setrec
