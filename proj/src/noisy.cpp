#include "setrec/noisy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "setrec/quadrature.hpp"

namespace setrec {

namespace {

constexpr std::size_t kScanCells = 16384;  // dense argmin scan resolution

// Sampled strictness gate on 1000 ordered pairs; a single tie rejects.
void require_strictly_increasing(const Modulus& omega) {
    double prev = omega(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double next = omega(static_cast<double>(i) / 1000.0);
        if (!(next > prev))
            throw std::invalid_argument(
                "noisy recovery requires a strictly increasing modulus of continuity");
        prev = next;
    }
}

}  // namespace

ErrorBudget::ErrorBudget(std::vector<double> eps) : epsilons(std::move(eps)) {
    if (epsilons.empty())
        throw std::invalid_argument("ErrorBudget: needs at least one entry");
    for (double e : epsilons) {
        if (!(e >= 0.0) || !std::isfinite(e))
            throw std::invalid_argument("ErrorBudget: entries must be finite and nonnegative");
    }
}

NoisyEnvelope::NoisyEnvelope(Modulus omega, KnotSet knots, ErrorBudget budget)
    : omega_(std::move(omega)), knots_(std::move(knots)), budget_(std::move(budget)) {
    if (budget_.size() != knots_.size())
        throw std::invalid_argument("NoisyEnvelope: one error bound per knot required");
    require_strictly_increasing(omega_);

    // Dense argmin scan; each index change is refined by bisecting the
    // difference of the two competing shifted moduli.
    std::vector<std::size_t> idx(kScanCells + 1);
    for (std::size_t j = 0; j <= kScanCells; ++j)
        idx[j] = argmin_index(static_cast<double>(j) / static_cast<double>(kScanCells));

    double run_start = 0.0;
    std::size_t run_index = idx[0];
    for (std::size_t j = 0; j < kScanCells; ++j) {
        if (idx[j + 1] == idx[j]) continue;
        const double lo = static_cast<double>(j) / static_cast<double>(kScanCells);
        const double hi = static_cast<double>(j + 1) / static_cast<double>(kScanCells);
        const std::size_t a = idx[j], b = idx[j + 1];
        const auto diff = [&](double x) {
            const double ga = budget_.epsilons[a] + omega_(std::min(1.0, std::fabs(x - knots_.knots[a])));
            const double gb = budget_.epsilons[b] + omega_(std::min(1.0, std::fabs(x - knots_.knots[b])));
            return ga - gb;
        };
        const double dlo = diff(lo), dhi = diff(hi);
        double t;
        if (dlo == 0.0) t = lo;
        else if (dhi == 0.0) t = hi;
        else if (dlo < 0.0 && dhi > 0.0) t = bisect_root(diff, lo, hi, 1e-12);
        else t = lo;
        t = std::clamp(t, run_start, hi);
        if (t > run_start) runs_.push_back({run_start, t, run_index});
        run_start = t;
        run_index = idx[j + 1];
    }
    if (1.0 > run_start || runs_.empty()) runs_.push_back({run_start, 1.0, run_index});

    std::vector<double> bps = {0.0, 1.0};
    for (const EnvelopeRun& r : runs_) {
        bps.push_back(r.lo);
        bps.push_back(r.hi);
    }
    for (double x : knots_.knots) bps.push_back(x);
    for (double k : omega_.kinks()) {
        for (double x : knots_.knots) {
            if (x + k < 1.0) bps.push_back(x + k);
            if (x - k > 0.0) bps.push_back(x - k);
        }
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    for (double b : bps)
        if (b >= 0.0 && b <= 1.0) breakpoints_.push_back(b);
}

std::size_t NoisyEnvelope::argmin_index(double x) const {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error("NoisyEnvelope: argument outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    std::size_t best = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < knots_.size(); ++k) {
        const double v =
            budget_.epsilons[k] + omega_(std::min(1.0, std::fabs(x - knots_.knots[k])));
        if (v < best_v) {
            best_v = v;
            best = k;
        }
    }
    return best;
}

double NoisyEnvelope::operator()(double x) const {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error("NoisyEnvelope: argument outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < knots_.size(); ++k)
        best = std::min(best, budget_.epsilons[k] +
                                  omega_(std::min(1.0, std::fabs(x - knots_.knots[k]))));
    return best;
}

NoisyEnvelope noisy_envelope(const Modulus& omega, const KnotSet& knots,
                             const ErrorBudget& budget) {
    return NoisyEnvelope(omega, knots, budget);
}

std::vector<std::size_t> ActiveDecomposition::active_indices() const {
    std::vector<std::size_t> out;
    out.reserve(cells.size());
    for (const ActiveCell& c : cells) out.push_back(c.index);
    return out;
}

ActiveDecomposition active_cells(const Modulus& omega, const KnotSet& knots,
                                 const ErrorBudget& budget, const Weight& P) {
    const NoisyEnvelope env(omega, knots, budget);
    std::map<std::size_t, std::vector<std::pair<double, double>>> grouped;
    std::size_t interval_count = 0;
    for (const EnvelopeRun& r : env.runs()) {
        if (!(r.hi > r.lo)) continue;
        grouped[r.index].push_back({r.lo, r.hi});
        ++interval_count;
    }

    ActiveDecomposition decomp;
    decomp.knot_count = knots.size();
    const std::vector<double> pk = P.kinks();
    const double piece_tol = 1e-10 / static_cast<double>(std::max<std::size_t>(1, interval_count));
    for (auto& [index, intervals] : grouped) {
        ActiveCell cell;
        cell.index = index;
        cell.intervals = std::move(intervals);
        for (const auto& [lo, hi] : cell.intervals) {
            if (P.is_constant_one())
                cell.weight += hi - lo;
            else
                cell.weight += integrate_with_breakpoints(
                    [&P](double x) { return P(x); }, lo, hi, pk, piece_tol);
        }
        decomp.cells.push_back(std::move(cell));
    }
    return decomp;
}

ConvexBody noisy_optimal_estimate(const std::vector<PointCloud>& samples,
                                  const ActiveDecomposition& decomp,
                                  const GridPtr& grid) {
    if (!grid) throw std::invalid_argument("noisy_optimal_estimate: missing grid");
    if (samples.size() != decomp.knot_count)
        throw std::invalid_argument("noisy_optimal_estimate: one sample per knot required");
    for (const PointCloud& s : samples) {
        if (s.dim() != grid->dim())
            throw std::invalid_argument("noisy_optimal_estimate: sample dimension mismatch");
    }
    std::vector<double> h(grid->size(), 0.0);
    for (const ActiveCell& cell : decomp.cells) {
        const ConvexBody b = embed(samples.at(cell.index), grid);
        for (std::size_t j = 0; j < h.size(); ++j) h[j] += cell.weight * b.value(j);
    }
    return ConvexBody(grid, std::move(h));
}

double noisy_error_value(const Modulus& omega, const KnotSet& knots,
                         const ErrorBudget& budget, const Weight& P) {
    const NoisyEnvelope env(omega, knots, budget);
    std::vector<double> cuts = env.breakpoints();
    for (double k : P.kinks()) cuts.push_back(k);
    return integrate_with_breakpoints(
        [&](double x) { return P(x) * env(x); }, 0.0, 1.0, cuts, 1e-10);
}

double noisy_sharpness_gap(const Modulus& omega, const KnotSet& knots,
                           const ErrorBudget& budget, const Weight& P,
                           const Vector& a, const GridPtr& grid,
                           double integrate_tol) {
    if (!grid) throw std::invalid_argument("noisy_sharpness_gap: missing grid");
    if (a.size() != grid->dim())
        throw std::invalid_argument("noisy_sharpness_gap: direction dimension mismatch");
    if (std::fabs(norm(a) - 1.0) > 1e-12)
        throw std::invalid_argument("noisy_sharpness_gap: direction must be a unit vector");

    const NoisyEnvelope env(omega, knots, budget);
    const SetTrajectory f =
        SetTrajectory::scalar_profile([env](double t) { return env(t); }, a);
    const IntegralResult lhs = integrate(f, P, integrate_tol, grid);
    const ActiveDecomposition decomp = active_cells(omega, knots, budget, P);
    const std::vector<PointCloud> zeros(knots.size(), PointCloud::origin(grid->dim()));
    const ConvexBody estimate = noisy_optimal_estimate(zeros, decomp, grid);
    const double method_error = body_hausdorff(lhs.body, estimate);
    return std::fabs(method_error - noisy_error_value(omega, knots, budget, P));
}

}  // namespace setrec
