#include "setrec/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "setrec/detail/rng.hpp"

namespace setrec {

namespace {

constexpr double kDomainSlack = 1e-12;

double check_unit_domain(double t, const char* who) {
    if (t < -kDomainSlack || t > 1.0 + kDomainSlack)
        throw std::domain_error(std::string(who) + ": argument outside [0,1]");
    return std::clamp(t, 0.0, 1.0);
}

}  // namespace

Modulus Modulus::power(double c, double alpha) {
    if (!(c > 0.0)) throw std::invalid_argument("Modulus::power: c must be positive");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("Modulus::power: alpha must lie in (0,1]");
    Modulus m;
    m.kind_ = Kind::Power;
    m.c_ = c;
    m.alpha_ = alpha;
    return m;
}

Modulus Modulus::capped_linear(double L, double C) {
    if (!(L > 0.0) || !(C > 0.0))
        throw std::invalid_argument("Modulus::capped_linear: L and C must be positive");
    Modulus m;
    m.kind_ = Kind::CappedLinear;
    m.L_ = L;
    m.cap_ = C;
    return m;
}

Modulus Modulus::tabulated(std::vector<double> ts, std::vector<double> values) {
    if (ts.size() != values.size() || ts.size() < 2)
        throw std::invalid_argument("Modulus::tabulated: needs matching samples, at least two");
    if (ts.front() != 0.0 || values.front() != 0.0)
        throw std::invalid_argument("Modulus::tabulated: must start at (0,0)");
    if (ts.back() != 1.0)
        throw std::invalid_argument("Modulus::tabulated: abscissae must end at 1");
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (!(ts[i] > ts[i - 1]))
            throw std::invalid_argument("Modulus::tabulated: abscissae must increase");
        if (values[i] < values[i - 1] - 1e-15)
            throw std::invalid_argument("Modulus::tabulated: values must be nondecreasing");
    }
    // Concavity of the piecewise-linear interpolant: slopes nonincreasing.
    double prev_slope = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double slope = (values[i] - values[i - 1]) / (ts[i] - ts[i - 1]);
        if (slope > prev_slope + 1e-10)
            throw std::invalid_argument("Modulus::tabulated: samples are not concave");
        prev_slope = slope;
    }
    Modulus m;
    m.kind_ = Kind::Tabulated;
    m.ts_ = std::move(ts);
    m.vs_ = std::move(values);
    return m;
}

double Modulus::operator()(double t) const {
    t = check_unit_domain(t, "Modulus");
    switch (kind_) {
        case Kind::Power:
            return t == 0.0 ? 0.0 : c_ * std::pow(t, alpha_);
        case Kind::CappedLinear:
            return std::min(L_ * t, cap_);
        case Kind::Tabulated: {
            const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
            if (it == ts_.begin()) return vs_.front();
            if (it == ts_.end()) return vs_.back();
            const std::size_t i = static_cast<std::size_t>(it - ts_.begin());
            const double w = (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
            return vs_[i - 1] + w * (vs_[i] - vs_[i - 1]);
        }
    }
    return 0.0;
}

bool Modulus::strictly_increasing() const {
    switch (kind_) {
        case Kind::Power:
            return true;
        case Kind::CappedLinear:
            return cap_ >= L_;  // the cap never binds inside [0,1]
        case Kind::Tabulated:
            for (std::size_t i = 1; i < vs_.size(); ++i)
                if (!(vs_[i] > vs_[i - 1])) return false;
            return true;
    }
    return false;
}

std::vector<double> Modulus::kinks() const {
    switch (kind_) {
        case Kind::Power:
            return {};
        case Kind::CappedLinear: {
            const double knee = cap_ / L_;
            if (knee > 0.0 && knee < 1.0) return {knee};
            return {};
        }
        case Kind::Tabulated: {
            std::vector<double> ks;
            for (std::size_t i = 1; i + 1 < ts_.size(); ++i) ks.push_back(ts_[i]);
            return ks;
        }
    }
    return {};
}

std::pair<double, double> Modulus::linear_piece(double t) const {
    t = check_unit_domain(t, "Modulus");
    switch (kind_) {
        case Kind::Power:
            throw std::invalid_argument("linear_piece: power moduli are not piecewise linear");
        case Kind::CappedLinear:
            if (t < cap_ / L_) return {0.0, L_};
            return {cap_, 0.0};
        case Kind::Tabulated: {
            auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
            if (it == ts_.begin()) ++it;
            if (it == ts_.end()) --it;
            const std::size_t i = static_cast<std::size_t>(it - ts_.begin());
            const double slope = (vs_[i] - vs_[i - 1]) / (ts_[i] - ts_[i - 1]);
            return {vs_[i - 1] - slope * ts_[i - 1], slope};
        }
    }
    return {0.0, 0.0};
}

double omega_eval(const Modulus& omega, double t) { return omega(t); }

Weight Weight::constant_one() { return Weight(); }

Weight Weight::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("Weight::polynomial: empty coefficients");
    Weight w;
    w.kind_ = Kind::Polynomial;
    w.coeffs_ = std::move(coeffs);
    for (int i = 0; i <= 10000; ++i) {
        const double x = static_cast<double>(i) / 10000.0;
        if (w(x) < -1e-12)
            throw std::invalid_argument("Weight::polynomial: negative on [0,1]");
    }
    return w;
}

Weight Weight::tabulated(std::vector<double> xs, std::vector<double> values) {
    if (xs.size() != values.size() || xs.size() < 2)
        throw std::invalid_argument("Weight::tabulated: needs matching samples, at least two");
    if (xs.front() != 0.0 || xs.back() != 1.0)
        throw std::invalid_argument("Weight::tabulated: abscissae must span [0,1]");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("Weight::tabulated: abscissae must increase");
    }
    for (double v : values) {
        if (!(v >= 0.0)) throw std::invalid_argument("Weight::tabulated: negative sample");
    }
    Weight w;
    w.kind_ = Kind::Tabulated;
    w.xs_ = std::move(xs);
    w.vs_ = std::move(values);
    return w;
}

double Weight::operator()(double x) const {
    x = check_unit_domain(x, "Weight");
    switch (kind_) {
        case Kind::ConstantOne:
            return 1.0;
        case Kind::Polynomial: {
            double v = 0.0;
            for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
            return v;
        }
        case Kind::Tabulated: {
            const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
            if (it == xs_.begin()) return vs_.front();
            if (it == xs_.end()) return vs_.back();
            const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
            const double w = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
            return vs_[i - 1] + w * (vs_[i] - vs_[i - 1]);
        }
    }
    return 0.0;
}

bool Weight::positive_almost_everywhere() const {
    std::size_t zeros = 0;
    for (int i = 0; i <= 10000; ++i) {
        const double v = (*this)(static_cast<double>(i) / 10000.0);
        if (v < 0.0) return false;
        if (v == 0.0) ++zeros;
    }
    return zeros <= 100;
}

std::vector<double> Weight::kinks() const {
    if (kind_ != Kind::Tabulated) return {};
    std::vector<double> ks;
    for (std::size_t i = 1; i + 1 < xs_.size(); ++i) ks.push_back(xs_[i]);
    return ks;
}

std::vector<double> Weight::piece_coefficients(double x) const {
    x = check_unit_domain(x, "Weight");
    switch (kind_) {
        case Kind::ConstantOne:
            return {1.0};
        case Kind::Polynomial:
            return coeffs_;
        case Kind::Tabulated: {
            auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
            if (it == xs_.begin()) ++it;
            if (it == xs_.end()) --it;
            const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
            const double slope = (vs_[i] - vs_[i - 1]) / (xs_[i] - xs_[i - 1]);
            return {vs_[i - 1] - slope * xs_[i - 1], slope};
        }
    }
    return {0.0};
}

SetTrajectory SetTrajectory::constant(PointCloud a) {
    SetTrajectory f;
    f.kind_ = Kind::Constant;
    f.dim_ = a.dim();
    f.base_ = std::move(a);
    f.profile_ = [](double) { return 1.0; };
    f.rule_ = [cloud = f.base_](double) { return cloud; };
    return f;
}

SetTrajectory SetTrajectory::scalar_profile(std::function<double(double)> g, Vector a) {
    if (!g) throw std::invalid_argument("SetTrajectory::scalar_profile: missing profile");
    if (a.empty()) throw std::invalid_argument("SetTrajectory::scalar_profile: empty direction");
    if (norm(a) == 0.0)
        throw std::invalid_argument("SetTrajectory::scalar_profile: zero direction");
    SetTrajectory f;
    f.kind_ = Kind::ScalarProfile;
    f.dim_ = a.size();
    f.base_ = PointCloud::single(a);
    f.profile_ = std::move(g);
    f.rule_ = [g2 = f.profile_, a2 = std::move(a)](double t) {
        const double s = g2(t);
        if (!(s >= 0.0))
            throw std::invalid_argument(
                "SetTrajectory::scalar_profile: profile value must be nonnegative");
        Vector p(a2.size());
        for (std::size_t i = 0; i < a2.size(); ++i) p[i] = s * a2[i];
        return PointCloud::single(std::move(p));
    };
    return f;
}

SetTrajectory SetTrajectory::scaled_body(std::function<double(double)> g, PointCloud base) {
    if (!g) throw std::invalid_argument("SetTrajectory::scaled_body: missing profile");
    SetTrajectory f;
    f.kind_ = Kind::ScaledBody;
    f.dim_ = base.dim();
    f.base_ = std::move(base);
    f.profile_ = std::move(g);
    f.rule_ = [g2 = f.profile_, b = f.base_](double t) {
        const double s = g2(t);
        if (!(s >= 0.0))
            throw std::invalid_argument(
                "SetTrajectory::scaled_body: profile value must be nonnegative");
        return scale_cloud(s, b);
    };
    return f;
}

SetTrajectory SetTrajectory::user_sampled(std::vector<PointCloud> samples,
                                          const Modulus& omega, double tol) {
    if (samples.size() < 2)
        throw std::invalid_argument("SetTrajectory::user_sampled: needs at least two samples");
    const std::size_t m = samples[0].dim();
    for (const auto& s : samples) {
        if (s.dim() != m)
            throw std::invalid_argument("SetTrajectory::user_sampled: mixed dimensions");
    }
    const double step = 1.0 / static_cast<double>(samples.size() - 1);
    if (omega(step) > tol)
        throw std::invalid_argument(
            "SetTrajectory::user_sampled: sampling step too coarse for the requested tolerance");
    SetTrajectory f;
    f.kind_ = Kind::UserSampled;
    f.dim_ = m;
    f.rule_ = [samples = std::move(samples), step](double t) {
        const double idx = t / step;
        std::size_t i = static_cast<std::size_t>(idx + 0.5);
        if (i >= samples.size()) i = samples.size() - 1;
        return samples[i];
    };
    return f;
}

SetTrajectory SetTrajectory::custom(std::size_t dim, std::function<PointCloud(double)> rule) {
    if (dim == 0) throw std::invalid_argument("SetTrajectory::custom: bad dimension");
    if (!rule) throw std::invalid_argument("SetTrajectory::custom: missing rule");
    SetTrajectory f;
    f.kind_ = Kind::Custom;
    f.dim_ = dim;
    f.rule_ = std::move(rule);
    return f;
}

PointCloud SetTrajectory::operator()(double t) const {
    t = check_unit_domain(t, "SetTrajectory");
    PointCloud out = rule_(t);
    if (out.dim() != dim_)
        throw std::invalid_argument("SetTrajectory: evaluator returned a wrong dimension");
    return out;
}

double SetTrajectory::profile_value(double t) const {
    if (!profile_) throw std::logic_error("SetTrajectory: no scalar profile for this kind");
    const double s = profile_(check_unit_domain(t, "SetTrajectory"));
    if (!(s >= 0.0))
        throw std::invalid_argument("SetTrajectory: profile must be nonnegative");
    return s;
}

HolderReport holder_check(const SetTrajectory& f, const Modulus& omega, std::size_t pairs) {
    if (pairs == 0) throw std::invalid_argument("holder_check: needs at least one pair");
    HolderReport rep;
    auto consider = [&](double t1, double t2) {
        const double w = omega(std::fabs(t1 - t2));
        const double d = hausdorff(f(t1), f(t2));
        double ratio;
        if (w == 0.0) {
            if (d == 0.0) return;
            ratio = std::numeric_limits<double>::infinity();
        } else {
            ratio = d / w;
        }
        if (ratio > rep.worst_ratio) {
            rep.worst_ratio = ratio;
            rep.t1 = t1;
            rep.t2 = t2;
        }
    };

    // Fixed structural pairs first: full span, small separations, and
    // separations anchored at both endpoints. Separations below 1e-6 are
    // avoided: the distance carries absolute rounding of order eps * omega(1),
    // and subadditivity bounds omega(gap) below by omega(1) * gap / (1 + gap),
    // so the ratio would pick up noise past the 1e-9 acceptance threshold.
    consider(0.0, 1.0);
    consider(0.0, 1e-6);
    consider(1.0 - 1e-6, 1.0);
    consider(0.5, 0.5 + 2e-6);
    consider(0.0, 1e-5);
    consider(0.25, 0.75);

    detail::SplitMix64 rng(0x68e1dec0de5eedULL);
    for (std::size_t i = 6; i < pairs; ++i) {
        const double t1 = rng.uniform01();
        // Log-uniform separation between 1e-6 and 0.5, either side.
        const double gap = std::exp(std::log(1e-6) +
                                    rng.uniform01() * (std::log(0.5) - std::log(1e-6)));
        double t2 = rng.next() % 2 == 0 ? t1 + gap : t1 - gap;
        t2 = std::clamp(t2, 0.0, 1.0);
        consider(t1, t2);
    }
    rep.ok = rep.worst_ratio <= 1.0 + 1e-9;
    return rep;
}

}  // namespace setrec
