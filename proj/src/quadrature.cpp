#include "setrec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace setrec {

namespace {

// 15-point Kronrod nodes on [0,1] (positive half, descending) and weights,
// with the embedded 7-point Gauss weights.
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::fabs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        const double sum = fv[i] + fv[14 - i];
        resk += kWgk[i] * sum;
        resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
        if (i % 2 == 1) resg += kWg[i / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
    resasc *= std::fabs(h);

    double err = std::fabs(resk - resg) * std::fabs(h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps_floor = 50.0 * 2.2204460492503131e-16 * resabs * std::fabs(h);
    err = std::max(err, eps_floor);
    return Panel{a, b, resk * h, err};
}

}  // namespace

QuadResult adaptive_integrate(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              std::size_t max_panels) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("adaptive_integrate: tolerance must be positive");
    if (a == b) return {0.0, 0.0, true};
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    std::size_t panels = 1;
    const double min_width = std::fabs(b - a) * 1e-15;
    while (total_err > abs_tol && panels < max_panels) {
        Panel worst = heap.top();
        if (std::fabs(worst.b - worst.a) <= min_width) break;
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return {total, total_err, total_err <= abs_tol};
}

double integrate_with_breakpoints(const std::function<double(double)>& f,
                                  double a, double b,
                                  const std::vector<double>& breakpoints,
                                  double abs_tol) {
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double t : breakpoints) {
        if (t > a && t < b) cuts.push_back(t);
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const std::size_t pieces = cuts.size() - 1;
    const double piece_tol = abs_tol / static_cast<double>(pieces);
    double total = 0.0;
    double err = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        QuadResult r = adaptive_integrate(f, cuts[i], cuts[i + 1], piece_tol);
        total += r.value;
        err += r.error;
        ok = ok && r.converged;
    }
    if (!ok && err > abs_tol)
        throw NonconvergenceError("quadrature did not reach the requested tolerance");
    return total;
}

double gauss_kronrod_panel(const std::function<double(double)>& f, double a, double b) {
    return gk15(f, a, b).value;
}

double integrate_from_zero(const std::function<double(double)>& f, double x,
                           const std::vector<double>& kinks) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("integrate_from_zero: upper limit must be finite and nonnegative");
    if (x == 0.0) return 0.0;
    std::vector<double> cuts;
    for (double t : kinks) {
        if (t > 0.0 && t < x) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Panels from smallest to largest so rounding stays at the ulp level.
    constexpr int kLevels = 46;
    double total = gk15(f, 0.0, x * std::pow(0.5, kLevels)).value;
    for (int k = kLevels; k >= 1; --k) {
        const double lo = x * std::pow(0.5, k);
        const double hi = (k == 1) ? x : x * std::pow(0.5, k - 1);
        double left = lo;
        for (double t : cuts) {
            if (t > left && t < hi) {
                total += gk15(f, left, t).value;
                left = t;
            }
        }
        total += gk15(f, left, hi).value;
    }
    return total;
}

MinResult golden_section_minimize(const std::function<double(double)>& f,
                                  double lo, double hi, double x_tol) {
    if (!(lo < hi)) throw std::invalid_argument("golden_section_minimize: empty bracket");
    const double invphi = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    double best_x = f1 <= f2 ? x1 : x2;
    double best_f = std::min(f1, f2);
    int guard = 0;
    while (b - a > x_tol && ++guard < 200) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
        if (f1 < best_f) { best_f = f1; best_x = x1; }
        if (f2 < best_f) { best_f = f2; best_x = x2; }
    }
    return {best_x, best_f};
}

double inverse_monotone(const std::function<double(double)>& F, double y,
                        double lo, double hi, double value_slack) {
    double flo = F(lo), fhi = F(hi);
    if (y < flo - value_slack || y > fhi + value_slack)
        throw std::domain_error("inverse_monotone: target outside the function range");
    if (y <= flo) return lo;
    if (y >= fhi) return hi;
    int guard = 0;
    while (++guard < 300) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // adjacent doubles
        const double fm = F(mid);
        if (fm < y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double bisect_root(const std::function<double(double)>& f,
                   double lo, double hi, double x_tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect_root: no sign change on the bracket");
    int guard = 0;
    while (hi - lo > x_tol && ++guard < 300) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; } else { hi = mid; fhi = fm; }
    }
    return 0.5 * (lo + hi);
}

}  // namespace setrec
