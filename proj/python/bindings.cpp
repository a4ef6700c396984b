// Python bindings for the main recovery operations. Plain lists in, plain
// lists and dicts out; heavy lifting stays in the C++ core.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "setrec/convexcal.hpp"
#include "setrec/funcspace.hpp"
#include "setrec/geometry.hpp"
#include "setrec/knots.hpp"
#include "setrec/noisy.hpp"
#include "setrec/recovery.hpp"
#include "setrec/rmintegral.hpp"
#include "setrec/selftest.hpp"

namespace py = pybind11;
using namespace setrec;

namespace {

GridPtr grid_for(std::size_t dim, std::size_t size) {
    return size == 0 ? DirectionGrid::for_dimension(dim)
                     : DirectionGrid::for_dimension(dim, size);
}

py::dict body_dict(const ConvexBody& body) {
    py::dict d;
    d["directions"] = body.grid()->directions();
    d["support"] = body.support();
    return d;
}

}  // namespace

PYBIND11_MODULE(_setrec, m) {
    m.doc() = "optimal recovery of integrals of set-valued functions";

    py::class_<Modulus>(m, "Modulus")
        .def_static("power", &Modulus::power, py::arg("c"), py::arg("alpha"))
        .def_static("capped_linear", &Modulus::capped_linear, py::arg("slope"),
                    py::arg("cap"))
        .def_static("tabulated", &Modulus::tabulated, py::arg("ts"), py::arg("values"))
        .def("__call__", [](const Modulus& w, double t) { return w(t); }, py::arg("t"));

    py::class_<Weight>(m, "Weight")
        .def_static("constant_one", &Weight::constant_one)
        .def_static("polynomial", &Weight::polynomial, py::arg("coeffs"))
        .def_static("tabulated", &Weight::tabulated, py::arg("xs"), py::arg("values"))
        .def("__call__", [](const Weight& w, double x) { return w(x); }, py::arg("x"));

    py::class_<KnotSet>(m, "KnotSet")
        .def(py::init<std::vector<double>>(), py::arg("knots"))
        .def_readonly("knots", &KnotSet::knots)
        .def("__len__", &KnotSet::size);

    py::class_<SetTrajectory>(m, "SetTrajectory")
        .def_static(
            "constant",
            [](std::vector<Vector> pts) {
                return SetTrajectory::constant(PointCloud(std::move(pts)));
            },
            py::arg("points"))
        .def_static(
            "scaled_body",
            [](std::function<double(double)> g, std::vector<Vector> pts) {
                return SetTrajectory::scaled_body(std::move(g),
                                                  PointCloud(std::move(pts)));
            },
            py::arg("profile"), py::arg("points"))
        .def_static("scalar_profile", &SetTrajectory::scalar_profile,
                    py::arg("profile"), py::arg("direction"))
        .def_property_readonly("dim", &SetTrajectory::dim);

    m.def("midpoint_knots", &midpoint_knots, py::arg("n"));

    m.def("worst_case_error", &worst_case_error, py::arg("omega"), py::arg("weight"),
          py::arg("knots"));

    m.def("uniform_optimal_error", &uniform_optimal_error, py::arg("omega"),
          py::arg("n"));

    m.def(
        "cell_weights",
        [](const KnotSet& knots, const Weight& P) { return decompose(knots, P).weights; },
        py::arg("knots"), py::arg("weight"));

    m.def(
        "optimize_knots",
        [](const Weight& P, const Modulus& omega, std::size_t n,
           std::size_t max_sweeps, double objective_tol, std::uint64_t seed,
           bool quantile_start, bool jitter_start) {
            OptimizeOptions opts;
            opts.max_sweeps = max_sweeps;
            opts.objective_tol = objective_tol;
            opts.seed = seed;
            opts.quantile_start = quantile_start;
            opts.jitter_start = jitter_start;
            const OptimizedKnots r = optimize_knots(P, omega, n, opts);
            py::dict d;
            d["knots"] = r.knots.knots;
            d["error"] = r.error;
            d["sweeps"] = r.sweeps;
            d["start"] = r.start;
            return d;
        },
        py::arg("weight"), py::arg("omega"), py::arg("n"), py::arg("max_sweeps") = 200,
        py::arg("objective_tol") = 1e-10, py::arg("seed") = 42,
        py::arg("quantile_start") = true, py::arg("jitter_start") = true);

    m.def("omega_big", &omega_big, py::arg("omega"), py::arg("x"));
    m.def("omega_big_inv", &omega_big_inv, py::arg("omega"), py::arg("y"));
    m.def("power_weight_error_estimate", &power_weight_error_estimate,
          py::arg("alpha"), py::arg("weight"), py::arg("n"));

    m.def(
        "asymptotic_constant",
        [](const Weight& P, const Modulus& omega, std::vector<std::size_t> ns,
           bool with_ratios) {
            const AsymptoticReport r = asymptotic_constant(P, omega, ns, with_ratios);
            py::dict d;
            d["ns"] = r.ns;
            d["b_values"] = r.b_values;
            d["n_omega_b"] = r.n_omega_b;
            d["extrapolated_b"] = r.extrapolated_b;
            d["ratio_ns"] = r.ratio_ns;
            d["ratios"] = r.ratios;
            d["notes"] = r.notes;
            return d;
        },
        py::arg("weight"), py::arg("omega"), py::arg("n_list"),
        py::arg("with_ratios") = false);

    m.def(
        "noisy_error_value",
        [](const Modulus& omega, const KnotSet& knots, std::vector<double> epsilons,
           const Weight& P) {
            return noisy_error_value(omega, knots, ErrorBudget(std::move(epsilons)), P);
        },
        py::arg("omega"), py::arg("knots"), py::arg("epsilons"), py::arg("weight"));

    m.def(
        "active_indices",
        [](const Modulus& omega, const KnotSet& knots, std::vector<double> epsilons,
           const Weight& P) {
            return active_cells(omega, knots, ErrorBudget(std::move(epsilons)), P)
                .active_indices();
        },
        py::arg("omega"), py::arg("knots"), py::arg("epsilons"), py::arg("weight"));

    m.def(
        "hausdorff",
        [](std::vector<Vector> a, std::vector<Vector> b) {
            return hausdorff(PointCloud(std::move(a)), PointCloud(std::move(b)));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "recover",
        [](std::vector<std::vector<Vector>> samples, const KnotSet& knots,
           const Weight& P, std::size_t grid_size) {
            std::vector<PointCloud> clouds;
            clouds.reserve(samples.size());
            for (std::vector<Vector>& s : samples) clouds.emplace_back(std::move(s));
            if (clouds.empty()) throw std::invalid_argument("recover: no samples");
            const GridPtr grid = grid_for(clouds[0].dim(), grid_size);
            return body_dict(optimal_estimate(clouds, decompose(knots, P), grid));
        },
        py::arg("samples"), py::arg("knots"), py::arg("weight"),
        py::arg("grid_size") = 0);

    m.def(
        "integrate",
        [](const SetTrajectory& f, const Weight& P, double tol, std::size_t grid_size) {
            const GridPtr grid = grid_for(f.dim(), grid_size);
            const IntegralResult r = integrate(f, P, tol, grid);
            py::dict d = body_dict(r.body);
            d["achieved_tolerance"] = r.achieved_tolerance;
            d["refinements"] = r.refinement_count;
            return d;
        },
        py::arg("trajectory"), py::arg("weight"), py::arg("tol") = 1e-7,
        py::arg("grid_size") = 0);

    m.def("run_selftest", []() {
        const SelfTestReport r = run_selftest();
        py::dict d;
        d["passed"] = r.passed;
        d["failed"] = r.failed;
        d["failures"] = r.failures;
        return d;
    });
}
