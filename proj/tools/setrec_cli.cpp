// Command-line front end: reproducible experiments over the recovery library.
// Configuration is line-oriented `key = value` text with dotted keys; every
// key can also be given directly as a command-line `key=value` override.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "setrec/csv.hpp"
#include "setrec/knots.hpp"
#include "setrec/noisy.hpp"
#include "setrec/quadrature.hpp"
#include "setrec/recovery.hpp"
#include "setrec/rmintegral.hpp"
#include "setrec/selftest.hpp"

using namespace setrec;

namespace {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(trim(s.substr(pos, next - pos)));
        pos = next + 1;
        if (next == s.size()) break;
    }
    return out;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a number: '" + s + "'");
    }
}

std::size_t parse_count(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a nonnegative integer: '" + s + "'");
    }
}

struct Config {
    std::map<std::string, std::string> kv;

    bool has(const std::string& k) const { return kv.count(k) > 0; }
    std::string str(const std::string& k, const std::string& dflt) const {
        const auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    }
    std::string require(const std::string& k) const {
        const auto it = kv.find(k);
        if (it == kv.end()) throw ConfigError("missing required key '" + k + "'");
        return it->second;
    }
    double number(const std::string& k, double dflt) const {
        return has(k) ? parse_double(kv.at(k), k) : dflt;
    }
    std::size_t count(const std::string& k, std::size_t dflt) const {
        return has(k) ? parse_count(kv.at(k), k) : dflt;
    }
    bool flag(const std::string& k, bool dflt) const {
        if (!has(k)) return dflt;
        const std::string v = kv.at(k);
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        throw ConfigError("key '" + k + "': expected true/false");
    }
    std::vector<double> numbers(const std::string& k) const {
        std::vector<double> out;
        for (const std::string& f : split(require(k), ','))
            out.push_back(parse_double(f, k));
        return out;
    }
    std::vector<std::size_t> counts(const std::string& k) const {
        std::vector<std::size_t> out;
        for (const std::string& f : split(require(k), ','))
            out.push_back(parse_count(f, k));
        return out;
    }
};

void apply_line(Config& cfg, const std::string& line, const std::string& where) {
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') return;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError(where + ": expected key = value, got '" + text + "'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key in '" + text + "'");
    cfg.kv[key] = value;
}

void load_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) apply_line(cfg, line, path);
}

// --- builders ---

Modulus make_omega(const Config& cfg) {
    const std::string kind = cfg.str("omega.kind", "power");
    if (kind == "power")
        return Modulus::power(cfg.number("omega.c", 1.0), cfg.number("omega.alpha", 1.0));
    if (kind == "capped")
        return Modulus::capped_linear(parse_double(cfg.require("omega.L"), "omega.L"),
                                      parse_double(cfg.require("omega.cap"), "omega.cap"));
    if (kind == "tabulated")
        return Modulus::tabulated(cfg.numbers("omega.ts"), cfg.numbers("omega.values"));
    throw ConfigError("omega.kind must be power, capped, or tabulated");
}

Weight make_weight(const Config& cfg) {
    const std::string kind = cfg.str("weight.kind", "constant");
    if (kind == "constant") return Weight::constant_one();
    if (kind == "polynomial") return Weight::polynomial(cfg.numbers("weight.coeffs"));
    if (kind == "tabulated")
        return Weight::tabulated(cfg.numbers("weight.xs"), cfg.numbers("weight.values"));
    throw ConfigError("weight.kind must be constant, polynomial, or tabulated");
}

OptimizeOptions make_opts(const Config& cfg) {
    OptimizeOptions opts;
    opts.max_sweeps = cfg.count("sweeps.max", opts.max_sweeps);
    opts.objective_tol = cfg.number("tol.objective", opts.objective_tol);
    opts.seed = cfg.count("seed", 42);
    opts.quantile_start = cfg.flag("starts.quantile", true);
    opts.jitter_start = cfg.flag("starts.jitter", true);
    return opts;
}

KnotSet make_knots(const Config& cfg, const Modulus& omega, const Weight& P) {
    const std::string spec = cfg.require("knots");
    if (spec.rfind("midpoints:", 0) == 0)
        return midpoint_knots(parse_count(spec.substr(10), "knots"));
    if (spec.rfind("optimize:", 0) == 0)
        return optimize_knots(P, omega, parse_count(spec.substr(9), "knots"),
                              make_opts(cfg))
            .knots;
    std::string list = spec;
    if (spec.rfind("explicit:", 0) == 0) list = spec.substr(9);
    std::vector<double> xs;
    for (const std::string& f : split(list, ','))
        xs.push_back(parse_double(f, "knots"));
    return KnotSet(std::move(xs));
}

ErrorBudget make_budget(const Config& cfg, std::size_t n) {
    const std::string spec = cfg.require("epsilons");
    if (spec.rfind("uniform:", 0) == 0) {
        const double e = parse_double(spec.substr(8), "epsilons");
        return ErrorBudget(std::vector<double>(n, e));
    }
    std::vector<double> eps;
    for (const std::string& f : split(spec, ','))
        eps.push_back(parse_double(f, "epsilons"));
    return ErrorBudget(std::move(eps));
}

GridPtr make_grid(const Config& cfg, std::size_t data_dim) {
    const std::size_t dim = cfg.count("dim", data_dim);
    if (dim != data_dim)
        throw ConfigError("dim does not match the dimension of the input data");
    const std::size_t size = cfg.count("grid.size", 0);
    return size == 0 ? DirectionGrid::for_dimension(dim)
                     : DirectionGrid::for_dimension(dim, size);
}

std::vector<PointCloud> load_samples(const Config& cfg) {
    std::vector<PointCloud> clouds;
    for (const std::string& path : split(cfg.require("samples"), ';')) {
        if (path.empty()) continue;
        clouds.push_back(read_point_cloud(path));
    }
    if (clouds.empty()) throw ConfigError("samples: no files given");
    for (const PointCloud& c : clouds)
        if (c.dim() != clouds[0].dim())
            throw ConfigError("samples: dimensions differ across files");
    return clouds;
}

void emit_table(const Config& cfg, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
    if (cfg.has("output")) {
        write_table(cfg.require("output"), header, rows);
        return;
    }
    for (std::size_t c = 0; c < header.size(); ++c)
        std::cout << (c ? "," : "") << header[c];
    std::cout << '\n';
    for (const std::vector<double>& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            std::cout << (c ? "," : "") << format_double(row[c]);
        std::cout << '\n';
    }
}

// --- key validation ---

const std::set<std::string> kOmegaKeys = {"omega.kind", "omega.c", "omega.alpha",
                                          "omega.L", "omega.cap", "omega.ts",
                                          "omega.values"};
const std::set<std::string> kWeightKeys = {"weight.kind", "weight.coeffs",
                                           "weight.xs", "weight.values"};
const std::set<std::string> kOptKeys = {"seed", "sweeps.max", "tol.objective",
                                        "starts.quantile", "starts.jitter"};
const std::set<std::string> kGridKeys = {"dim", "grid.size"};

std::set<std::string> allowed_keys(const std::string& command) {
    std::set<std::string> keys;
    const auto add = [&keys](const std::set<std::string>& more) {
        keys.insert(more.begin(), more.end());
    };
    if (command == "bound" || command == "recover" || command == "noisy" ||
        command == "knots" || command == "asymptotics" || command == "study") {
        add(kOmegaKeys);
        add(kWeightKeys);
        add(kOptKeys);
    }
    if (command == "bound") keys.insert({"knots", "output"});
    if (command == "recover") {
        add(kGridKeys);
        keys.insert({"knots", "samples", "output", "grid_output"});
    }
    if (command == "knots") keys.insert({"n", "output"});
    if (command == "noisy") {
        add(kGridKeys);
        keys.insert({"knots", "epsilons", "output", "samples", "body_output"});
    }
    if (command == "integrate") {
        add(kWeightKeys);
        add(kGridKeys);
        keys.insert({"trajectory.kind", "trajectory.cloud", "trajectory.profile",
                     "trajectory.direction", "tol.integrate", "output",
                     "history_output"});
    }
    if (command == "asymptotics") keys.insert({"n_list", "asymptotics.ratios", "output"});
    if (command == "study") keys.insert({"n_list", "output"});
    return keys;
}

void reject_unknown_keys(const Config& cfg, const std::string& command) {
    const std::set<std::string> keys = allowed_keys(command);
    for (const auto& [k, v] : cfg.kv) {
        if (!keys.count(k))
            throw ConfigError("unknown key '" + k + "' for command '" + command + "'");
    }
}

// --- commands ---

int cmd_bound(const Config& cfg) {
    const Modulus omega = make_omega(cfg);
    const Weight P = make_weight(cfg);
    const KnotSet knots = make_knots(cfg, omega, P);
    const double value = worst_case_error(omega, P, knots);
    if (cfg.has("output")) write_table(cfg.require("output"), {"worst_case_error"}, {{value}});
    std::cout << format_double(value) << '\n';
    return 0;
}

int cmd_recover(const Config& cfg) {
    const Modulus omega = make_omega(cfg);
    const Weight P = make_weight(cfg);
    const KnotSet knots = make_knots(cfg, omega, P);
    const std::vector<PointCloud> samples = load_samples(cfg);
    if (samples.size() != knots.size())
        throw ConfigError("samples: need exactly one file per knot");
    const GridPtr grid = make_grid(cfg, samples[0].dim());
    const CellDecomposition cells = decompose(knots, P);
    const ConvexBody body = optimal_estimate(samples, cells, grid);
    const double value = worst_case_error(omega, P, knots);
    write_body(cfg.require("output"), body);
    if (cfg.has("grid_output")) write_grid(cfg.require("grid_output"), *grid);
    std::cout << format_double(value) << '\n';
    return 0;
}

int cmd_knots(const Config& cfg) {
    const Modulus omega = make_omega(cfg);
    const Weight P = make_weight(cfg);
    const std::size_t n = parse_count(cfg.require("n"), "n");
    const OptimizedKnots result = optimize_knots(P, omega, n, make_opts(cfg));
    if (cfg.has("output")) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < result.knots.size(); ++i)
            rows.push_back({static_cast<double>(i), result.knots.knots[i], result.error});
        write_table(cfg.require("output"), {"knot_index", "knot_value", "error"}, rows);
    }
    std::cout << format_double(result.error) << '\n';
    return 0;
}

int cmd_noisy(const Config& cfg) {
    const Modulus omega = make_omega(cfg);
    const Weight P = make_weight(cfg);
    const KnotSet knots = make_knots(cfg, omega, P);
    const ErrorBudget budget = make_budget(cfg, knots.size());
    const double value = noisy_error_value(omega, knots, budget, P);
    const ActiveDecomposition decomp = active_cells(omega, knots, budget, P);
    if (cfg.has("output")) {
        std::vector<std::vector<double>> rows;
        for (const ActiveCell& cell : decomp.cells)
            for (const auto& [lo, hi] : cell.intervals)
                rows.push_back({static_cast<double>(cell.index), lo, hi, cell.weight});
        write_table(cfg.require("output"),
                    {"active_index", "interval_lo", "interval_hi", "weight"}, rows);
    }
    if (cfg.has("samples") || cfg.has("body_output")) {
        const std::vector<PointCloud> samples = load_samples(cfg);
        const GridPtr grid = make_grid(cfg, samples[0].dim());
        const ConvexBody body = noisy_optimal_estimate(samples, decomp, grid);
        write_body(cfg.require("body_output"), body);
    }
    std::cout << format_double(value) << '\n';
    return 0;
}

int cmd_integrate(const Config& cfg) {
    const Weight P = make_weight(cfg);
    const std::string kind = cfg.require("trajectory.kind");
    SetTrajectory f = [&]() -> SetTrajectory {
        if (kind == "constant")
            return SetTrajectory::constant(read_point_cloud(cfg.require("trajectory.cloud")));
        if (kind == "scaled_body") {
            const Weight profile = Weight::polynomial(cfg.numbers("trajectory.profile"));
            return SetTrajectory::scaled_body(
                [profile](double t) { return profile(t); },
                read_point_cloud(cfg.require("trajectory.cloud")));
        }
        if (kind == "scalar_profile") {
            const Weight profile = Weight::polynomial(cfg.numbers("trajectory.profile"));
            return SetTrajectory::scalar_profile(
                [profile](double t) { return profile(t); },
                cfg.numbers("trajectory.direction"));
        }
        throw ConfigError("trajectory.kind must be constant, scaled_body, or scalar_profile");
    }();
    const GridPtr grid = make_grid(cfg, f.dim());
    const double tol = cfg.number("tol.integrate", 1e-7);
    const IntegralResult result = integrate(f, P, tol, grid);
    write_body(cfg.require("output"), result.body);
    if (cfg.has("history_output")) {
        std::vector<std::vector<double>> rows;
        for (const RefinementStep& step : result.history)
            rows.push_back({static_cast<double>(step.cells), step.distance});
        write_table(cfg.require("history_output"), {"cells", "distance"}, rows);
    }
    std::cout << format_double(result.achieved_tolerance) << '\n';
    return 0;
}

int cmd_asymptotics(const Config& cfg) {
    const Modulus omega = make_omega(cfg);
    const Weight P = make_weight(cfg);
    const std::vector<std::size_t> ns = cfg.counts("n_list");
    const bool ratios = cfg.flag("asymptotics.ratios", false);
    const AsymptoticReport rep = asymptotic_constant(P, omega, ns, ratios);
    for (const std::string& note : rep.notes)
        std::cerr << "domain violation: " << note << '\n';
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < rep.ns.size(); ++i) {
        const double ratio = ratios ? rep.ratios[i]
                                    : std::numeric_limits<double>::quiet_NaN();
        rows.push_back({static_cast<double>(rep.ns[i]), rep.b_values[i],
                        rep.n_omega_b[i], ratio});
    }
    emit_table(cfg, {"n", "b_value", "n_omega_b", "ratio"}, rows);
    return 0;
}

int cmd_study(const Config& cfg) {
    const Modulus omega = make_omega(cfg);
    const Weight P = make_weight(cfg);
    const std::vector<std::size_t> ns = cfg.counts("n_list");
    const OptimizeOptions opts = make_opts(cfg);
    std::vector<std::vector<double>> rows;
    for (const std::size_t n : ns) {
        if (n == 0) throw ConfigError("n_list entries must be positive");
        const double error = P.is_constant_one()
                                 ? uniform_optimal_error(omega, n)
                                 : optimize_knots(P, omega, n, opts).error;
        double closed = std::numeric_limits<double>::quiet_NaN();
        if (omega.kind() == Modulus::Kind::Power)
            closed = omega.power_c() *
                     power_weight_error_estimate(omega.power_alpha(), P, n);
        rows.push_back({static_cast<double>(n), error, closed, error / closed});
    }
    emit_table(cfg, {"n", "error", "closed_form", "ratio"}, rows);
    return 0;
}

int cmd_selftest() {
    const SelfTestReport rep = run_selftest();
    for (const std::string& name : rep.failures) std::cout << "FAIL " << name << '\n';
    std::cout << "passed=" << rep.passed << " failed=" << rep.failed << '\n';
    return rep.ok() ? 0 : 3;
}

int dispatch(const std::string& command, const Config& cfg) {
    if (command == "bound") return cmd_bound(cfg);
    if (command == "recover") return cmd_recover(cfg);
    if (command == "knots") return cmd_knots(cfg);
    if (command == "noisy") return cmd_noisy(cfg);
    if (command == "integrate") return cmd_integrate(cfg);
    if (command == "asymptotics") return cmd_asymptotics(cfg);
    if (command == "study") return cmd_study(cfg);
    if (command == "selftest") return cmd_selftest();
    throw ConfigError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc < 2)
            throw ConfigError(
                "usage: setrec <bound|recover|knots|noisy|integrate|asymptotics|study|"
                "selftest> [config-file] [key=value ...]");
        const std::string command = argv[1];
        Config cfg;
        for (int i = 2; i < argc; ++i) {
            std::string arg = argv[i];
            while (!arg.empty() && arg[0] == '-') arg.erase(arg.begin());
            if (arg.find('=') != std::string::npos)
                apply_line(cfg, arg, "command line");
            else
                load_config_file(cfg, arg);
        }
        if (command != "selftest") reject_unknown_keys(cfg, command);
        return dispatch(command, cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const NonconvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const IntegrationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
