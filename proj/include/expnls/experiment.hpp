/**
 * @file experiment.hpp
 * @brief Configuration-driven runs and tension-parameter sweeps
 *
 * A run fits the initial coefficients, takes ceil(t_end/dt) steps and
 * optionally writes
 *
 *   snapshot_<step>.csv   x,re,im,abs at every knot
 *   snapshots.csv         step,t,file index of the snapshots
 *   diagnostics.csv       t,linf,c1,c2 (linf blank without exact solution)
 *   density.csv           knot row, then t,|U(x_0)|,...,|U(x_N)| per sample
 *   summary.txt           key = value summary
 *
 * A sweep evaluates the final error on a log-spaced grid of p and refines
 * around the best grid point with golden-section search in log p.
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "expnls/config.hpp"
#include "expnls/diagnostics.hpp"
#include "expnls/mesh_field.hpp"
#include "expnls/problems.hpp"
#include "expnls/spline_basis.hpp"
#include "expnls/stepper.hpp"

namespace expnls {

struct RunConfig {
    ProblemSpec problem;
    double a = -20.0;
    double b = 60.0;
    std::optional<int> intervals;  ///< exactly one of intervals / spacing
    std::optional<double> spacing;
    double dt = 0.005;
    double t_end = 1.0;
    double p = 1.0;
    int snapshot_every = 0;     ///< 0: initial and final snapshot only
    int diagnostics_every = 1;  ///< steps between invariant samples
    bool density = false;
    ErrorNorm error_norm = ErrorNorm::Modulus;
    double peak_fraction = kDefaultPeakFraction;
    std::string out_dir = "out";

    [[nodiscard]] Mesh mesh() const {
        if (intervals) {
            return Mesh(a, b, *intervals);
        }
        return Mesh::with_spacing(a, b, *spacing);
    }

    [[nodiscard]] long steps() const {
        return static_cast<long>(std::ceil(t_end / dt - 1e-9));
    }
};

struct SweepConfig {
    RunConfig base;
    double p_min = 1e-8;
    double p_max = 10.0;
    int grid_points = 19;
    int refine_iters = 20;
};

inline void validate(const RunConfig& cfg) {
    validate(cfg.problem);
    if (!(cfg.a < cfg.b)) {
        throw ConfigError("domain requires a < b");
    }
    if (cfg.intervals.has_value() == cfg.spacing.has_value()) {
        throw ConfigError("give exactly one of N and h");
    }
    if (cfg.intervals && *cfg.intervals < 2) {
        throw ConfigError("N must be at least 2");
    }
    if (cfg.spacing && !(*cfg.spacing > 0.0)) {
        throw ConfigError("h must be positive");
    }
    if (!(cfg.dt > 0.0)) {
        throw ConfigError("dt must be positive");
    }
    if (!(cfg.t_end >= cfg.dt)) {
        throw ConfigError("t_end must be at least dt");
    }
    if (!(cfg.p > 0.0)) {
        throw ConfigError("p must be positive");
    }
    if (cfg.snapshot_every < 0 || cfg.diagnostics_every < 1) {
        throw ConfigError("snapshot_every must be >= 0 and diagnostics_every >= 1");
    }
}

inline void validate(const SweepConfig& cfg) {
    validate(cfg.base);
    if (!(cfg.p_min > 0.0 && cfg.p_min < cfg.p_max)) {
        throw ConfigError("sweep requires 0 < p_min < p_max");
    }
    if (cfg.grid_points < 3) {
        throw ConfigError("sweep requires grid_points >= 3");
    }
    if (cfg.refine_iters < 0) {
        throw ConfigError("refine_iters must be >= 0");
    }
    if (!exact_solution(cfg.base.problem)) {
        throw ConfigError("sweep needs a problem with an exact solution (single_soliton)");
    }
}

// ---------------------------------------------------------------------------
// config keys and presets

inline const std::set<std::string, std::less<>>& known_keys() {
    static const std::set<std::string, std::less<>> keys{
        "problem.kind", "problem.q", "problem.alpha", "problem.S", "problem.alpha1",
        "problem.S1", "problem.x1", "problem.alpha2", "problem.S2", "problem.x2",
        "problem.A", "problem.M", "a", "b", "N", "h", "dt", "t_end", "p",
        "snapshot_every", "diagnostics_every", "density", "error_norm", "peak_fraction",
        "out_dir", "sweep.p_min", "sweep.p_max", "sweep.grid_points", "sweep.refine_iters"};
    return keys;
}

struct Preset {
    std::string name;
    std::string description;
    std::string text;  ///< config text
};

inline const std::vector<Preset>& presets() {
    static const std::vector<Preset> all{
        {"single-soliton", "single soliton, q=2 S=4 alpha=1, h=0.05 dt=0.005 to t=1",
         "problem.kind = single_soliton\nproblem.q = 2\nproblem.alpha = 1\nproblem.S = 4\n"
         "a = -20\nb = 60\nh = 0.05\ndt = 0.005\nt_end = 1\ndiagnostics_every = 20\n"},
        {"single-soliton-coarse", "single soliton on the coarse mesh h=0.3125 dt=0.02",
         "problem.kind = single_soliton\nproblem.q = 2\nproblem.alpha = 1\nproblem.S = 4\n"
         "a = -20\nb = 60\nh = 0.3125\ndt = 0.02\nt_end = 1\ndiagnostics_every = 5\n"},
        {"collision", "two solitons from x=+-10 with speeds -+4 on [-45,45], h=0.1 to t=6",
         "problem.kind = collision\nproblem.q = 2\nproblem.alpha1 = 1\nproblem.S1 = -4\n"
         "problem.x1 = 10\nproblem.alpha2 = 1\nproblem.S2 = 4\nproblem.x2 = -10\n"
         "a = -45\nb = 45\nh = 0.1\ndt = 0.005\nt_end = 6\ndiagnostics_every = 100\n"
         "snapshot_every = 100\n"},
        {"maxwellian-standing", "A exp(-x^2), A=1.78, N=1334 on [-45,45] to t=6",
         "problem.kind = maxwellian_standing\nproblem.q = 2\nproblem.A = 1.78\n"
         "a = -45\nb = 45\nN = 1334\ndt = 0.005\nt_end = 6\ndiagnostics_every = 100\n"
         "snapshot_every = 400\n"},
        {"maxwellian-standing-A1", "decaying standing pulse, A=1",
         "problem.kind = maxwellian_standing\nproblem.q = 2\nproblem.A = 1\n"
         "a = -45\nb = 45\nN = 1334\ndt = 0.005\nt_end = 6\ndiagnostics_every = 100\n"
         "snapshot_every = 400\n"},
        {"maxwellian-mobile", "A exp(-x^2 + 2ix), A=1.78, N=1334 on [-45,45] to t=6",
         "problem.kind = maxwellian_mobile\nproblem.q = 2\nproblem.A = 1.78\n"
         "a = -45\nb = 45\nN = 1334\ndt = 0.005\nt_end = 6\ndiagnostics_every = 100\n"
         "snapshot_every = 400\n"},
        {"maxwellian-mobile-A1", "decaying mobile pulse, A=1",
         "problem.kind = maxwellian_mobile\nproblem.q = 2\nproblem.A = 1\n"
         "a = -45\nb = 45\nN = 1334\ndt = 0.005\nt_end = 6\ndiagnostics_every = 100\n"
         "snapshot_every = 400\n"},
        {"bound-state-M4", "sech(x) with q=32 (M=4) on [-20,20], N=1334 to t=1",
         "problem.kind = bound_state\nproblem.M = 4\nproblem.q = 32\n"
         "a = -20\nb = 20\nN = 1334\ndt = 0.005\nt_end = 1\ndiagnostics_every = 10\n"
         "snapshot_every = 50\ndensity = true\n"},
        {"bound-state-M5", "sech(x) with q=50 (M=5) on [-20,20], N=1334 to t=1",
         "problem.kind = bound_state\nproblem.M = 5\nproblem.q = 50\n"
         "a = -20\nb = 20\nN = 1334\ndt = 0.005\nt_end = 1\ndiagnostics_every = 10\n"
         "snapshot_every = 50\ndensity = true\n"},
        {"bound-state-M6", "exploratory: sech(x) with q=72 (M=6)",
         "problem.kind = bound_state\nproblem.M = 6\nproblem.q = 72\n"
         "a = -20\nb = 20\nN = 1334\ndt = 0.005\nt_end = 1\ndiagnostics_every = 10\n"
         "snapshot_every = 50\ndensity = true\n"},
        {"bound-state-M7", "exploratory: sech(x) with q=98 (M=7)",
         "problem.kind = bound_state\nproblem.M = 7\nproblem.q = 98\n"
         "a = -20\nb = 20\nN = 1334\ndt = 0.005\nt_end = 1\ndiagnostics_every = 10\n"
         "snapshot_every = 50\ndensity = true\n"},
    };
    return all;
}

inline std::optional<Config> preset_config(const std::string& name) {
    for (const Preset& p : presets()) {
        if (p.name == name) {
            return Config::parse_string(p.text, "preset " + name);
        }
    }
    return std::nullopt;
}

inline RunConfig run_config_from(const Config& c) {
    c.require_known(known_keys());
    RunConfig cfg;
    const std::string kind_name = c.get_string("problem.kind", "single_soliton");
    const auto kind = parse_problem_kind(kind_name);
    if (!kind) {
        throw ConfigError("unknown problem.kind '" + kind_name + "'");
    }
    ProblemSpec& pr = cfg.problem;
    pr.kind = *kind;
    pr.alpha = c.get_double("problem.alpha", pr.alpha);
    pr.speed = c.get_double("problem.S", pr.speed);
    pr.alpha1 = c.get_double("problem.alpha1", pr.alpha1);
    pr.speed1 = c.get_double("problem.S1", pr.speed1);
    pr.x1 = c.get_double("problem.x1", pr.x1);
    pr.alpha2 = c.get_double("problem.alpha2", pr.alpha2);
    pr.speed2 = c.get_double("problem.S2", pr.speed2);
    pr.x2 = c.get_double("problem.x2", pr.x2);
    pr.amplitude = c.get_double("problem.A", pr.amplitude);
    pr.order = static_cast<int>(c.get_int("problem.M", pr.order));
    if (pr.kind == ProblemKind::BoundState) {
        pr.q = c.get_double("problem.q", 2.0 * pr.order * pr.order);
    } else {
        pr.q = c.get_double("problem.q", pr.q);
    }

    cfg.a = c.get_double("a", cfg.a);
    cfg.b = c.get_double("b", cfg.b);
    if (const auto n = c.get_int("N")) {
        cfg.intervals = static_cast<int>(*n);
    }
    cfg.spacing = c.get_double("h");
    cfg.dt = c.get_double("dt", cfg.dt);
    cfg.t_end = c.get_double("t_end", cfg.t_end);
    cfg.p = c.get_double("p", cfg.p);
    cfg.snapshot_every = static_cast<int>(c.get_int("snapshot_every", cfg.snapshot_every));
    cfg.diagnostics_every = static_cast<int>(c.get_int("diagnostics_every", cfg.diagnostics_every));
    cfg.density = c.get_bool("density", cfg.density);
    const std::string norm = c.get_string("error_norm", "modulus");
    if (norm == "modulus") {
        cfg.error_norm = ErrorNorm::Modulus;
    } else if (norm == "complex") {
        cfg.error_norm = ErrorNorm::Complex;
    } else {
        throw ConfigError("error_norm must be 'modulus' or 'complex', got '" + norm + "'");
    }
    cfg.peak_fraction = c.get_double("peak_fraction", cfg.peak_fraction);
    cfg.out_dir = c.get_string("out_dir", cfg.out_dir);
    validate(cfg);
    return cfg;
}

inline SweepConfig sweep_config_from(const Config& c) {
    SweepConfig cfg;
    cfg.base = run_config_from(c);
    cfg.p_min = c.get_double("sweep.p_min", cfg.p_min);
    cfg.p_max = c.get_double("sweep.p_max", cfg.p_max);
    cfg.grid_points = static_cast<int>(c.get_int("sweep.grid_points", cfg.grid_points));
    cfg.refine_iters = static_cast<int>(c.get_int("sweep.refine_iters", cfg.refine_iters));
    validate(cfg);
    return cfg;
}

// ---------------------------------------------------------------------------
// run

enum class RunStatus { Ok, Failed };

struct RunResult {
    RunStatus status = RunStatus::Ok;
    std::string failure;        ///< empty on success
    long failed_step = -1;      ///< step index that failed, -1 on success
    long steps_done = 0;
    WaveState final_state;
    DiagnosticsSeries series;
    std::optional<double> linf_complex;
    std::optional<double> linf_modulus;
    Invariants initial;
    Invariants last;
    std::optional<Invariants> analytic;
    std::vector<Peak> final_peaks;
    double wall_seconds = 0.0;
};

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_snapshot(const std::filesystem::path& file, const WaveState& state,
                           const Mesh& mesh, const NodalWeights& w) {
    std::ofstream out(file);
    out << "x,re,im,abs\n";
    const std::vector<Complex> u = knot_values(state, w);
    for (std::size_t m = 0; m < u.size(); ++m) {
        out << format_double(mesh.knot(static_cast<int>(m))) << ',' << format_double(u[m].real())
            << ',' << format_double(u[m].imag()) << ',' << format_double(std::abs(u[m])) << '\n';
    }
}

inline std::string snapshot_name(long step) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%06ld.csv", step);
    return buf;
}

}  // namespace detail

/// Execute one run; files are written only when write_files is set.
inline RunResult run(const RunConfig& cfg, bool write_files = true) {
    validate(cfg);
    const auto started = std::chrono::steady_clock::now();
    const Mesh mesh = cfg.mesh();
    const SplineShape sh = shape(cfg.p, mesh.h());
    const NodalWeights w = nodal_weights(sh);
    const ProblemSpec& problem = cfg.problem;
    const std::optional<ExactSolution> exact = exact_solution(problem);
    const long total = cfg.steps();

    RunResult result;
    result.analytic = analytic_invariants(problem);
    WaveState state = fit_initial([&](double x) { return initial_condition(problem, x); },
                                  [&](double x) { return initial_derivative(problem, x); }, mesh, sh);

    namespace fs = std::filesystem;
    const fs::path dir(cfg.out_dir);
    std::ofstream diag_out;
    std::ofstream density_out;
    std::ofstream index_out;
    if (write_files) {
        fs::create_directories(dir);
        diag_out.open(dir / "diagnostics.csv");
        diag_out << "t,linf,c1,c2\n";
        index_out.open(dir / "snapshots.csv");
        index_out << "step,t,file\n";
        if (cfg.density) {
            density_out.open(dir / "density.csv");
            density_out << "x";
            for (int m = 0; m <= mesh.intervals(); ++m) {
                density_out << ',' << detail::format_double(mesh.knot(m));
            }
            density_out << '\n';
        }
    }

    auto record = [&](long step_index) {
        const Invariants inv = invariants(state, problem.q, mesh, w);
        result.series.times.push_back(state.time());
        result.series.c1.push_back(inv.c1);
        result.series.c2.push_back(inv.c2);
        double top = 0.0;
        for (const Complex& v : knot_values(state, w)) {
            top = std::max(top, std::abs(v));
        }
        result.series.peaks.push_back(top > 0.0 ? track_peaks(state, mesh, w, cfg.peak_fraction * top)
                                                : std::vector<Peak>{});
        std::string linf_text;
        if (exact) {
            const double e = linf_error(state, *exact, mesh, w, cfg.error_norm);
            result.series.linf.push_back(e);
            linf_text = detail::format_double(e);
        }
        if (write_files) {
            diag_out << detail::format_double(state.time()) << ',' << linf_text << ','
                     << detail::format_double(inv.c1) << ',' << detail::format_double(inv.c2) << '\n';
            if (cfg.density) {
                density_out << detail::format_double(state.time());
                for (const Complex& v : knot_values(state, w)) {
                    density_out << ',' << detail::format_double(std::abs(v));
                }
                density_out << '\n';
            }
        }
        (void)step_index;
    };
    auto snapshot = [&](long step_index) {
        if (!write_files) {
            return;
        }
        const std::string name = detail::snapshot_name(step_index);
        detail::write_snapshot(dir / name, state, mesh, w);
        index_out << step_index << ',' << detail::format_double(state.time()) << ',' << name << '\n';
    };

    result.initial = invariants(state, problem.q, mesh, w);
    record(0);
    snapshot(0);
    for (long k = 1; k <= total; ++k) {
        try {
            state = step(state, problem.q, cfg.dt, w);
        } catch (const StepFailure& e) {
            result.status = RunStatus::Failed;
            result.failure = e.what();
            result.failed_step = k;
            break;
        }
        // Avoid accumulating round-off in t.
        state.set_time(static_cast<double>(k) * cfg.dt);
        result.steps_done = k;
        const bool last = k == total;
        if (k % cfg.diagnostics_every == 0 || last) {
            record(k);
        }
        if ((cfg.snapshot_every > 0 && k % cfg.snapshot_every == 0) || last) {
            snapshot(k);
        }
    }

    result.last = invariants(state, problem.q, mesh, w);
    if (exact) {
        result.linf_complex = linf_error(state, *exact, mesh, w, ErrorNorm::Complex);
        result.linf_modulus = linf_error(state, *exact, mesh, w, ErrorNorm::Modulus);
    }
    result.final_peaks = result.series.peaks.empty() ? std::vector<Peak>{} : result.series.peaks.back();
    result.final_state = std::move(state);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

/// Relative change (v - v0)/|v0|, or the absolute change when v0 == 0.
inline double relative_drift(double v0, double v) {
    return v0 != 0.0 ? (v - v0) / std::abs(v0) : v - v0;
}

inline std::string summary_text(const RunConfig& cfg, const RunResult& r) {
    std::ostringstream out;
    using detail::format_double;
    out << "problem = " << to_string(cfg.problem.kind) << '\n';
    out << "status = " << (r.status == RunStatus::Ok ? "ok" : "failed") << '\n';
    if (r.status != RunStatus::Ok) {
        out << "failed_step = " << r.failed_step << '\n';
        out << "failure = " << r.failure << '\n';
    }
    const Mesh mesh = cfg.mesh();
    out << "N = " << mesh.intervals() << '\n';
    out << "h = " << format_double(mesh.h()) << '\n';
    out << "dt = " << format_double(cfg.dt) << '\n';
    out << "p = " << format_double(cfg.p) << '\n';
    out << "steps = " << r.steps_done << '\n';
    out << "t_final = " << format_double(r.final_state.time()) << '\n';
    if (r.linf_complex) {
        const double chosen = cfg.error_norm == ErrorNorm::Modulus ? *r.linf_modulus : *r.linf_complex;
        out << "error_norm = " << (cfg.error_norm == ErrorNorm::Modulus ? "modulus" : "complex") << '\n';
        out << "linf = " << format_double(chosen) << '\n';
        out << "linf_modulus = " << format_double(*r.linf_modulus) << '\n';
        out << "linf_complex = " << format_double(*r.linf_complex) << '\n';
    }
    out << "c1_initial = " << format_double(r.initial.c1) << '\n';
    out << "c2_initial = " << format_double(r.initial.c2) << '\n';
    out << "c1_final = " << format_double(r.last.c1) << '\n';
    out << "c2_final = " << format_double(r.last.c2) << '\n';
    out << "c1_drift = " << format_double(relative_drift(r.initial.c1, r.last.c1)) << '\n';
    out << "c2_drift = " << format_double(relative_drift(r.initial.c2, r.last.c2)) << '\n';
    if (r.analytic) {
        out << "c1_analytic = " << format_double(r.analytic->c1) << '\n';
        out << "c2_analytic = " << format_double(r.analytic->c2) << '\n';
    }
    out << "peaks = ";
    for (std::size_t i = 0; i < r.final_peaks.size(); ++i) {
        out << (i ? ";" : "") << format_double(r.final_peaks[i].position) << ':'
            << format_double(r.final_peaks[i].height);
    }
    out << '\n';
    out << "wall_time_s = " << format_double(r.wall_seconds) << '\n';
    return out.str();
}

inline void write_summary(const RunConfig& cfg, const RunResult& r) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream(std::filesystem::path(cfg.out_dir) / "summary.txt") << summary_text(cfg, r);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepPoint {
    double p = 0.0;
    double linf = 0.0;
};

struct SweepResult {
    std::vector<SweepPoint> evaluations;  ///< sorted by p
    SweepPoint best;
};

/// Final-time error for one p; +infinity if the run fails.
inline double sweep_objective(const RunConfig& base, double p) {
    RunConfig cfg = base;
    cfg.p = p;
    cfg.diagnostics_every = std::numeric_limits<int>::max();
    try {
        const RunResult r = run(cfg, false);
        if (r.status != RunStatus::Ok) {
            return std::numeric_limits<double>::infinity();
        }
        const double e = cfg.error_norm == ErrorNorm::Modulus ? *r.linf_modulus : *r.linf_complex;
        return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
    } catch (const std::exception&) {
        return std::numeric_limits<double>::infinity();
    }
}

inline SweepResult sweep(const SweepConfig& cfg) {
    validate(cfg);
    const double lo = std::log(cfg.p_min);
    const double hi = std::log(cfg.p_max);
    const auto n = static_cast<std::size_t>(cfg.grid_points);

    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    grid.front() = cfg.p_min;
    grid.back() = cfg.p_max;

    // Independent evaluations, run in bounded batches.
    std::vector<double> values(n);
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < n; start += workers) {
        std::vector<std::future<double>> batch;
        const std::size_t stop = std::min(n, start + workers);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, sweep_objective, cfg.base, grid[i]));
        }
        for (std::size_t i = start; i < stop; ++i) {
            values[i] = batch[i - start].get();
        }
    }

    std::vector<SweepPoint> evals;
    for (std::size_t i = 0; i < n; ++i) {
        evals.push_back({grid[i], values[i]});
    }
    const auto best_it = std::min_element(values.begin(), values.end());
    const auto k = static_cast<std::size_t>(best_it - values.begin());

    // Golden-section search in log p over the neighbours of the grid minimum.
    double left = std::log(grid[k == 0 ? 0 : k - 1]);
    double right = std::log(grid[std::min(n - 1, k + 1)]);
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    auto eval = [&](double logp) {
        const double p = std::exp(logp);
        const double v = sweep_objective(cfg.base, p);
        evals.push_back({p, v});
        return v;
    };
    if (cfg.refine_iters > 0 && right > left) {
        double x1 = right - ratio * (right - left);
        double x2 = left + ratio * (right - left);
        double f1 = eval(x1);
        double f2 = eval(x2);
        for (int it = 0; it < cfg.refine_iters; ++it) {
            if (f1 <= f2) {
                right = x2;
                x2 = x1;
                f2 = f1;
                x1 = right - ratio * (right - left);
                f1 = eval(x1);
            } else {
                left = x1;
                x1 = x2;
                f1 = f2;
                x2 = left + ratio * (right - left);
                f2 = eval(x2);
            }
        }
    }

    std::stable_sort(evals.begin(), evals.end(),
                     [](const SweepPoint& a, const SweepPoint& b) { return a.p < b.p; });
    SweepResult out;
    out.evaluations = evals;
    out.best = *std::min_element(evals.begin(), evals.end(),
                                 [](const SweepPoint& a, const SweepPoint& b) { return a.linf < b.linf; });
    return out;
}

inline void write_sweep(const SweepConfig& cfg, const SweepResult& r) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.base.out_dir);
    fs::create_directories(dir);
    std::ofstream table(dir / "sweep.csv");
    table << "p,linf\n";
    for (const SweepPoint& e : r.evaluations) {
        table << detail::format_double(e.p) << ',' << detail::format_double(e.linf) << '\n';
    }
    std::ofstream best(dir / "sweep_summary.txt");
    best << "best_p = " << detail::format_double(r.best.p) << '\n';
    best << "best_linf = " << detail::format_double(r.best.linf) << '\n';
    best << "error_norm = " << (cfg.base.error_norm == ErrorNorm::Modulus ? "modulus" : "complex") << '\n';
    best << "evaluations = " << r.evaluations.size() << '\n';
}

}  // namespace expnls
