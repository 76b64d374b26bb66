// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are pinned here.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "expnls/experiment.hpp"
#include "oracles.hpp"

using namespace expnls;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++failures;
    }
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

RunConfig preset(const std::string& name) {
    return run_config_from(*preset_config(name));
}

double max_modulus(const RunResult& r, const RunConfig& cfg) {
    const NodalWeights w = nodal_weights(shape(cfg.p, cfg.mesh().h()));
    double top = 0.0;
    for (const Complex& v : knot_values(r.final_state, w)) {
        top = std::max(top, std::abs(v));
    }
    return top;
}

double worst_relative(const std::vector<double>& v, double ref) {
    double worst = 0.0;
    for (double x : v) {
        worst = std::max(worst, std::abs(x - ref) / std::abs(ref));
    }
    return worst;
}

void soliton_baseline(int id, const std::string& name, double lo, double hi) {
    const RunConfig cfg = preset(name);
    const RunResult r = run(cfg, false);
    const double e = *r.linf_modulus;
    report(id, r.status == RunStatus::Ok && e >= lo && e <= hi,
           fmt("L_inf(t=1) = %.6g in [%g, %g] (modulus norm; complex norm %.6g)", e, lo, hi, *r.linf_complex));
}

void criterion3() {
    std::string detail;
    bool pass = true;
    const std::array<std::pair<const char*, double>, 2> cases{{{"single-soliton", 0.002},
                                                               {"single-soliton-coarse", 0.008}}};
    for (auto [name, bound] : cases) {
        SweepConfig cfg;
        cfg.base = preset(name);
        cfg.p_min = 1e-8;
        cfg.p_max = 10.0;
        const SweepResult r = sweep(cfg);
        pass = pass && r.best.linf <= bound;
        detail += fmt("h=%g: best L_inf %.6g at p=%.3g (need <= %g); ", cfg.base.mesh().h(), r.best.linf,
                      r.best.p, bound);
    }
    report(3, pass, detail);
}

void criterion4() {
    RunConfig cfg = preset("collision");
    cfg.diagnostics_every = 100;  // t = 0, 0.5, ..., 6
    const RunResult r = run(cfg, false);
    const double c1 = worst_relative(r.series.c1, 4.0);
    const double c2 = worst_relative(r.series.c2, 14.6658);
    const bool sampled = r.series.times.size() == 13;
    report(4, r.status == RunStatus::Ok && sampled && c1 <= 5e-4 && c2 <= 1e-2,
           fmt("max |C1-4|/4 = %.3g (<= 5e-4), max |C2-14.6658|/14.6658 = %.3g (<= 1e-2), samples %g", c1, c2,
               static_cast<double>(r.series.times.size())));
}

void criterion5() {
    RunConfig cfg = preset("maxwellian-standing");
    cfg.diagnostics_every = 20;
    const RunResult r = run(cfg, false);
    const double c1 = worst_relative(r.series.c1, 3.9710);
    const double c2 = worst_relative(r.series.c2, -4.9256);
    report(5, r.status == RunStatus::Ok && c1 <= 1e-3 && c2 <= 5e-3,
           fmt("max rel dev C1 = %.3g (<= 1e-3), C2 = %.3g (<= 5e-3) over t in [0, 6]", c1, c2));
}

void criterion6() {
    RunConfig cfg = preset("maxwellian-mobile");
    cfg.diagnostics_every = 20;
    const RunResult r = run(cfg, false);
    const double c1 = worst_relative(r.series.c1, 3.97100);
    const double c2 = worst_relative(r.series.c2, 10.95838);
    const auto peak = dominant_peak(r.final_peaks);
    const double pos = peak ? peak->position : std::nan("");
    report(6, r.status == RunStatus::Ok && c1 <= 1e-3 && c2 < 0.0195 && peak && std::abs(pos - 24.0) <= 0.5,
           fmt("max rel dev C1 = %.3g (<= 1e-3), C2 = %.3g (< 0.0195), peak at t=6: x = %.4f (24 +- 0.5)", c1, c2,
               pos));
}

void criterion7() {
    bool pass = true;
    std::string detail;
    for (const char* name : {"maxwellian-standing-A1", "maxwellian-mobile-A1"}) {
        const RunConfig cfg = preset(name);
        const RunResult r = run(cfg, false);
        const double ratio = max_modulus(r, cfg) / cfg.problem.amplitude;
        pass = pass && r.status == RunStatus::Ok && ratio < 0.6;
        detail += fmt("A=1: max|U|(6)/max|U|(0) = %.3f (< 0.6); ", ratio);
    }
    for (const char* name : {"maxwellian-standing", "maxwellian-mobile"}) {
        const RunConfig cfg = preset(name);
        const RunResult r = run(cfg, false);
        const double top = max_modulus(r, cfg);
        pass = pass && r.status == RunStatus::Ok && top >= 1.4;
        detail += fmt("A=1.78: max|U|(6) = %.3f (>= 1.4); ", top);
    }
    report(7, pass, detail);
}

void criterion8() {
    bool pass = true;
    std::string detail;
    for (const char* name : {"bound-state-M4", "bound-state-M5"}) {
        const RunConfig cfg = preset(name);
        const RunResult r = run(cfg, false);
        const double drift = std::abs(relative_drift(r.initial.c1, r.last.c1));
        const bool ok = r.status == RunStatus::Ok && std::abs(r.final_state.time() - 1.0) < 1e-12;
        pass = pass && ok && drift <= 0.01;
        detail += fmt("q=%g: completed %g, C1 %.6f -> %.6f, ", cfg.problem.q, ok ? 1.0 : 0.0, r.initial.c1,
                      r.last.c1) +
                  fmt("drift %.4g (<= 0.01); ", drift);
    }
    report(8, pass, detail);
}

void criterion9() {
    const auto started = std::chrono::steady_clock::now();
    const std::array<double, 5> tensions{1e-6, 1e-3, 0.1, 1.0, 5.0};
    const std::array<double, 3> spacings{0.01, 0.1, 1.0};
    double nodal = 0.0;     // worst relative nodal mismatch
    double junction = 0.0;  // worst jump / local scale
    double symmetry = 0.0;
    for (double p : tensions) {
        for (double h : spacings) {
            const SplineShape sh = shape(p, h);
            const NodalWeights w = nodal_weights(sh);
            const std::array<std::array<double, 5>, 3> expect{{{0.0, w.alpha1, 1.0, w.alpha1, 0.0},
                                                               {0.0, -w.beta1, 0.0, w.beta1, 0.0},
                                                               {0.0, w.gamma1, w.gamma0, w.gamma1, 0.0}}};
            const std::array<double, 3> scale{1.0, std::abs(w.beta1), std::abs(w.gamma0)};
            const double local = p * p * sh.s / sh.denom;
            const double eps = 1e-6 * h;
            for (int order = 0; order <= 2; ++order) {
                auto f = [&](double x) { return eval_basis(0, x, sh, 0.0, order); };
                for (int k = -2; k <= 2; ++k) {
                    const double x = k * h;
                    const auto o = static_cast<std::size_t>(order);
                    nodal = std::max(nodal, std::abs(f(x) - expect[o][static_cast<std::size_t>(k + 2)]) / scale[o]);
                    const double left = 2.0 * f(x - eps) - f(x - 2.0 * eps);
                    const double right = 2.0 * f(x + eps) - f(x + 2.0 * eps);
                    junction = std::max(junction, std::abs(left - right) / local);
                }
                const double sign = order == 1 ? -1.0 : 1.0;
                for (int k = 1; k < 40; ++k) {
                    const double u = 0.05 * k * h;
                    symmetry = std::max(symmetry, std::abs(f(u) - sign * f(-u)) / scale[static_cast<std::size_t>(order)]);
                }
            }
        }
    }
    const double h = 0.05;
    const NodalWeights cubic = nodal_weights(shape(1e-6, h));
    const double lim_a = std::abs(cubic.alpha1 - 0.25);
    const double lim_b = std::abs(cubic.beta1 / (-3.0 / (4.0 * h)) - 1.0);
    const double lim_g = std::abs(cubic.gamma1 / (3.0 / (2.0 * h * h)) - 1.0);
    auto dev = [](double p) { return std::abs(nodal_weights(shape(p, 0.1)).alpha1 - 0.25); };
    const double rate = dev(0.5) / dev(0.25);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const bool pass = nodal <= 1e-10 && junction <= 1e-9 && symmetry <= 1e-11 && lim_a <= 1e-8 && lim_b <= 1e-6 &&
                      lim_g <= 1e-6 && std::abs(rate - 4.0) < 0.05 && seconds < 1.0;
    report(9, pass,
           fmt("nodal %.2g (<= 1e-10), junction %.2g (<= 1e-9), symmetry %.2g, ", nodal, junction, symmetry) +
               fmt("cubic limit |a1-1/4| %.2g, b1 rel %.2g, g1 rel %.2g, ", lim_a, lim_b, lim_g) +
               fmt("rate %.3f (4), %.3f s", rate, seconds));
}

void criterion10() {
    const int n = 4;
    double matrix = 0.0;
    double solve = 0.0;
    for (double p : {1e-4, 1.0, 3.0}) {
        const double h = 0.5;
        const double dt = 0.1;
        const NodalWeights w = nodal_weights(shape(p, h));
        const oracle::DenseSystem ref = oracle::linear_cn_system(n, p, h, dt);
        const StepSystem sys = assemble(WaveState(n), 0.0, dt, w);
        matrix = std::max(matrix, (oracle::to_dense(sys.matrix) - ref.lhs).cwiseAbs().maxCoeff());

        WaveState s(n);
        for (int m = 0; m <= n; ++m) {
            s.delta(m) = std::sin(1.0 + m);
            s.phi(m) = std::cos(2.0 * m);
        }
        apply_value_closure(s, w);
        for (double q : {0.0, 2.0}) {
            const StepSystem full = assemble(s, q, dt, w);
            const std::vector<double> x = solve_step(full);
            const Eigen::VectorXd dense = oracle::to_dense(full.matrix).partialPivLu().solve(
                Eigen::Map<const Eigen::VectorXd>(full.rhs.data(), static_cast<Eigen::Index>(full.rhs.size())));
            for (std::size_t i = 0; i < x.size(); ++i) {
                solve = std::max(solve, std::abs(x[i] - dense(static_cast<Eigen::Index>(i))));
            }
        }
    }
    report(10, matrix <= 1e-12 && solve <= 1e-12,
           fmt("N=4 q=0 matrix vs dense collocation oracle: %.2g (<= 1e-12); banded vs dense solve: %.2g (<= 1e-12)",
               matrix, solve));
}

}  // namespace

int main() {
    soliton_baseline(1, "single-soliton", 0.0045, 0.0070);
    soliton_baseline(2, "single-soliton-coarse", 0.15, 0.23);
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
