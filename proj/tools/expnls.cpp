// Command-line harness: run / sweep / presets.
//
//   expnls run <config> [--preset name] [--set key=value]... [--out-dir dir]
//   expnls sweep <config> [...same flags]
//   expnls presets
//
// Exit codes: 0 success, 1 config error, 2 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "expnls/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

struct Options {
    std::string config_file;
    std::string preset;
    std::vector<std::string> overrides;
    std::string out_dir;
};

// Preset first, then the file, then --set, then --out-dir.
expnls::Config assemble_config(const Options& opt) {
    expnls::Config cfg;
    if (!opt.preset.empty()) {
        const auto preset = expnls::preset_config(opt.preset);
        if (!preset) {
            throw expnls::ConfigError("unknown preset '" + opt.preset + "' (see 'expnls presets')");
        }
        cfg.merge(*preset);
    }
    if (!opt.config_file.empty()) {
        cfg.merge(expnls::Config::load(opt.config_file));
    }
    for (const std::string& kv : opt.overrides) {
        cfg.assign(kv);
    }
    if (!opt.out_dir.empty()) {
        cfg.set("out_dir", opt.out_dir);
    }
    return cfg;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("config", opt.config_file, "key = value config file");
    cmd->add_option("--preset", opt.preset, "start from a built-in preset");
    cmd->add_option("--set", opt.overrides, "override one key (key=value), repeatable");
    cmd->add_option("--out-dir", opt.out_dir, "output directory");
}

int do_run(const Options& opt) {
    expnls::RunConfig cfg;
    try {
        cfg = expnls::run_config_from(assemble_config(opt));
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    expnls::RunResult result;
    try {
        result = expnls::run(cfg);
    } catch (const expnls::InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    expnls::write_summary(cfg, result);
    std::cout << expnls::summary_text(cfg, result);
    if (result.status != expnls::RunStatus::Ok) {
        std::cerr << "numerical failure at step " << result.failed_step << ": " << result.failure << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

int do_sweep(const Options& opt) {
    expnls::SweepConfig cfg;
    try {
        cfg = expnls::sweep_config_from(assemble_config(opt));
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    const expnls::SweepResult result = expnls::sweep(cfg);
    expnls::write_sweep(cfg, result);
    std::printf("best_p = %.17g\nbest_linf = %.17g\nevaluations = %zu\n", result.best.p, result.best.linf,
                result.evaluations.size());
    if (!std::isfinite(result.best.linf)) {
        std::cerr << "numerical failure: every sweep evaluation failed\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int do_presets() {
    for (const expnls::Preset& p : expnls::presets()) {
        std::printf("%-24s %s\n", p.name.c_str(), p.description.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponential cubic B-spline solver for the cubic NLS equation"};
    app.require_subcommand(1);

    Options run_opt;
    Options sweep_opt;
    CLI::App* run_cmd = app.add_subcommand("run", "run one experiment");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep the tension parameter p");
    app.add_subcommand("presets", "list built-in presets");
    add_common(run_cmd, run_opt);
    add_common(sweep_cmd, sweep_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*run_cmd) {
        if (run_opt.config_file.empty() && run_opt.preset.empty()) {
            std::cerr << "config error: give a config file or --preset\n";
            return kExitConfig;
        }
        return do_run(run_opt);
    }
    if (*sweep_cmd) {
        if (sweep_opt.config_file.empty() && sweep_opt.preset.empty()) {
            std::cerr << "config error: give a config file or --preset\n";
            return kExitConfig;
        }
        return do_sweep(sweep_opt);
    }
    return do_presets();
}
