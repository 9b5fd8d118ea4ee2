// lambdacav_main.cpp — command-line front end: simulate, snapshot, verify, preset.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lambdacav/cli.hpp"

namespace cli = lambdacav::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerify = 3;

struct CommonOpts {
    std::string config_path;
    std::string preset_name;
    double gamma = 1.0;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "key = value config file");
    cmd->add_option("--preset", opts.preset_name, "fig-a|fig-b|fig-c|fig-d")
        ->check(CLI::IsMember({"fig-a", "fig-b", "fig-c", "fig-d"}));
    cmd->add_option("--gamma", opts.gamma, "coupling ratio for --preset")
        ->check(CLI::IsMember(std::vector<double>{1.0, 2.0}));
    cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
}

cli::RunConfig resolve_config(const CommonOpts& opts) {
    if (!opts.preset_name.empty()) {
        cli::RunConfig cfg = cli::preset(opts.preset_name, opts.gamma);
        if (!opts.config_path.empty()) {
            throw cli::config_error("use either --config or --preset, not both");
        }
        return cfg;
    }
    if (!opts.config_path.empty()) return cli::load_config(opts.config_path);
    return cli::RunConfig{};  // fig-a defaults
}

int with_output(const CommonOpts& opts, const std::function<void(std::ostream&)>& fn) {
    if (opts.out_path.empty()) {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw cli::config_error("cannot open output file '" + opts.out_path + "'");
    fn(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dynamics and nonclassicality measures of a three-level atom "
                 "coupled to two cavity modes in a Kerr medium"};
    app.require_subcommand(1);

    CommonOpts sim_opts;
    unsigned threads = 0;
    auto* sim = app.add_subcommand("simulate", "sweep the selected measures over tau and emit CSV");
    add_common(sim, sim_opts);
    sim->add_option("--threads", threads, "worker threads (0 = all cores)");

    CommonOpts snap_opts;
    double tau = 0.0;
    std::string kind = "phase";
    auto* snap = app.add_subcommand("snapshot", "emit one distribution at a fixed tau");
    add_common(snap, snap_opts);
    snap->add_option("--tau", tau, "time in units of 1/g")->required();
    snap->add_option("--kind", kind, "phase|position|momentum")
        ->check(CLI::IsMember({"phase", "position", "momentum"}));

    CommonOpts verify_opts;
    bool canary = false;
    auto* ver = app.add_subcommand("verify", "compare closed-form blocks against the RK4 oracle");
    add_common(ver, verify_opts);
    ver->add_flag("--canary", canary, "corrupt one weight first; a healthy build must fail");

    std::string preset_name;
    double preset_gamma = 1.0;
    std::string preset_out;
    bool print = false;
    auto* pre = app.add_subcommand("preset", "show a named preset as a config file");
    pre->add_option("--name", preset_name, "fig-a|fig-b|fig-c|fig-d")
        ->required()
        ->check(CLI::IsMember({"fig-a", "fig-b", "fig-c", "fig-d"}));
    pre->add_option("--gamma", preset_gamma, "coupling ratio")
        ->check(CLI::IsMember(std::vector<double>{1.0, 2.0}));
    pre->add_option("--out", preset_out, "output file (default: stdout)");
    pre->add_flag("--print", print, "write the preset config");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const cli::RunConfig cfg = resolve_config(sim_opts);
            return with_output(sim_opts, [&](std::ostream& out) { cli::simulate(cfg, out, threads); });
        }
        if (snap->parsed()) {
            const cli::RunConfig cfg = resolve_config(snap_opts);
            const auto k = kind == "phase" ? cli::SnapshotKind::phase
                          : kind == "position" ? cli::SnapshotKind::position
                                               : cli::SnapshotKind::momentum;
            return with_output(snap_opts, [&](std::ostream& out) { cli::snapshot(cfg, tau, k, out); });
        }
        if (ver->parsed()) {
            const cli::RunConfig cfg = resolve_config(verify_opts);
            const auto outcome = cli::verify(cfg, canary);
            with_output(verify_opts, [&](std::ostream& out) {
                out << outcome.report;
                out << (outcome.pass ? "verification passed\n" : "verification FAILED\n");
            });
            return outcome.pass ? kExitOk : kExitVerify;
        }
        if (pre->parsed()) {
            const cli::RunConfig cfg = cli::preset(preset_name, preset_gamma);
            if (print) {
                CommonOpts opts;
                opts.out_path = preset_out;
                return with_output(opts, [&](std::ostream& out) { out << cli::format_config(cfg); });
            }
            return kExitOk;
        }
    } catch (const cli::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
