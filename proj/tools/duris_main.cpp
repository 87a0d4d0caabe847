#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "duris/emit.hpp"
#include "duris/sweep.hpp"
#include "duris/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct Options {
    std::string config_path;
    std::string preset;
    std::string format = "csv";
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
};

int run_simulate(const Options& opt) {
    using namespace duris;

    sweep::SweepResult result;
    if (!opt.preset.empty()) {
        if (!sweep::is_preset(opt.preset)) {
            std::fprintf(stderr, "error: unknown preset '%s'\n", opt.preset.c_str());
            return kExitConfig;
        }
        result = sweep::run_preset(opt.preset, opt.seed, opt.trials);
    } else if (!opt.config_path.empty()) {
        auto spec = sweep::sweep_from_config_text(io::read_file(opt.config_path));
        if (opt.seed) spec.plan.master_seed = *opt.seed;
        if (opt.trials) spec.plan.n_trials = *opt.trials;
        result = sweep::run_sweep(spec);
    } else {
        std::fprintf(stderr, "error: need --config or --preset\n");
        return kExitConfig;
    }

    const auto format = io::format_from_string(opt.format);
    std::string path = opt.out_path;
    if (path.empty()) {
        const std::string stem = opt.preset.empty() ? "sweep" : opt.preset;
        path = stem + "." + opt.format;
    }
    io::write_file(path, io::render(result, format));
    std::printf("wrote %s (%zu rows, seed %llu)\n", path.c_str(), result.rows.size(),
                static_cast<unsigned long long>(result.master_seed));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-RIS received-SSK link performance tool"};
    app.set_version_flag("--version", duris::kVersion);
    app.require_subcommand(1);

    Options opt;
    auto* simulate = app.add_subcommand("simulate", "run a sweep and emit results");
    simulate->add_option("--config", opt.config_path, "scenario JSON (with a 'sweep' section)");
    simulate->add_option("--preset", opt.preset, "figure preset: fig1a|fig1b|fig2a|fig2b|fig4");
    simulate->add_option("--format", opt.format, "output format: csv|json|svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    simulate->add_option("--out", opt.out_path, "output path (default <preset>.<format>)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = simulate->add_option("--seed", seed_value, "master seed override");
    std::uint64_t trials_value = 0;
    auto* trials_opt = simulate->add_option("--trials", trials_value, "trial count override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (seed_opt->count() > 0) opt.seed = seed_value;
    if (trials_opt->count() > 0) opt.trials = trials_value;

    try {
        return run_simulate(opt);
    } catch (const duris::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const duris::NumericError& e) {
        std::fprintf(stderr, "numerical convergence failure: %s (achieved %.3g)\n", e.what(),
                     e.achieved_error);
        return kExitNumeric;
    } catch (const duris::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
}
