// xjac: Jacobian enumeration, extractor statistics and character-sum checks.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xjac/app/commands.hpp"
#include "xjac/app/config.hpp"

namespace {

using xjac::app::ExperimentConfig;

// Raw flag text; applied over the config file only when given.
struct Flags {
    std::string config, p, n, modulus, f, c, extractor, k, mode, out, format, cache_dir;
    std::uint64_t samples = 0, seed = 0, budget = 0, L = 0;
    unsigned jobs = 0;
    int degree = 0;
    bool timing = false;
};

void add_flags(CLI::App* cmd, Flags& fl) {
    cmd->add_option("--config", fl.config, "JSON config file; flags override its values");
    cmd->add_option("--p", fl.p, "odd prime (sweep/charsum: comma list)");
    cmd->add_option("--n", fl.n, "extension degree (sweep/charsum: comma list)");
    cmd->add_option("--modulus", fl.modulus, "irreducible modulus coefficients over F_p, constant first");
    cmd->add_option("--f", fl.f, "curve coefficients as packed indices, constant first; a template with c; or auto");
    cmd->add_option("--c", fl.c, "template search start (one value, or one per --p)");
    cmd->add_option("--extractor", fl.extractor, "sum|prod|sk|pk (sweep: comma list)");
    cmd->add_option("--k", fl.k, "output length (sweep: comma list)");
    cmd->add_option("--mode", fl.mode, "extract-sd/sweep: exact|montecarlo; charsum: orthogonality|mordell|winterhof|interval");
    cmd->add_option("--samples", fl.samples, "Monte-Carlo sample count");
    cmd->add_option("--seed", fl.seed, "random seed");
    cmd->add_option("--degree", fl.degree, "charsum mordell: polynomial degree");
    cmd->add_option("--L", fl.L, "charsum interval: interval length (default: every L in [1, p])");
    cmd->add_option("--out", fl.out, "output file (default: stdout)");
    cmd->add_option("--format", fl.format, "csv|json");
    cmd->add_option("--cache-dir", fl.cache_dir, "Jacobian cache directory (default: $XJAC_CACHE_DIR)");
    cmd->add_option("--budget", fl.budget, "enumeration budget");
    cmd->add_option("--jobs", fl.jobs, "worker threads");
    cmd->add_flag("--timing", fl.timing, "record wall-clock runtime_ms (otherwise 0)");
}

ExperimentConfig build_config(const CLI::App* cmd, const Flags& fl) {
    ExperimentConfig cfg = fl.config.empty() ? ExperimentConfig{} : xjac::app::load_config_file(fl.config);
    const auto given = [&](const char* name) { return cmd->get_option(name)->count() > 0; };
    if (given("--p")) cfg.p = xjac::app::parse_uint_list(fl.p, "p");
    if (given("--n")) {
        const auto v = xjac::app::parse_uint_list(fl.n, "n");
        cfg.n.assign(v.begin(), v.end());
    }
    if (given("--modulus")) cfg.modulus = fl.modulus;
    if (given("--f")) cfg.f = fl.f;
    if (given("--c")) cfg.c = xjac::app::parse_uint_list(fl.c, "c");
    if (given("--extractor")) cfg.extractor = xjac::app::parse_name_list(fl.extractor);
    if (given("--k")) {
        const auto v = xjac::app::parse_uint_list(fl.k, "k");
        cfg.k.assign(v.begin(), v.end());
    }
    if (given("--mode")) cfg.mode = fl.mode;
    if (given("--samples")) cfg.samples = fl.samples;
    if (given("--seed")) cfg.seed = fl.seed;
    if (given("--degree")) cfg.degree = fl.degree;
    if (given("--L")) cfg.L = fl.L;
    if (given("--out")) cfg.out = fl.out;
    if (given("--format")) cfg.format = fl.format;
    if (given("--cache-dir")) cfg.cache_dir = fl.cache_dir;
    if (given("--budget")) cfg.budget = fl.budget;
    if (given("--jobs")) cfg.jobs = fl.jobs;
    if (fl.timing) cfg.timing = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-2 Jacobian extractor experiments"};
    app.require_subcommand(1);
    Flags flags;
    const char* commands[][2] = {
        {"jacobian", "enumerate points and the Jacobian, check Weil bounds and group laws"},
        {"extract-sd", "statistical distance of one extractor from uniform"},
        {"charsum", "character-sum laws and bounds"},
        {"sweep", "extractor statistics over a parameter grid"},
    };
    for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return xjac::app::kExitConfig;
    }

    const CLI::App* cmd = app.get_subcommands().front();
    try {
        const ExperimentConfig cfg = build_config(cmd, flags);
        return xjac::app::run_command(cmd->get_name(), cfg, std::cout, std::cerr);
    } catch (const xjac::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return xjac::app::exit_code_for(e.code());
    }
}
