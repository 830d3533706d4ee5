#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "relgs/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw relgs::ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relgs: ground states of [(-Delta+m^2)^s - m^2s] u + mu u = |u|^(p-2) u"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    long long seed = -1;
    int jobs = 1;

    const std::vector<std::tuple<std::string, relgs::Experiment, std::string>> subs = {
        {"solve", relgs::Experiment::solve, "compute one ground state"},
        {"continuation", relgs::Experiment::continuation,
         "solve along decreasing masses with warm starts, plus the m = 0 limit"},
        {"sweep", relgs::Experiment::sweep, "independent solves over m_values (parallel)"},
        {"verify-extension", relgs::Experiment::verify_extension,
         "check the extension-map identities over (s, rho)"},
        {"verify-kernel", relgs::Experiment::verify_kernel,
         "compare the spectral and singular-integral operator paths"},
        {"bounds", relgs::Experiment::bounds, "print the energy bound report"},
    };
    for (const auto& [name, exp, desc] : subs) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config_path, "path to a key = value config file")->required();
        sub->add_option("--output", output_dir, "output directory (overrides output_dir)");
        sub->add_option("--seed", seed, "random seed for initialization noise");
        sub->add_option("--jobs", jobs, "parallel workers for sweep jobs");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        std::optional<relgs::Experiment> forced;
        for (const auto& [name, exp, desc] : subs)
            if (app.get_subcommand(name)->parsed()) forced = exp;
        relgs::RunConfig cfg = relgs::parse_config(slurp(config_path), forced);
        if (!output_dir.empty()) cfg.output_dir = output_dir;
        if (seed >= 0) {
            cfg.seed = static_cast<std::uint64_t>(seed);
            cfg.solver.seed = cfg.seed;
        }
        return relgs::run(cfg, jobs);
    } catch (const relgs::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
