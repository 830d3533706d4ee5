#include "relgs/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace relgs {

std::string to_string(Experiment e) {
    switch (e) {
        case Experiment::solve: return "solve";
        case Experiment::continuation: return "continuation";
        case Experiment::sweep: return "sweep";
        case Experiment::verify_extension: return "verify-extension";
        case Experiment::verify_kernel: return "verify-kernel";
        case Experiment::bounds: return "bounds";
    }
    return "?";
}

double RunConfig::box_length() const {
    if (grid_L) return *grid_L;
    const double base = 40.0 / std::sqrt(model.mu);
    return model.m > 0.0 ? base : 4.0 * base;
}

bool RunConfig::box_below_heuristic() const {
    const double base = 40.0 / std::sqrt(model.mu);
    return box_length() < (model.m > 0.0 ? base : 4.0 * base);
}

Grid RunConfig::make_grid() const {
    return Grid(model.N, grid_n, box_length());
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse number from '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError("config: key '" + key + "': trailing characters in '" + v + "'");
    return out;
}

long parse_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long out;
    try {
        out = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse integer from '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError("config: key '" + key + "': trailing characters in '" + v + "'");
    return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("config: key '" + key + "': empty element in list '" + v + "'");
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: key '" + key + "': empty list");
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text, std::optional<Experiment> force_experiment) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config: line " + std::to_string(lineno) + ": empty key or value");
        if (kv.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = val;
    }

    RunConfig cfg;
    bool have_n = false;
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("model.s")) cfg.model.s = parse_double("model.s", *v);
    if (auto v = take("model.m")) cfg.model.m = parse_double("model.m", *v);
    if (auto v = take("model.mu")) cfg.model.mu = parse_double("model.mu", *v);
    if (auto v = take("model.p")) cfg.model.p = parse_double("model.p", *v);
    if (auto v = take("model.N")) cfg.model.N = static_cast<int>(parse_int("model.N", *v));
    if (auto v = take("grid.n")) {
        cfg.grid_n = static_cast<int>(parse_int("grid.n", *v));
        have_n = true;
    }
    if (auto v = take("grid.L")) cfg.grid_L = parse_double("grid.L", *v);
    if (auto v = take("solver.max_iters"))
        cfg.solver.max_iters = static_cast<int>(parse_int("solver.max_iters", *v));
    if (auto v = take("solver.tol_residual"))
        cfg.solver.tol_residual = parse_double("solver.tol_residual", *v);
    if (auto v = take("solver.tol_energy"))
        cfg.solver.tol_energy = parse_double("solver.tol_energy", *v);
    if (auto v = take("solver.rearrange_every"))
        cfg.solver.rearrange_every = static_cast<int>(parse_int("solver.rearrange_every", *v));
    if (auto v = take("solver.damping")) cfg.solver.damping = parse_double("solver.damping", *v);
    if (auto v = take("solver.init_noise"))
        cfg.solver.init_noise = parse_double("solver.init_noise", *v);
    if (auto v = take("solver.init_file")) cfg.solver.init_file = *v;
    if (auto v = take("solver.init")) {
        if (*v == "gaussian")
            cfg.solver.init = InitKind::gaussian;
        else if (*v == "tent")
            cfg.solver.init = InitKind::tent;
        else if (*v == "file")
            cfg.solver.init = InitKind::file;
        else
            throw ConfigError("config: solver.init must be gaussian|tent|file, got '" + *v + "'");
    }
    if (auto v = take("solver.scheme")) {
        if (*v == "resolvent")
            cfg.solver.scheme = Scheme::resolvent;
        else if (*v == "gradient")
            cfg.solver.scheme = Scheme::gradient_descent;
        else
            throw ConfigError("config: solver.scheme must be resolvent|gradient, got '" + *v +
                              "'");
    }
    if (auto v = take("experiment")) {
        static const std::map<std::string, Experiment> names{
            {"solve", Experiment::solve},
            {"continuation", Experiment::continuation},
            {"sweep", Experiment::sweep},
            {"verify-extension", Experiment::verify_extension},
            {"verify-kernel", Experiment::verify_kernel},
            {"bounds", Experiment::bounds}};
        auto it = names.find(*v);
        if (it == names.end()) throw ConfigError("config: unknown experiment '" + *v + "'");
        cfg.experiment = it->second;
    }
    if (auto v = take("m_values")) cfg.m_values = parse_list("m_values", *v);
    if (auto v = take("output_dir")) cfg.output_dir = *v;
    if (auto v = take("seed")) cfg.seed = static_cast<std::uint64_t>(parse_int("seed", *v));
    if (auto v = take("extension.s_values")) cfg.ext_s_values = parse_list("extension.s_values", *v);
    if (auto v = take("extension.rho_values"))
        cfg.ext_rho_values = parse_list("extension.rho_values", *v);
    if (auto v = take("kernel.cutoff")) cfg.kernel_cutoff = parse_double("kernel.cutoff", *v);
    if (auto v = take("kernel.quad_points"))
        cfg.kernel_quad_points = static_cast<int>(parse_int("kernel.quad_points", *v));
    if (auto v = take("kernel.num_points"))
        cfg.kernel_num_points = static_cast<int>(parse_int("kernel.num_points", *v));

    if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "'");

    if (force_experiment) cfg.experiment = *force_experiment;

    // required keys and invariants, per experiment
    try {
        cfg.model.validate();
        cfg.solver.validate();
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
    }
    const bool needs_grid = cfg.experiment == Experiment::solve ||
                            cfg.experiment == Experiment::continuation ||
                            cfg.experiment == Experiment::sweep ||
                            cfg.experiment == Experiment::verify_kernel;
    if (needs_grid) {
        if (!have_n) throw ConfigError("config: missing required key 'grid.n'");
        try {
            cfg.make_grid();
        } catch (const std::invalid_argument& ex) {
            throw ConfigError(ex.what());
        }
    }
    if ((cfg.experiment == Experiment::continuation || cfg.experiment == Experiment::sweep) &&
        cfg.m_values.empty())
        throw ConfigError("config: experiment '" + to_string(cfg.experiment) +
                          "' requires 'm_values'");
    if (cfg.experiment == Experiment::verify_kernel && !(cfg.model.m > 0.0))
        throw ConfigError("config: verify-kernel requires model.m > 0");
    return cfg;
}

}  // namespace relgs
