#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relgs/params.hpp"
#include "relgs/solver.hpp"

namespace relgs {

enum class Experiment { solve, continuation, sweep, verify_extension, verify_kernel, bounds };

std::string to_string(Experiment e);

/// Configuration error (malformed text, unknown or missing keys, invariant
/// violations).  Maps to exit code 2 in the CLI.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    ModelParams model;
    int grid_n = 0;                  // grid.n (required for solve-type runs)
    std::optional<double> grid_L;    // grid.L; defaulted from the box heuristic
    SolverConfig solver;
    Experiment experiment = Experiment::solve;
    std::vector<double> m_values;
    std::string output_dir = "out";
    std::uint64_t seed = 0;

    // verify-extension sweep; defaults cover the standard identity grid
    std::vector<double> ext_s_values{0.25, 0.5, 0.75};
    std::vector<double> ext_rho_values{0.5, 1.0, 5.0};

    // verify-kernel settings
    double kernel_cutoff = 0.0;  // 0 -> 15/m
    int kernel_quad_points = 1 << 14;
    int kernel_num_points = 10;

    /// Box length: configured value, or 40/sqrt(mu) (4x that for m = 0, where
    /// the decay is only algebraic).
    double box_length() const;
    /// True when the configured box is smaller than the heuristic.
    bool box_below_heuristic() const;

    Grid make_grid() const;
};

/// Parse the flat `key = value` format (one pair per line, '#' comments,
/// keys namespaced as model.s, grid.n, solver.tol_residual, ...).  Unknown
/// keys, missing required keys, and invariant violations throw ConfigError
/// naming the key and the constraint.  force_experiment (the CLI subcommand)
/// takes precedence over the config's own experiment key and participates in
/// the per-experiment validation.
RunConfig parse_config(const std::string& text,
                       std::optional<Experiment> force_experiment = std::nullopt);

}  // namespace relgs
