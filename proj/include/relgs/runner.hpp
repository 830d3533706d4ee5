#pragma once

#include "relgs/config.hpp"

namespace relgs {

/// Execute one configured experiment, writing summary.csv, convergence
/// traces, and field dumps under config.output_dir.
///
/// Exit status: 0 success, 1 solver non-convergence, 3 verification failure
/// (config problems throw ConfigError and map to 2 in the CLI).
int run(const RunConfig& config, int jobs = 1);

}  // namespace relgs
