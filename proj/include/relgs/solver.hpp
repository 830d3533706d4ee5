#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relgs/diagnostics.hpp"
#include "relgs/energy.hpp"
#include "relgs/grid.hpp"
#include "relgs/params.hpp"

namespace relgs {

enum class InitKind { gaussian, tent, file };
enum class Scheme { resolvent, gradient_descent };

struct SolverConfig {
    int max_iters = 500;
    double tol_residual = 1e-8;  // |grad I|_2 / |u|_e
    double tol_energy = 1e-10;   // relative energy change per iteration
    int rearrange_every = 0;     // 0 disables interleaved rearrangement
    InitKind init = InitKind::gaussian;
    std::string init_file;       // used when init == file
    double init_noise = 0.0;     // seeded uniform noise amplitude on the init
    std::uint64_t seed = 0;
    double damping = 1.0;        // in (0, 1]
    Scheme scheme = Scheme::resolvent;

    void validate() const;
};

struct GroundStateResult {
    RealField field;
    EnergyBreakdown energy;
    double c_m = 0.0;
    int iterations = 0;
    double residual = 0.0;
    DiagnosticsReport diagnostics;
    bool converged = false;
};

struct TraceRow {
    int iter;
    double c_m_estimate;
    double residual;
    double nehari_residual;
    double linf;
};
using TraceSink = std::function<void(const TraceRow&)>;

/// L^2 gradient of I_m:  [(-Delta+m^2)^s - m^{2s} + mu] u - |u|^{p-2} u.
RealField gradient(const RealField& u, const ModelParams& params);

/// One step of the normalized fixed-point scheme: resolvent of the
/// nonlinearity (or a damped gradient step), re-projected onto the Nehari
/// manifold.  The output is on the manifold by construction.
RealField iterate_once(const RealField& u, const ModelParams& params, const SolverConfig& config);

/// Minimize I_m over the Nehari manifold by the normalized fixed-point
/// iteration.  Throws on a zero/collapsing iterate (box or grid too small);
/// returns converged=false with the best iterate after max_iters otherwise.
GroundStateResult solve_ground_state(const ModelParams& params, const Grid& grid,
                                     const SolverConfig& config, const TraceSink& trace = {});

/// Same, starting from an explicit initial field (warm start).
GroundStateResult solve_ground_state(const ModelParams& params, RealField u0,
                                     const SolverConfig& config, const TraceSink& trace = {});

/// Symmetric-decreasing rearrangement on the grid: the values of |u| are
/// assigned in descending order to grid points sorted by distance from the
/// box center (ties broken by flat index, so the result is deterministic).
/// Every L^q norm is preserved exactly as a value multiset.
RealField rearrange_decreasing(const RealField& u);

struct ContinuationOutcome {
    std::vector<GroundStateResult> results;  // one per attempted m value
    bool completed = false;
    std::string error;
};

/// Solve along a decreasing sequence of masses, warm-starting each solve from
/// the previous field.  A failure aborts the sweep; prior results are kept.
ContinuationOutcome continuation_m(const ModelParams& params_base,
                                   const std::vector<double>& m_values, const Grid& grid,
                                   const SolverConfig& config);

}  // namespace relgs
