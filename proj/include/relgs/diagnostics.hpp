#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relgs/grid.hpp"
#include "relgs/params.hpp"

namespace relgs {

struct SignInfo {
    bool one_signed = false;
    double min = 0.0;
    double max = 0.0;
};

struct DecayInfo {
    /// Fitted tail rate: log-slope vs r for m > 0, log-log exponent for m = 0.
    /// Empty when the tail window is below round-off ("unresolved").
    std::optional<double> rate;
    std::string kind = "unresolved";  // "exponential", "algebraic", "unresolved"
    bool monotone = false;            // shell maxima nonincreasing over the window
    bool edge_small = false;          // |u| at the window edge < 1e-4 max|u|
};

struct DiagnosticsReport {
    bool one_signed = false;
    double u_min = 0.0;
    double u_max = 0.0;
    double radial_deviation = 0.0;
    double linf = 0.0;
    std::optional<double> tail_rate;
    std::string tail_kind = "unresolved";
    bool tail_monotone = false;
    bool tail_edge_small = false;
    double el_residual_linf = 0.0;

    static std::string csv_header();
    std::string csv_row() const;
};

/// One-sign check: min*max >= -1e-8 * max(|min|,|max|)^2.
SignInfo sign_check(const RealField& u);

/// Circular (torus) centroid of |u|^2, in box coordinates.
std::vector<double> centroid(const RealField& u);

/// Deviation from radial symmetry: recenter at the grid point nearest the
/// centroid, group points by exact squared lattice distance, and return the
/// largest in-group value spread relative to max|u|.
double symmetry_check(const RealField& u);

/// Tail behaviour over the window [0.6, 0.9]*(L/2) in distance from the
/// centroid: shell maxima (shell width = one cell diagonal) must decrease and
/// the edge shell must sit below 1e-4 max|u|; the fitted rate is exponential
/// (m > 0) or algebraic (m = 0).
DecayInfo decay_check(const RealField& u, const ModelParams& params);

/// L-infinity norm of the pointwise equation residual
///   [(-Delta+m^2)^s - m^{2s}] u + mu u - |u|^{p-2} u,
/// evaluated spectrally.
double el_residual(const RealField& u, const ModelParams& params);

DiagnosticsReport run_diagnostics(const RealField& u, const ModelParams& params);

}  // namespace relgs
