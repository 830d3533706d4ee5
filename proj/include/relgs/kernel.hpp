#pragma once

#include "relgs/grid.hpp"
#include "relgs/params.hpp"

namespace relgs {

/// Settings for the real-space (singular integral) application of the
/// operator.  The kernel formula requires m > 0; the integral is truncated at
/// quad_cutoff_radius (default 15/m, where the exponential tail of K_nu has
/// decayed below round-off relevance) and uses at most quad_points grid
/// offsets per dimension.
struct KernelParams {
    ModelParams model;
    double quad_cutoff_radius = 0.0;  // 0 -> 15/m
    int quad_points = 1 << 14;

    void validate() const;
    double cutoff() const { return quad_cutoff_radius > 0.0 ? quad_cutoff_radius : 15.0 / model.m; }
};

/// The constant c_{N,s} = 2^{-(N+2s)/2+1} pi^{-N/2} 2^{2s} s(1-s)/Gamma(2-s)
/// in front of the singular-integral representation.
double kernel_constant(const ModelParams& params);

/// Radial kernel c_{N,s} m^{(N+2s)/2} K_{(N+2s)/2}(m r) / r^{(N+2s)/2}, r > 0.
double kernel_value(double r, const ModelParams& params);

struct QuadratureResult {
    double value = 0.0;
    /// False if |u| on the box boundary exceeds 1e-8 * max|u| (the principal
    /// value integral then sees the periodic images).
    bool boundary_ok = true;
};

/// Evaluate [(-Delta+m^2)^s - m^{2s}] u at one grid point through the kernel:
///   P.V. integral of (u(x)-u(y)) k(|x-y|) dy
/// by symmetric second differences on the grid, the singular cell replaced by
/// its Taylor model -(lap u / 2N) * int_cell |t|^2 k(|t|) dt.
QuadratureResult apply_operator_quadrature(const RealField& u, std::size_t x_index,
                                           const KernelParams& params);

}  // namespace relgs
