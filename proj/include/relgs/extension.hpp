#pragma once

#include <vector>

namespace relgs {

/// Profile of one Fourier mode of the degenerate-elliptic extension: the
/// solution of -(y^a v')' + y^a rho^2 v = 0 on (0, inf), a = 1-2s, with
/// v(0) = 1 and decay at infinity, sampled as v(y_j) = theta_s(rho y_j).
struct ExtensionProfile {
    double s = 0.5;
    double rho = 1.0;
    std::vector<double> y_grid;
    std::vector<double> values;
};

/// theta_s(r) = (2^{1-s}/Gamma(s)) r^s K_s(r); theta_s(0) = 1 and
/// theta_{1/2}(r) = exp(-r).
double profile_theta(double s, double r);

/// d theta_s / dr = -(2^{1-s}/Gamma(s)) r^s K_{1-s}(r).
double profile_theta_prime(double s, double r);

/// Trace constant kappa_s = 2^{1-2s} Gamma(1-s)/Gamma(s); kappa_{1/2} = 1.
double kappa_s(double s);

/// Verify the Dirichlet-Neumann limit -lim_{y->0} y^{1-2s} d/dy theta_s(rho y)
/// = kappa_s rho^{2s}.  The limit is taken by generalized Richardson
/// extrapolation on a ratio-2 geometric y-sequence, eliminating the known
/// error exponents {2-2s, 2, 4-2s, 4, 6-2s}.  Returns the relative error
/// against kappa_s rho^{2s}; throws if the extrapolation does not settle.
double dn_map_check(double s, double rho);

/// int_0^inf y^{1-2s} (|d_y V|^2 + rho^2 V^2) dy for V = a * theta_s(rho y),
/// a^2 = amplitude_sq.  Equals kappa_s rho^{2s} amplitude_sq (the equality
/// case of the trace inequality).  Adaptive quadrature; throws if the
/// quadrature error estimate is out of tolerance.
double extension_energy_per_mode(double s, double rho, double amplitude_sq);

/// Independent finite-difference oracle for the mode profile: conservative
/// second-order scheme on the graded mesh y_j = y_max (j/n_y)^3 with
/// v(0) = 1, v(y_max) = 0.  Requires y_max*rho >= 20 and n_y >= 200.
ExtensionProfile extension_ode_solve(double s, double rho, double y_max, int n_y);

}  // namespace relgs
