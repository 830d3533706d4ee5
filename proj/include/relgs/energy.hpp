#pragma once

#include <string>

#include "relgs/grid.hpp"
#include "relgs/params.hpp"

namespace relgs {

/// All terms of the functional
///   I_m(u) = 1/2 |u|_{H^s_m}^2 - (m^{2s}/2)|u|_2^2 + (mu/2)|u|_2^2 - (1/p)|u|_p^p
/// together with the equivalent squared norm
///   |u|_{e,m}^2 = |u|_{H^s_m}^2 + (mu - m^{2s})|u|_2^2
/// and the Nehari functional J_m(u) = |u|_{e,m}^2 - |u|_p^p.
struct EnergyBreakdown {
    double hs_term = 0.0;     // 1/2 |u|_{H^s_m}^2
    double mass_shift = 0.0;  // -(m^{2s}/2) |u|_2^2
    double potential = 0.0;   // (mu/2) |u|_2^2
    double nonlinear = 0.0;   // -(1/p) |u|_p^p
    double total = 0.0;
    double norm_e_sq = 0.0;
    double nehari = 0.0;

    static std::string csv_header();
    std::string csv_row() const;
};

EnergyBreakdown energy(const RealField& u, const ModelParams& params);

struct NehariProjection {
    double t_star = 0.0;
    RealField projected;
};

/// Closed-form projection onto the Nehari manifold: t* = (|u|_e^2 / |u|_p^p)^{1/(p-2)}.
/// Throws for a zero field (projection undefined).
NehariProjection nehari_project(const RealField& u, const ModelParams& params);

/// On the manifold, I_m(u) = (1/2 - 1/p)|u|_p^p = (1/2 - 1/p)|u|_e^2; both are
/// evaluated, required to agree to 1e-8 relative, and their mean is returned.
/// Throws if |J_m(u)| > 1e-8 |u|_e^2 (field not on the manifold).
double ground_energy(const RealField& u_on_nehari, const ModelParams& params);

/// Equivalence constants between |.|_e^2 and |.|_{H^s_m}^2:
/// C1 = min(1, mu/m^{2s}), C2 = max(1, mu/m^{2s}).  Requires m > 0.
std::pair<double, double> norm_equivalence_constants(const ModelParams& params);

}  // namespace relgs
