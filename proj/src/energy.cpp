#include "relgs/energy.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "relgs/spectral.hpp"

namespace relgs {

std::string EnergyBreakdown::csv_header() {
    return "hs_term,mass_shift,potential,nonlinear,total,norm_e_sq,nehari";
}

std::string EnergyBreakdown::csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", hs_term,
                  mass_shift, potential, nonlinear, total, norm_e_sq, nehari);
    return buf;
}

EnergyBreakdown energy(const RealField& u, const ModelParams& params) {
    const double hs = hs_norm_sq(u, params);
    const double l2 = l2_norm_sq(u);
    const double lpp = lp_norm_p(u, params.p);
    EnergyBreakdown e;
    e.hs_term = 0.5 * hs;
    e.mass_shift = -0.5 * params.m2s() * l2;
    e.potential = 0.5 * params.mu * l2;
    e.nonlinear = -lpp / params.p;
    e.total = e.hs_term + e.mass_shift + e.potential + e.nonlinear;
    e.norm_e_sq = 2.0 * (e.hs_term + e.mass_shift + e.potential);
    e.nehari = e.norm_e_sq - lpp;
    return e;
}

NehariProjection nehari_project(const RealField& u, const ModelParams& params) {
    const EnergyBreakdown e = energy(u, params);
    const double lpp = e.norm_e_sq - e.nehari;
    if (!(e.norm_e_sq > 0.0) || !(lpp > 0.0))
        throw std::invalid_argument("nehari_project: undefined for a (numerically) zero field");
    const double t = std::pow(e.norm_e_sq / lpp, 1.0 / (params.p - 2.0));
    NehariProjection out{t, u};
    for (double& v : out.projected.values) v *= t;
    return out;
}

double ground_energy(const RealField& u, const ModelParams& params) {
    const EnergyBreakdown e = energy(u, params);
    if (!(std::abs(e.nehari) <= 1e-8 * e.norm_e_sq))
        throw std::invalid_argument("ground_energy: field is not on the Nehari manifold");
    const double half_minus = 0.5 - 1.0 / params.p;
    const double via_lp = half_minus * (e.norm_e_sq - e.nehari);
    const double via_norm = half_minus * e.norm_e_sq;
    if (std::abs(via_lp - via_norm) > 1e-8 * std::abs(via_norm))
        throw std::invalid_argument("ground_energy: on-manifold identities disagree");
    return 0.5 * (via_lp + via_norm);
}

std::pair<double, double> norm_equivalence_constants(const ModelParams& params) {
    if (!(params.m > 0.0))
        throw std::invalid_argument(
            "norm_equivalence_constants: degenerate for m = 0 (use the seminorm split)");
    const double ratio = params.mu / params.m2s();
    return {std::min(1.0, ratio), std::max(1.0, ratio)};
}

}  // namespace relgs
