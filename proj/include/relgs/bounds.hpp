#pragma once

#include <string>

#include "relgs/params.hpp"
#include "relgs/solver.hpp"

namespace relgs {

/// Quantities entering the mass-uniform upper bound delta on the ground-state
/// energy, built from the tent profile v0 (1 on |x|<=1, 2-|x| on 1<=|x|<=2)
/// and the extension test function w(x,y) = v0(x)/(y+1), plus the empirical
/// lower-bound witness extracted from computed solutions.
struct BoundsReport {
    double A = 0.0;  // int_0^inf y^{1-2s} (1+y)^{-2} dy = Beta(2-2s, 2s)
    double B = 0.0;  // int_0^inf y^{1-2s} (1+y)^{-4} dy = Beta(2-2s, 2+2s)
    double C = 0.0;  // A*(|grad v0|_2^2 + (mu/2)^{1/s} |v0|_2^2) + B*|v0|_2^2
    double delta = 0.0;
    double tent_l2_sq = 0.0;
    double tent_grad_l2_sq = 0.0;
    double tent_lp_p = 0.0;
    double lower_witness = 0.0;  // (1/2-1/p) C'_emp^{p/(p-2)}; 0 until measured

    static std::string csv_header();
    std::string csv_row() const;
};

struct TentNorms {
    double l2_sq;
    double grad_l2_sq;
    double lp_p;
};

/// Norms of the radial tent profile: closed forms for N = 1, adaptive radial
/// quadrature for N >= 2.
TentNorms tent_norms(int N, double p);

/// (A, B) weight integrals of the extension test function.
std::pair<double, double> weight_integrals(double s);

/// The explicit upper bound
///   delta = (1/2 - 1/p) [C + mu |v0|_2^2]^{p/(p-2)} / (|v0|_p^p)^{2/(p-2)},
/// valid (and independent of m) for 0 <= m < (mu/2)^{1/(2s)}.  Throws when m
/// is outside that range.
BoundsReport upper_bound_delta(const ModelParams& params);

/// Empirical constant of the lower-bound chain on a computed solution:
/// C'_emp = |u|_e^2 / |u|_p^2, returned as (1/2-1/p) C'_emp^{p/(p-2)}.
/// On the Nehari manifold this equals c_m; its positivity and stability
/// across an m sweep are the verifiable content of the lower bound.
double lower_bound_witness(const GroundStateResult& result, const ModelParams& params);

}  // namespace relgs
