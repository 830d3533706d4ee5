#include "relgs/bounds.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "relgs/spectral.hpp"

namespace relgs {

std::string BoundsReport::csv_header() {
    return "A,B,C,delta,tent_l2_sq,tent_grad_l2_sq,tent_lp_p,lower_witness";
}

std::string BoundsReport::csv_row() const {
    char buf[320];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", A, B, C,
                  delta, tent_l2_sq, tent_grad_l2_sq, tent_lp_p, lower_witness);
    return buf;
}

TentNorms tent_norms(int N, double p) {
    if (N < 1) throw std::invalid_argument("tent_norms: N must be >= 1");
    if (!(p > 2.0)) throw std::invalid_argument("tent_norms: p must be > 2");
    if (N == 1) {
        return TentNorms{8.0 / 3.0, 2.0, 2.0 + 2.0 / (p + 1.0)};
    }
    const double area = 2.0 * std::pow(M_PI, 0.5 * N) / std::tgamma(0.5 * N);
    boost::math::quadrature::tanh_sinh<double> integ;
    auto radial = [&](auto&& f) {
        // v0 = 1 on [0,1], 2-r on [1,2]
        const double inner =
            integ.integrate([&](double r) { return f(1.0) * std::pow(r, N - 1); }, 0.0, 1.0);
        const double outer = integ.integrate(
            [&](double r) { return f(2.0 - r) * std::pow(r, N - 1); }, 1.0, 2.0);
        return area * (inner + outer);
    };
    TentNorms t;
    t.l2_sq = radial([](double v) { return v * v; });
    t.lp_p = radial([&](double v) { return std::pow(v, p); });
    // |grad v0| = 1 on the annulus 1 < r < 2, 0 elsewhere
    t.grad_l2_sq = area * (std::pow(2.0, N) - 1.0) / N;
    return t;
}

std::pair<double, double> weight_integrals(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("weight_integrals: s must be in (0,1)");
    return {std::beta(2.0 - 2.0 * s, 2.0 * s), std::beta(2.0 - 2.0 * s, 2.0 + 2.0 * s)};
}

BoundsReport upper_bound_delta(const ModelParams& params) {
    params.validate();
    const double m_max = std::pow(0.5 * params.mu, 1.0 / (2.0 * params.s));
    if (!(params.m < m_max))
        throw std::invalid_argument("upper_bound_delta: requires 0 <= m < (mu/2)^(1/(2s)) = " +
                                    std::to_string(m_max));
    BoundsReport r;
    std::tie(r.A, r.B) = weight_integrals(params.s);
    const TentNorms t = tent_norms(params.N, params.p);
    r.tent_l2_sq = t.l2_sq;
    r.tent_grad_l2_sq = t.grad_l2_sq;
    r.tent_lp_p = t.lp_p;
    r.C = r.A * (t.grad_l2_sq + std::pow(0.5 * params.mu, 1.0 / params.s) * t.l2_sq) +
          r.B * t.l2_sq;
    const double p = params.p;
    r.delta = (0.5 - 1.0 / p) * std::pow(r.C + params.mu * t.l2_sq, p / (p - 2.0)) /
              std::pow(t.lp_p, 2.0 / (p - 2.0));
    return r;
}

double lower_bound_witness(const GroundStateResult& result, const ModelParams& params) {
    if (!result.converged)
        throw std::invalid_argument("lower_bound_witness: requires a converged result");
    const EnergyBreakdown& e = result.energy;
    if (!(std::abs(e.nehari) <= 1e-8 * e.norm_e_sq))
        throw std::invalid_argument("lower_bound_witness: field is not on the Nehari manifold");
    const double p = params.p;
    const double lp = lp_norm(result.field, p);
    const double c_emp = e.norm_e_sq / (lp * lp);
    return (0.5 - 1.0 / p) * std::pow(c_emp, p / (p - 2.0));
}

}  // namespace relgs
