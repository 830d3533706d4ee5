#include "relgs/extension.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>

#include "relgs/bessel.hpp"

namespace relgs {

namespace {
void require_s(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("extension: s must be in (0,1)");
}
}  // namespace

double profile_theta(double s, double r) {
    require_s(s);
    if (r < 0.0) throw std::domain_error("profile_theta: r must be >= 0");
    if (r == 0.0) return 1.0;
    const double v = std::pow(2.0, 1.0 - s) / std::tgamma(s) * std::pow(r, s) * bessel_k(s, r);
    return v;
}

double profile_theta_prime(double s, double r) {
    require_s(s);
    if (!(r > 0.0)) throw std::domain_error("profile_theta_prime: requires r > 0");
    return -std::pow(2.0, 1.0 - s) / std::tgamma(s) * std::pow(r, s) * bessel_k(1.0 - s, r);
}

double kappa_s(double s) {
    require_s(s);
    return std::pow(2.0, 1.0 - 2.0 * s) * std::tgamma(1.0 - s) / std::tgamma(s);
}

double dn_map_check(double s, double rho) {
    require_s(s);
    if (!(rho > 0.0)) throw std::invalid_argument("dn_map_check: rho must be > 0");
    constexpr int kDepth = 5;
    const double y0 = 0.25 / rho;
    // g(y) = -y^{1-2s} d/dy theta_s(rho y); expansion exponents follow from
    // the small-r series of r^s K_s(r).
    double tab[kDepth + 1][kDepth + 1];
    for (int i = 0; i <= kDepth; ++i) {
        const double y = y0 / static_cast<double>(1 << i);
        tab[0][i] = -std::pow(y, 1.0 - 2.0 * s) * rho * profile_theta_prime(s, rho * y);
    }
    const double exps[kDepth] = {2.0 - 2.0 * s, 2.0, 4.0 - 2.0 * s, 4.0, 6.0 - 2.0 * s};
    for (int lev = 1; lev <= kDepth; ++lev) {
        const double fac = std::pow(2.0, exps[lev - 1]);
        for (int i = 0; i + lev <= kDepth; ++i)
            tab[lev][i] = (fac * tab[lev - 1][i + 1] - tab[lev - 1][i]) / (fac - 1.0);
    }
    const double limit = tab[kDepth][0];
    // the extrapolation must have settled monotonically in the last column
    const double last_step = std::abs(tab[kDepth][0] - tab[kDepth - 1][0]);
    const double prev_step = std::abs(tab[kDepth - 1][0] - tab[kDepth - 2][0]);
    if (!(last_step <= prev_step + 1e-12 * std::abs(limit)))
        throw std::runtime_error("dn_map_check: extrapolation did not converge");
    const double exact = kappa_s(s) * std::pow(rho, 2.0 * s);
    return std::abs(limit - exact) / exact;
}

double extension_energy_per_mode(double s, double rho, double amplitude_sq) {
    require_s(s);
    if (!(rho > 0.0))
        throw std::invalid_argument("extension_energy_per_mode: rho must be > 0");
    // substitute r = rho*y: energy = rho^{2s} a^2 int_0^inf r^{1-2s}(th'^2+th^2) dr
    auto f = [&](double r) {
        const double th = profile_theta(s, r);
        const double tp = profile_theta_prime(s, r);
        return std::pow(r, 1.0 - 2.0 * s) * (tp * tp + th * th);
    };
    boost::math::quadrature::tanh_sinh<double> near;
    boost::math::quadrature::exp_sinh<double> far;
    double e1int, e2int;
    const double v1 = near.integrate(f, 0.0, 1.0, 1e-12, &e1int);
    const double v2 = far.integrate([&](double t) { return f(1.0 + t); }, 1e-12, &e2int);
    if (e1int > 1e-8 || e2int > 1e-8)
        throw std::runtime_error("extension_energy_per_mode: quadrature did not converge");
    return std::pow(rho, 2.0 * s) * amplitude_sq * (v1 + v2);
}

ExtensionProfile extension_ode_solve(double s, double rho, double y_max, int n_y) {
    require_s(s);
    if (!(rho > 0.0)) throw std::invalid_argument("extension_ode_solve: rho must be > 0");
    if (!(y_max * rho >= 20.0))
        throw std::invalid_argument("extension_ode_solve: y_max*rho must be >= 20");
    if (n_y < 200) throw std::invalid_argument("extension_ode_solve: n_y must be >= 200");

    const double a = 1.0 - 2.0 * s;
    ExtensionProfile prof;
    prof.s = s;
    prof.rho = rho;
    prof.y_grid.resize(n_y + 1);
    for (int j = 0; j <= n_y; ++j) {
        const double t = static_cast<double>(j) / n_y;
        prof.y_grid[j] = y_max * t * t * t;  // graded mesh, gamma = 3
    }
    const auto& y = prof.y_grid;

    // conservative scheme for -(y^a v')' + y^a rho^2 v = 0
    const int nu = n_y - 1;
    std::vector<double> lo(nu, 0.0), di(nu, 0.0), up(nu, 0.0), rhs(nu, 0.0);
    for (int j = 1; j < n_y; ++j) {
        const double hm = y[j] - y[j - 1];
        const double hp = y[j + 1] - y[j];
        const double hh = 0.5 * (y[j + 1] - y[j - 1]);
        const double am = std::pow(0.5 * (y[j] + y[j - 1]), a);
        const double ap = std::pow(0.5 * (y[j] + y[j + 1]), a);
        const double A = am / (hm * hh);
        const double C = ap / (hp * hh);
        const int i = j - 1;
        di[i] = A + C + std::pow(y[j], a) * rho * rho;
        if (i > 0)
            lo[i] = -A;
        else
            rhs[i] += A;  // v(0) = 1
        if (i < nu - 1) up[i] = -C;
    }
    // Thomas elimination
    for (int i = 1; i < nu; ++i) {
        if (di[i - 1] == 0.0) throw std::runtime_error("extension_ode_solve: singular system");
        const double w = lo[i] / di[i - 1];
        di[i] -= w * up[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    if (di[nu - 1] == 0.0) throw std::runtime_error("extension_ode_solve: singular system");
    std::vector<double> v(nu);
    v[nu - 1] = rhs[nu - 1] / di[nu - 1];
    for (int i = nu - 2; i >= 0; --i) v[i] = (rhs[i] - up[i] * v[i + 1]) / di[i];

    prof.values.resize(n_y + 1);
    prof.values[0] = 1.0;
    for (int i = 0; i < nu; ++i) prof.values[i + 1] = v[i];
    prof.values[n_y] = 0.0;
    return prof;
}

}  // namespace relgs
