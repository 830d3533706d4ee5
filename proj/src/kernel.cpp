#include "relgs/kernel.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "relgs/bessel.hpp"

namespace relgs {

void KernelParams::validate() const {
    // only the operator-level constraints: the kernel is defined for any
    // s in (0,1) regardless of the subcritical window of p
    if (!(model.s > 0.0 && model.s < 1.0))
        throw std::invalid_argument("kernel: s must be in (0,1)");
    if (model.N < 1) throw std::invalid_argument("kernel: N must be >= 1");
    if (!(model.m > 0.0))
        throw std::invalid_argument("kernel: the Bessel kernel requires m > 0");
    if (quad_cutoff_radius < 0.0)
        throw std::invalid_argument("kernel: cutoff radius must be positive");
    if (quad_points < 16)
        throw std::invalid_argument("kernel: quad_points must be >= 16");
}

double kernel_constant(const ModelParams& params) {
    const double s = params.s;
    const int N = params.N;
    return std::pow(2.0, -(N + 2.0 * s) / 2.0 + 1.0) * std::pow(M_PI, -N / 2.0) *
           std::pow(2.0, 2.0 * s) * s * (1.0 - s) / std::tgamma(2.0 - s);
}

double kernel_value(double r, const ModelParams& params) {
    if (!(r > 0.0)) throw std::domain_error("kernel_value: requires r > 0");
    if (!(params.m > 0.0)) throw std::domain_error("kernel_value: requires m > 0");
    const double nu = (params.N + 2.0 * params.s) / 2.0;
    return kernel_constant(params) * std::pow(params.m, nu) * bessel_k(nu, params.m * r) /
           std::pow(r, nu);
}

namespace {

// k(r) -> C_sing r^{-(N+2s)} as r -> 0; the m-dependence cancels in the limit.
double kernel_singular_coef(const ModelParams& params) {
    const double nu = (params.N + 2.0 * params.s) / 2.0;
    return kernel_constant(params) * std::tgamma(nu) * std::pow(2.0, nu - 1.0);
}

// int_{cell} |t|^2 k(|t|) dt over the cubic cell [-dx/2, dx/2]^N around the
// singular point.  The power-law part of the kernel is integrated in closed
// form (evaluating k itself at tanh_sinh abscissas would overflow K_nu); the
// smooth remainder goes through quadrature, and for N >= 2 the corners
// outside the inscribed ball are added by a midpoint micro-grid.
double singular_cell_moment(const ModelParams& params, double dx) {
    boost::math::quadrature::tanh_sinh<double> integ;
    const double h = 0.5 * dx;
    const int N = params.N;
    const double s = params.s;
    const double csing = kernel_singular_coef(params);
    // radial integrand r^{N+1} (k(r) - C_sing r^{-(N+2s)}), vanishing at 0
    auto remainder = [&](double r) {
        if (params.m * r < 1e-8) return 0.0;
        return std::pow(r, N + 1) * kernel_value(r, params) -
               csing * std::pow(r, 1.0 - 2.0 * s);
    };
    const double radial =
        csing * std::pow(h, 2.0 - 2.0 * s) / (2.0 - 2.0 * s) + integ.integrate(remainder, 0.0, h);
    if (N == 1) return 2.0 * radial;

    const double sphere_area = 2.0 * std::pow(M_PI, 0.5 * N) / std::tgamma(0.5 * N);
    double total = sphere_area * radial;
    // corners: micro-grid over the cell, skipping the inscribed ball
    const int mg = 24;
    const double mdx = dx / mg;
    std::vector<int> idx(N, 0);
    for (;;) {
        double r2 = 0.0;
        for (int d = 0; d < N; ++d) {
            const double t = -h + (idx[d] + 0.5) * mdx;
            r2 += t * t;
        }
        const double r = std::sqrt(r2);
        if (r > h) total += r2 * kernel_value(r, params) * std::pow(mdx, N);
        int d = N - 1;
        while (d >= 0 && ++idx[d] == mg) idx[d--] = 0;
        if (d < 0) break;
    }
    return total;
}

}  // namespace

QuadratureResult apply_operator_quadrature(const RealField& u, std::size_t x_index,
                                           const KernelParams& params) {
    params.validate();
    const Grid& g = u.grid;
    if (g.dim() != params.model.N)
        throw std::invalid_argument("kernel: field dimension does not match model N");
    if (x_index >= g.size()) throw std::invalid_argument("kernel: point index out of range");
    const int N = g.dim();
    const int n = g.n();
    const double dx = g.dx();
    const double cutoff = params.cutoff();

    QuadratureResult out;

    // boundary support check: |u| on the index-0 face of each dimension
    double umax = 0.0;
    for (double v : u.values) umax = std::max(umax, std::abs(v));
    double bmax = 0.0;
    std::vector<int> idx(N, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx.data());
        for (int d = 0; d < N; ++d)
            if (idx[d] == 0) {
                bmax = std::max(bmax, std::abs(u.values[i]));
                break;
            }
    }
    out.boundary_ok = bmax <= 1e-8 * umax;

    int K = static_cast<int>(std::floor(cutoff / dx));
    K = std::min({K, n / 2 - 1, params.quad_points / 2});
    if (K < 1) throw std::invalid_argument("kernel: cutoff below one grid cell");

    // kernel values repeat across offsets with equal |d|^2; cache them
    std::unordered_map<long long, double> kcache;
    auto kval = [&](long long d2) {
        auto it = kcache.find(d2);
        if (it != kcache.end()) return it->second;
        const double v = kernel_value(std::sqrt(static_cast<double>(d2)) * dx, params.model);
        kcache.emplace(d2, v);
        return v;
    };

    std::vector<int> cidx(N);
    g.unflatten(x_index, cidx.data());
    const double uc = u.values[x_index];
    const double dV = std::pow(dx, N);
    const double cut2 = cutoff * cutoff / (dx * dx);

    double total = 0.0;
    std::vector<int> off(N, -K);
    std::vector<int> pidx(N);
    for (;;) {
        long long d2 = 0;
        for (int d = 0; d < N; ++d) d2 += static_cast<long long>(off[d]) * off[d];
        if (d2 != 0 && static_cast<double>(d2) <= cut2) {
            for (int d = 0; d < N; ++d) pidx[d] = ((cidx[d] + off[d]) % n + n) % n;
            total += (uc - u.values[g.flatten(pidx.data())]) * kval(d2);
        }
        int d = N - 1;
        while (d >= 0 && ++off[d] > K) off[d--] = -K;
        if (d < 0) break;
    }
    total *= dV;

    // singular cell: (u(x)-u(y)) ~ -(1/2) sum_i d_ii u t_i^2 for y = x + t
    double lap = 0.0;
    for (int d = 0; d < N; ++d) {
        pidx = cidx;
        pidx[d] = (cidx[d] + 1) % n;
        const double up = u.values[g.flatten(pidx.data())];
        pidx[d] = ((cidx[d] - 1) % n + n) % n;
        const double um = u.values[g.flatten(pidx.data())];
        lap += (up - 2.0 * uc + um) / (dx * dx);
    }
    total += -lap / (2.0 * N) * singular_cell_moment(params.model, dx);

    out.value = total;
    return out;
}

}  // namespace relgs
