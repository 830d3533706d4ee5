#include "relgs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "relgs/field_io.hpp"
#include "relgs/spectral.hpp"

namespace relgs {

void SolverConfig::validate() const {
    if (max_iters < 1) throw std::invalid_argument("solver.max_iters must be >= 1");
    if (!(tol_residual > 0.0)) throw std::invalid_argument("solver.tol_residual must be > 0");
    if (!(tol_energy > 0.0)) throw std::invalid_argument("solver.tol_energy must be > 0");
    if (rearrange_every < 0) throw std::invalid_argument("solver.rearrange_every must be >= 0");
    if (!(damping > 0.0 && damping <= 1.0))
        throw std::invalid_argument("solver.damping must be in (0,1]");
    if (init == InitKind::file && init_file.empty())
        throw std::invalid_argument("solver.init = file requires solver.init_file");
    if (init_noise < 0.0) throw std::invalid_argument("solver.init_noise must be >= 0");
}

RealField gradient(const RealField& u, const ModelParams& params) {
    RealField g = apply_operator(u, params);
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const double v = u.values[i];
        g.values[i] += params.mu * v - std::pow(std::abs(v), params.p - 2.0) * v;
    }
    return g;
}

namespace {

RealField nonlinearity(const RealField& u, double p) {
    RealField f(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double v = u.values[i];
        f.values[i] = std::pow(std::abs(v), p - 2.0) * v;
    }
    return f;
}

RealField initial_field(const Grid& grid, const SolverConfig& config) {
    RealField u(grid);
    const int N = grid.dim();
    std::vector<int> idx(N);
    auto radius = [&](std::size_t i) {
        grid.unflatten(i, idx.data());
        double r2 = 0.0;
        for (int d = 0; d < N; ++d) {
            const double x = grid.coord(idx[d]);
            r2 += x * x;
        }
        return std::sqrt(r2);
    };
    switch (config.init) {
        case InitKind::gaussian: {
            const double w = grid.length() / 20.0;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double r = radius(i);
                u.values[i] = std::exp(-r * r / (w * w));
            }
            break;
        }
        case InitKind::tent: {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double r = radius(i);
                u.values[i] = r <= 1.0 ? 1.0 : (r <= 2.0 ? 2.0 - r : 0.0);
            }
            break;
        }
        case InitKind::file: {
            RealField loaded = read_field(config.init_file);
            if (!(loaded.grid == grid))
                throw std::invalid_argument("solver: init file grid does not match run grid");
            u = std::move(loaded);
            break;
        }
    }
    if (config.init_noise > 0.0) {
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> dist(-config.init_noise, config.init_noise);
        double umax = 0.0;
        for (double v : u.values) umax = std::max(umax, std::abs(v));
        for (double& v : u.values) v += umax * dist(rng);
    }
    return u;
}

}  // namespace

RealField iterate_once(const RealField& u, const ModelParams& params,
                       const SolverConfig& config) {
    RealField step(u.grid);
    if (config.scheme == Scheme::resolvent) {
        step = apply_resolvent(nonlinearity(u, params.p), params);
        if (config.damping < 1.0) {
            for (std::size_t i = 0; i < step.values.size(); ++i)
                step.values[i] =
                    (1.0 - config.damping) * u.values[i] + config.damping * step.values[i];
        }
    } else {
        // damped gradient fallback: u - eta grad I, eta = damping.  Explicit,
        // so eta is limited by the largest symbol value on the grid.
        const RealField g = gradient(u, params);
        step = u;
        for (std::size_t i = 0; i < step.values.size(); ++i)
            step.values[i] -= config.damping * g.values[i];
    }
    return nehari_project(step, params).projected;
}

GroundStateResult solve_ground_state(const ModelParams& params, RealField u0,
                                     const SolverConfig& config, const TraceSink& trace) {
    params.validate();
    config.validate();
    if (u0.grid.dim() != params.N)
        throw std::invalid_argument("solver: grid dimension does not match model N");

    RealField u = nehari_project(u0, params).projected;  // throws for a zero init

    const double half_minus = 0.5 - 1.0 / params.p;
    double c_prev = half_minus * energy(u, params).norm_e_sq;
    double residual = std::numeric_limits<double>::infinity();
    RealField best = u;  // lowest-residual iterate, returned on non-convergence
    double best_residual = residual;
    bool converged = false;
    int it = 0;
    bool warned_energy = false;

    for (it = 1; it <= config.max_iters; ++it) {
        RealField un = iterate_once(u, params, config);
        if (config.rearrange_every > 0 && it % config.rearrange_every == 0)
            un = nehari_project(rearrange_decreasing(un), params).projected;

        const EnergyBreakdown e = energy(un, params);
        if (!std::isfinite(e.norm_e_sq) || !(e.norm_e_sq > 1e-300))
            throw std::runtime_error("solver: iterate collapsed to zero; box or grid too small");
        const double c_now = half_minus * e.norm_e_sq;
        residual = std::sqrt(l2_norm_sq(gradient(un, params))) / std::sqrt(e.norm_e_sq);
        const double dc = std::abs(c_now - c_prev) / std::max(std::abs(c_now), 1e-300);
        // the scheme is observed to be monotone; increases are logged, not fatal
        if (c_now > c_prev * (1.0 + 1e-8) && !warned_energy) {
            std::fprintf(stderr, "solver: warning: energy increased at iteration %d\n", it);
            warned_energy = true;
        }
        if (trace) {
            double linf = 0.0;
            for (double v : un.values) linf = std::max(linf, std::abs(v));
            trace(TraceRow{it, c_now, residual, e.nehari, linf});
        }
        u = std::move(un);
        c_prev = c_now;
        if (residual < best_residual) {
            best_residual = residual;
            best = u;
        }
        if (residual <= config.tol_residual && dc <= config.tol_energy) {
            converged = true;
            break;
        }
    }

    GroundStateResult res{converged ? std::move(u) : std::move(best),
                          {},
                          0.0,
                          std::min(it, config.max_iters),
                          converged ? residual : best_residual,
                          {},
                          converged};
    res.energy = energy(res.field, params);
    res.c_m = converged ? ground_energy(res.field, params) : half_minus * res.energy.norm_e_sq;
    res.diagnostics = run_diagnostics(res.field, params);
    return res;
}

GroundStateResult solve_ground_state(const ModelParams& params, const Grid& grid,
                                     const SolverConfig& config, const TraceSink& trace) {
    config.validate();
    return solve_ground_state(params, initial_field(grid, config), config, trace);
}

RealField rearrange_decreasing(const RealField& u) {
    const Grid& g = u.grid;
    const int N = g.dim();
    const int n = g.n();
    const std::size_t sz = g.size();

    // grid points ordered by squared distance from the box center (index n/2
    // per dimension), ties broken by flat index
    std::vector<long long> r2(sz);
    std::vector<int> idx(N);
    for (std::size_t i = 0; i < sz; ++i) {
        g.unflatten(i, idx.data());
        long long acc = 0;
        for (int d = 0; d < N; ++d) {
            const long long o = idx[d] - n / 2;
            acc += o * o;
        }
        r2[i] = acc;
    }
    std::vector<std::size_t> order(sz);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return r2[a] != r2[b] ? r2[a] < r2[b] : a < b;
    });

    std::vector<double> vals(sz);
    for (std::size_t i = 0; i < sz; ++i) vals[i] = std::abs(u.values[i]);
    std::sort(vals.begin(), vals.end(), std::greater<double>());

    RealField out(g);
    for (std::size_t rank = 0; rank < sz; ++rank) out.values[order[rank]] = vals[rank];
    return out;
}

ContinuationOutcome continuation_m(const ModelParams& params_base,
                                   const std::vector<double>& m_values, const Grid& grid,
                                   const SolverConfig& config) {
    if (m_values.empty()) throw std::invalid_argument("continuation: m_values must be nonempty");
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (!(m_values[i] > 0.0))
            throw std::invalid_argument("continuation: m values must be positive");
        if (i > 0 && !(m_values[i] < m_values[i - 1]))
            throw std::invalid_argument("continuation: m values must be strictly decreasing");
    }
    ContinuationOutcome out;
    for (double m : m_values) {
        ModelParams p = params_base;
        p.m = m;
        try {
            GroundStateResult r =
                out.results.empty()
                    ? solve_ground_state(p, grid, config)
                    : solve_ground_state(p, out.results.back().field, config);
            out.results.push_back(std::move(r));
        } catch (const std::exception& ex) {
            out.error = ex.what();
            return out;
        }
    }
    out.completed = true;
    return out;
}

}  // namespace relgs
