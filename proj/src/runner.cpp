#include "relgs/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "relgs/bounds.hpp"
#include "relgs/diagnostics.hpp"
#include "relgs/extension.hpp"
#include "relgs/field_io.hpp"
#include "relgs/kernel.hpp"
#include "relgs/solver.hpp"
#include "relgs/spectral.hpp"

namespace fs = std::filesystem;

namespace relgs {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

const char* kFftNote =
    "# fft convention: unnormalized forward, inverse scaled by n^-N; "
    "spectral sums weighted by L^N/n^2N\n";

void write_preamble(std::ostream& os) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char ts[64];
    std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    os << "# generated " << ts << "\n";
    os << kFftNote;
}

const char* kSummaryHeader =
    "experiment,s,m,mu,p,N,n,L,seed,converged,iterations,residual,c_m,norm_e_sq,nehari,linf,"
    "one_signed,u_min,u_max,radial_deviation,tail_kind,tail_rate,tail_monotone,tail_edge_small,"
    "el_residual_linf,delta,lower_witness";

std::string summary_row(const RunConfig& cfg, const ModelParams& mp, const Grid& grid,
                        const GroundStateResult& r, double delta, double witness) {
    const DiagnosticsReport& d = r.diagnostics;
    std::string row = to_string(cfg.experiment);
    for (double v : {mp.s, mp.m, mp.mu, mp.p}) row += "," + fmt(v);
    row += "," + std::to_string(mp.N) + "," + std::to_string(grid.n()) + "," + fmt(grid.length());
    row += "," + std::to_string(cfg.seed);
    row += std::string(",") + (r.converged ? "1" : "0") + "," + std::to_string(r.iterations);
    row += "," + fmt(r.residual) + "," + fmt(r.c_m) + "," + fmt(r.energy.norm_e_sq) + "," +
           fmt(r.energy.nehari) + "," + fmt(d.linf);
    row += std::string(",") + (d.one_signed ? "1" : "0") + "," + fmt(d.u_min) + "," +
           fmt(d.u_max) + "," + fmt(d.radial_deviation);
    row += "," + d.tail_kind + "," + fmt(d.tail_rate.value_or(std::nan("")));
    row += std::string(",") + (d.tail_monotone ? "1" : "0") + "," +
           (d.tail_edge_small ? "1" : "0");
    row += "," + fmt(d.el_residual_linf) + "," + fmt(delta) + "," + fmt(witness);
    return row;
}

TraceSink make_trace_sink(std::ofstream& os) {
    return [&os](const TraceRow& t) {
        os << t.iter << "," << fmt(t.c_m_estimate) << "," << fmt(t.residual) << ","
           << fmt(t.nehari_residual) << "," << fmt(t.linf) << "\n";
    };
}

void open_trace(std::ofstream& os, const fs::path& path) {
    os.open(path);
    os << kFftNote;
    os << "iter,c_m_estimate,residual,nehari_residual,linf\n";
}

void warn_box(const RunConfig& cfg) {
    if (cfg.box_below_heuristic()) {
        const double base = 40.0 / std::sqrt(cfg.model.mu);
        std::fprintf(stderr,
                     "warning: box L = %g is below the heuristic L >= %g%s; tails may wrap\n",
                     cfg.box_length(), cfg.model.m > 0.0 ? base : 4.0 * base,
                     cfg.model.m > 0.0 ? "" : " (4x for m = 0: algebraic decay)");
    }
}

double delta_or_nan(const ModelParams& mp) {
    const double m_max = std::pow(0.5 * mp.mu, 1.0 / (2.0 * mp.s));
    if (!(mp.m < m_max)) return std::nan("");
    return upper_bound_delta(mp).delta;
}

double witness_or_nan(const GroundStateResult& r, const ModelParams& mp) {
    if (!r.converged) return std::nan("");
    return lower_bound_witness(r, mp);
}

int run_solve(const RunConfig& cfg) {
    warn_box(cfg);
    const Grid grid = cfg.make_grid();
    ModelParams mp = cfg.model;
    SolverConfig sc = cfg.solver;
    sc.seed = cfg.seed;

    std::ofstream trace;
    open_trace(trace, fs::path(cfg.output_dir) / "trace.csv");
    const GroundStateResult r = solve_ground_state(mp, grid, sc, make_trace_sink(trace));
    write_field((fs::path(cfg.output_dir) / "field.txt").string(), r.field);

    std::ofstream sum(fs::path(cfg.output_dir) / "summary.csv");
    write_preamble(sum);
    sum << kSummaryHeader << "\n";
    sum << summary_row(cfg, mp, grid, r, delta_or_nan(mp), witness_or_nan(r, mp)) << "\n";
    return r.converged ? 0 : 1;
}

int run_continuation(const RunConfig& cfg) {
    warn_box(cfg);
    const Grid grid = cfg.make_grid();
    SolverConfig sc = cfg.solver;
    sc.seed = cfg.seed;

    std::ofstream sum(fs::path(cfg.output_dir) / "summary.csv");
    write_preamble(sum);
    sum << kSummaryHeader << "\n";

    bool all_ok = true;
    RealField warm(grid);
    bool have_warm = false;
    for (double m : cfg.m_values) {
        ModelParams mp = cfg.model;
        mp.m = m;
        std::ofstream trace;
        open_trace(trace, fs::path(cfg.output_dir) / ("trace_m=" + fmt6(m) + ".csv"));
        GroundStateResult r = have_warm
                                  ? solve_ground_state(mp, warm, sc, make_trace_sink(trace))
                                  : solve_ground_state(mp, grid, sc, make_trace_sink(trace));
        write_field((fs::path(cfg.output_dir) / ("field_m=" + fmt6(m) + ".txt")).string(),
                    r.field);
        sum << summary_row(cfg, mp, grid, r, delta_or_nan(mp), witness_or_nan(r, mp)) << "\n";
        all_ok = all_ok && r.converged;
        warm = r.field;
        have_warm = true;
    }
    // limit-comparison row: the direct m = 0 problem, warm-started as well
    ModelParams mp0 = cfg.model;
    mp0.m = 0.0;
    std::ofstream trace;
    open_trace(trace, fs::path(cfg.output_dir) / "trace_m=0.csv");
    GroundStateResult r0 = have_warm ? solve_ground_state(mp0, warm, sc, make_trace_sink(trace))
                                     : solve_ground_state(mp0, grid, sc, make_trace_sink(trace));
    write_field((fs::path(cfg.output_dir) / "field_m=0.txt").string(), r0.field);
    sum << summary_row(cfg, mp0, grid, r0, delta_or_nan(mp0), witness_or_nan(r0, mp0)) << "\n";
    all_ok = all_ok && r0.converged;
    return all_ok ? 0 : 1;
}

int run_sweep(const RunConfig& cfg, int jobs) {
    warn_box(cfg);
    const Grid grid = cfg.make_grid();
    SolverConfig sc = cfg.solver;
    sc.seed = cfg.seed;

    const std::size_t nm = cfg.m_values.size();
    std::vector<GroundStateResult> results;
    results.reserve(nm);
    for (std::size_t i = 0; i < nm; ++i) results.emplace_back(GroundStateResult{RealField(grid), {}, 0, 0, 0, {}, false});
    std::vector<std::string> errors(nm);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= nm) return;
            ModelParams mp = cfg.model;
            mp.m = cfg.m_values[i];
            try {
                results[i] = solve_ground_state(mp, grid, sc);
            } catch (const std::exception& ex) {
                errors[i] = ex.what();
            }
        }
    };
    const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(nm)));
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ofstream sum(fs::path(cfg.output_dir) / "summary.csv");
    write_preamble(sum);
    sum << kSummaryHeader << "\n";
    bool all_ok = true;
    for (std::size_t i = 0; i < nm; ++i) {
        ModelParams mp = cfg.model;
        mp.m = cfg.m_values[i];
        if (!errors[i].empty()) {
            std::fprintf(stderr, "sweep m = %g failed: %s\n", mp.m, errors[i].c_str());
            all_ok = false;
            continue;
        }
        const auto sub = fs::path(cfg.output_dir) / ("m=" + fmt6(mp.m));
        fs::create_directories(sub);
        write_field((sub / "field.txt").string(), results[i].field);
        sum << summary_row(cfg, mp, grid, results[i], delta_or_nan(mp),
                           witness_or_nan(results[i], mp))
            << "\n";
        all_ok = all_ok && results[i].converged;
    }
    return all_ok ? 0 : 1;
}

int run_verify_extension(const RunConfig& cfg) {
    std::ofstream csv(fs::path(cfg.output_dir) / "verify_extension.csv");
    const std::string header = "s,rho,dn_rel_err,energy_rel_err";
    std::cout << header << "\n";
    csv << header << "\n";
    bool ok = true;
    for (double s : cfg.ext_s_values) {
        for (double rho : cfg.ext_rho_values) {
            const double dn = dn_map_check(s, rho);
            const double e = extension_energy_per_mode(s, rho, 1.0);
            const double exact = kappa_s(s) * std::pow(rho, 2.0 * s);
            const double erel = std::abs(e - exact) / exact;
            const std::string row =
                fmt6(s) + "," + fmt6(rho) + "," + fmt(dn) + "," + fmt(erel);
            std::cout << row << "\n";
            csv << row << "\n";
            ok = ok && dn < 1e-6 && erel < 1e-6;
        }
    }
    return ok ? 0 : 3;
}

int run_verify_kernel(const RunConfig& cfg) {
    const Grid grid = cfg.make_grid();
    ModelParams mp = cfg.model;
    KernelParams kp{mp, cfg.kernel_cutoff, cfg.kernel_quad_points};
    kp.validate();

    // gaussian test field, width sized to the documented default resolutions
    RealField u(grid);
    std::vector<int> idx(grid.dim());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.unflatten(i, idx.data());
        double r2 = 0.0;
        for (int d = 0; d < grid.dim(); ++d) {
            const double x = grid.coord(idx[d]);
            r2 += x * x;
        }
        u.values[i] = std::exp(-r2 / 8.0);
    }
    const RealField spec = apply_operator(u, mp);
    double smax = 0.0;
    for (double v : spec.values) smax = std::max(smax, std::abs(v));

    std::ofstream csv(fs::path(cfg.output_dir) / "verify_kernel.csv");
    const std::string header = "point,spectral,quadrature,rel_err";
    std::cout << header << "\n";
    csv << header << "\n";
    const int npts = cfg.kernel_num_points;
    double worst = 0.0;
    bool boundary_ok = true;
    for (int j = 0; j < npts; ++j) {
        // sample along the main diagonal around the center
        const int stride = grid.n() / 24;
        const int off = (j - npts / 2) * stride;
        std::vector<int> pt(grid.dim(), 0);
        for (int d = 0; d < grid.dim(); ++d) pt[d] = grid.n() / 2 + off;
        const std::size_t flat = grid.flatten(pt.data());
        const QuadratureResult q = apply_operator_quadrature(u, flat, kp);
        boundary_ok = boundary_ok && q.boundary_ok;
        const double rel = std::abs(q.value - spec.values[flat]) / smax;
        worst = std::max(worst, rel);
        const std::string row = std::to_string(flat) + "," + fmt(spec.values[flat]) + "," +
                                fmt(q.value) + "," + fmt(rel);
        std::cout << row << "\n";
        csv << row << "\n";
    }
    if (!boundary_ok)
        std::fprintf(stderr, "verify-kernel: warning: field not supported away from boundary\n");
    return worst < 1e-3 ? 0 : 3;
}

int run_bounds(const RunConfig& cfg) {
    const BoundsReport r = upper_bound_delta(cfg.model);
    std::printf("%-16s %.12g\n", "A", r.A);
    std::printf("%-16s %.12g\n", "B", r.B);
    std::printf("%-16s %.12g\n", "C", r.C);
    std::printf("%-16s %.12g\n", "delta", r.delta);
    std::printf("%-16s %.12g\n", "tent_l2_sq", r.tent_l2_sq);
    std::printf("%-16s %.12g\n", "tent_grad_l2_sq", r.tent_grad_l2_sq);
    std::printf("%-16s %.12g\n", "tent_lp_p", r.tent_lp_p);
    std::printf("%-16s 0 <= m < %.12g\n", "valid for",
                std::pow(0.5 * cfg.model.mu, 1.0 / (2.0 * cfg.model.s)));
    std::ofstream csv(fs::path(cfg.output_dir) / "bounds.csv");
    csv << BoundsReport::csv_header() << "\n" << r.csv_row() << "\n";
    return 0;
}

}  // namespace

int run(const RunConfig& cfg, int jobs) {
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec || !fs::is_directory(cfg.output_dir))
        throw ConfigError("config: output_dir '" + cfg.output_dir + "' is not writable");
    switch (cfg.experiment) {
        case Experiment::solve: return run_solve(cfg);
        case Experiment::continuation: return run_continuation(cfg);
        case Experiment::sweep: return run_sweep(cfg, jobs);
        case Experiment::verify_extension: return run_verify_extension(cfg);
        case Experiment::verify_kernel: return run_verify_kernel(cfg);
        case Experiment::bounds: return run_bounds(cfg);
    }
    return 1;
}

}  // namespace relgs
