#include "relgs/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "relgs/spectral.hpp"

namespace relgs {

std::string DiagnosticsReport::csv_header() {
    return "one_signed,u_min,u_max,radial_deviation,linf,tail_kind,tail_rate,tail_monotone,"
           "tail_edge_small,el_residual_linf";
}

std::string DiagnosticsReport::csv_row() const {
    char buf[320];
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%s,%.17g,%d,%d,%.17g",
                  one_signed ? 1 : 0, u_min, u_max, radial_deviation, linf, tail_kind.c_str(),
                  tail_rate.value_or(std::nan("")), tail_monotone ? 1 : 0,
                  tail_edge_small ? 1 : 0, el_residual_linf);
    return buf;
}

SignInfo sign_check(const RealField& u) {
    SignInfo info;
    info.min = u.values.empty() ? 0.0 : u.values[0];
    info.max = info.min;
    for (double v : u.values) {
        info.min = std::min(info.min, v);
        info.max = std::max(info.max, v);
    }
    const double scale = std::max(std::abs(info.min), std::abs(info.max));
    info.one_signed = info.min * info.max >= -1e-8 * scale * scale;
    return info;
}

std::vector<double> centroid(const RealField& u) {
    const Grid& g = u.grid;
    const int N = g.dim();
    const int n = g.n();
    // circular mean per dimension, weights |u|^2 (translations are a zero
    // mode on the torus, so a plain first moment would be ill-defined)
    std::vector<double> C(N, 0.0), S(N, 0.0);
    std::vector<int> idx(N);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double w = u.values[i] * u.values[i];
        if (w == 0.0) continue;
        g.unflatten(i, idx.data());
        for (int d = 0; d < N; ++d) {
            const double ang = 2.0 * M_PI * idx[d] / n;
            C[d] += w * std::cos(ang);
            S[d] += w * std::sin(ang);
        }
    }
    std::vector<double> out(N, 0.0);
    for (int d = 0; d < N; ++d) {
        double frac = std::atan2(S[d], C[d]) / (2.0 * M_PI);  // in cycles
        if (frac < 0.0) frac += 1.0;
        out[d] = g.coord(0) + frac * g.length();
    }
    return out;
}

namespace {

std::vector<int> nearest_index(const RealField& u, const std::vector<double>& c) {
    const Grid& g = u.grid;
    std::vector<int> ci(g.dim());
    for (int d = 0; d < g.dim(); ++d) {
        const double t = (c[d] - g.coord(0)) / g.dx();
        ci[d] = static_cast<int>(std::llround(t)) % g.n();
        if (ci[d] < 0) ci[d] += g.n();
    }
    return ci;
}

int wrapped_offset(int i, int c, int n) {
    int off = (i - c) % n;
    if (off < -n / 2) off += n;
    if (off >= n / 2) off -= n;
    return off;
}

}  // namespace

double symmetry_check(const RealField& u) {
    const Grid& g = u.grid;
    const int N = g.dim();
    const int n = g.n();
    double umax = 0.0;
    for (double v : u.values) umax = std::max(umax, std::abs(v));
    if (umax == 0.0) return 0.0;
    const std::vector<int> ci = nearest_index(u, centroid(u));

    std::map<long long, std::pair<double, double>> groups;  // r^2 -> (min, max)
    std::vector<int> idx(N);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx.data());
        long long r2 = 0;
        for (int d = 0; d < N; ++d) {
            const long long o = wrapped_offset(idx[d], ci[d], n);
            r2 += o * o;
        }
        const double v = u.values[i];
        auto [it, fresh] = groups.try_emplace(r2, std::make_pair(v, v));
        if (!fresh) {
            it->second.first = std::min(it->second.first, v);
            it->second.second = std::max(it->second.second, v);
        }
    }
    double dev = 0.0;
    for (const auto& [r2, mm] : groups) dev = std::max(dev, mm.second - mm.first);
    return std::min(dev / umax, 1.0);
}

DecayInfo decay_check(const RealField& u, const ModelParams& params) {
    const Grid& g = u.grid;
    const int N = g.dim();
    const int n = g.n();
    DecayInfo info;
    double umax = 0.0;
    for (double v : u.values) umax = std::max(umax, std::abs(v));
    if (umax == 0.0) return info;

    const std::vector<int> ci = nearest_index(u, centroid(u));
    const double half = 0.5 * g.length();
    const double r_lo = 0.6 * half, r_hi = 0.9 * half;
    const double width = g.dx() * std::sqrt(static_cast<double>(N));
    const int nbins = static_cast<int>((r_hi - r_lo) / width) + 1;
    std::vector<double> shell_max(nbins, 0.0);
    std::vector<int> idx(N);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx.data());
        double r2 = 0.0;
        for (int d = 0; d < N; ++d) {
            const double o = wrapped_offset(idx[d], ci[d], n) * g.dx();
            r2 += o * o;
        }
        const double r = std::sqrt(r2);
        if (r < r_lo || r > r_hi) continue;
        const int b = std::min(static_cast<int>((r - r_lo) / width), nbins - 1);
        shell_max[b] = std::max(shell_max[b], std::abs(u.values[i]));
    }

    double wmax = 0.0;
    for (double v : shell_max) wmax = std::max(wmax, v);
    if (wmax < 1e-14 * umax || nbins < 4) {
        info.kind = "unresolved";
        return info;
    }

    info.monotone = true;
    for (int b = 1; b < nbins; ++b)
        if (shell_max[b] > shell_max[b - 1] + 1e-12 * umax) info.monotone = false;
    info.edge_small = shell_max[nbins - 1] < 1e-4 * umax;

    // least-squares fit over nonempty shells
    std::vector<double> xs, ys;
    for (int b = 0; b < nbins; ++b) {
        if (shell_max[b] <= 0.0) continue;
        const double r = r_lo + (b + 0.5) * width;
        xs.push_back(params.m > 0.0 ? r : std::log(r));
        ys.push_back(std::log(shell_max[b]));
    }
    if (xs.size() >= 4) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double k = xs.size();
        info.rate = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        info.kind = params.m > 0.0 ? "exponential" : "algebraic";
    }
    return info;
}

double el_residual(const RealField& u, const ModelParams& params) {
    const RealField Au = apply_operator(u, params);
    double linf = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double v = u.values[i];
        const double nl = std::pow(std::abs(v), params.p - 2.0) * v;
        linf = std::max(linf, std::abs(Au.values[i] + params.mu * v - nl));
    }
    return linf;
}

DiagnosticsReport run_diagnostics(const RealField& u, const ModelParams& params) {
    DiagnosticsReport rep;
    const SignInfo si = sign_check(u);
    rep.one_signed = si.one_signed;
    rep.u_min = si.min;
    rep.u_max = si.max;
    rep.radial_deviation = symmetry_check(u);
    rep.linf = lp_norm(u, std::numeric_limits<double>::infinity());
    const DecayInfo di = decay_check(u, params);
    rep.tail_rate = di.rate;
    rep.tail_kind = di.kind;
    rep.tail_monotone = di.monotone;
    rep.tail_edge_small = di.edge_small;
    rep.el_residual_linf = el_residual(u, params);
    return rep;
}

}  // namespace relgs
