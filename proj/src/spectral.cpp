#include "relgs/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relgs/fft.hpp"

namespace relgs {

double symbol(double k_sq, const ModelParams& params) {
    if (k_sq < 0.0) throw std::domain_error("symbol: k_sq must be >= 0");
    return std::pow(k_sq + params.m * params.m, params.s);
}

namespace {

// Multiply the spectrum of u by fn(|k|^2) and transform back.
template <typename Fn>
RealField apply_multiplier(const RealField& u, Fn&& fn) {
    std::vector<std::complex<double>> buf(u.values.begin(), u.values.end());
    detail::dft(u.grid, buf, FFTW_FORWARD);
    for_each_mode(u.grid, [&](std::size_t i, double k2) { buf[i] *= fn(k2); });
    detail::dft(u.grid, buf, FFTW_BACKWARD);
    RealField out(u.grid);
    for (std::size_t i = 0; i < buf.size(); ++i) out.values[i] = buf[i].real();
    return out;
}

double spectral_weight(const Grid& g) {
    // dx^N / n^N: turns sum|Fu|^2 into the dx^N-weighted real-space sum.
    return std::pow(g.dx(), g.dim()) / static_cast<double>(g.size());
}

}  // namespace

RealField apply_operator(const RealField& u, const ModelParams& params) {
    const double m2s = params.m2s();
    return apply_multiplier(u, [&](double k2) { return symbol(k2, params) - m2s; });
}

RealField apply_resolvent(const RealField& f, const ModelParams& params) {
    if (!(params.mu > 0.0)) throw std::invalid_argument("apply_resolvent: mu must be > 0");
    const double m2s = params.m2s();
    const double mu = params.mu;
    return apply_multiplier(f, [&](double k2) { return 1.0 / (symbol(k2, params) - m2s + mu); });
}

double hs_norm_sq(const RealField& u, const ModelParams& params) {
    std::vector<std::complex<double>> buf(u.values.begin(), u.values.end());
    detail::dft(u.grid, buf, FFTW_FORWARD);
    const double w = spectral_weight(u.grid);
    double acc = 0.0;
    for_each_mode(u.grid, [&](std::size_t i, double k2) {
        acc += symbol(k2, params) * std::norm(buf[i]);
    });
    return w * acc;
}

double lp_norm(const RealField& u, double q) {
    if (std::isinf(q)) {
        double mx = 0.0;
        for (double v : u.values) mx = std::max(mx, std::abs(v));
        return mx;
    }
    if (!(q >= 1.0)) throw std::invalid_argument("lp_norm: q must be >= 1 or infinity");
    const double dV = std::pow(u.grid.dx(), u.grid.dim());
    double acc = 0.0;
    for (double v : u.values) acc += std::pow(std::abs(v), q);
    return std::pow(dV * acc, 1.0 / q);
}

double l2_norm_sq(const RealField& u) {
    const double dV = std::pow(u.grid.dx(), u.grid.dim());
    double acc = 0.0;
    for (double v : u.values) acc += v * v;
    return dV * acc;
}

double l2_inner(const RealField& a, const RealField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("l2_inner: grid mismatch");
    const double dV = std::pow(a.grid.dx(), a.grid.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) acc += a.values[i] * b.values[i];
    return dV * acc;
}

double lp_norm_p(const RealField& u, double p) {
    const double dV = std::pow(u.grid.dx(), u.grid.dim());
    double acc = 0.0;
    for (double v : u.values) acc += std::pow(std::abs(v), p);
    return dV * acc;
}

double l2_norm_sq_spectral(const RealField& u) {
    std::vector<std::complex<double>> buf(u.values.begin(), u.values.end());
    detail::dft(u.grid, buf, FFTW_FORWARD);
    double acc = 0.0;
    for (const auto& z : buf) acc += std::norm(z);
    return spectral_weight(u.grid) * acc;
}

}  // namespace relgs
