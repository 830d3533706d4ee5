#include "relgs/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace relgs {

namespace {

// FFTW plan creation is not thread safe; executing a plan on new arrays is.
// Plans are created once per (dim, n) with FFTW_ESTIMATE | FFTW_UNALIGNED so
// they are deterministic and array-agnostic.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    fftw_plan get(int dim, int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_tuple(dim, n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::size_t sz = 1;
        for (int d = 0; d < dim; ++d) sz *= static_cast<std::size_t>(n);
        std::vector<std::complex<double>> buf(sz);
        std::vector<int> dims(dim, n);
        fftw_plan p = fftw_plan_dft(dim, dims.data(),
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fft: plan creation failed");
        plans_[key] = p;
        return p;
    }

  private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [key, p] : plans_) fftw_destroy_plan(p);
        fftw_cleanup();
    }
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

}  // namespace

namespace detail {

void dft(const Grid& g, std::vector<std::complex<double>>& data, int sign) {
    fftw_plan p = PlanCache::instance().get(g.dim(), g.n(), sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
    if (sign == FFTW_BACKWARD) {
        const double scale = 1.0 / static_cast<double>(g.size());
        for (auto& z : data) z *= scale;
    }
}

}  // namespace detail

SpectralField forward_transform(const RealField& u) {
    SpectralField w(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) w.coef[i] = u.values[i];
    detail::dft(u.grid, w.coef, FFTW_FORWARD);
    return w;
}

RealField inverse_transform(const SpectralField& w) {
    std::vector<std::complex<double>> buf = w.coef;
    detail::dft(w.grid, buf, FFTW_BACKWARD);
    double max_re = 0.0, max_im = 0.0;
    for (const auto& z : buf) {
        max_re = std::max(max_re, std::abs(z.real()));
        max_im = std::max(max_im, std::abs(z.imag()));
    }
    if (max_im > 1e-8 * std::max(max_re, 1e-300))
        throw std::runtime_error(
            "inverse_transform: Hermitian symmetry violated; spectral data corrupted");
    RealField u(w.grid);
    for (std::size_t i = 0; i < buf.size(); ++i) u.values[i] = buf[i].real();
    return u;
}

}  // namespace relgs
