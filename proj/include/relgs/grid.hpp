#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace relgs {

/// Uniform periodic grid on the box [-L/2, L/2)^N with n points per dimension.
/// n must be a power of two.  Wavenumbers are k_j = 2*pi*j/L with j in the
/// symmetric integer range [-n/2, n/2).
class Grid {
  public:
    Grid(int dim, int n_per_dim, double box_length);

    int dim() const { return dim_; }
    int n() const { return n_; }
    double length() const { return L_; }
    double dx() const { return L_ / n_; }
    std::size_t size() const { return size_; }

    /// Coordinate of grid index i along one dimension: -L/2 + i*dx.
    double coord(int i) const { return -0.5 * L_ + dx() * i; }

    /// Signed integer frequency for DFT index j: j for j <= n/2, j-n above.
    int freq(int j) const { return j <= n_ / 2 ? j : j - n_; }

    /// Wavenumber 2*pi*freq(j)/L.
    double wavenumber(int j) const { return 2.0 * M_PI * freq(j) / L_; }

    /// Decompose a flat row-major index into per-dimension indices.
    void unflatten(std::size_t flat, int* idx) const {
        for (int d = dim_ - 1; d >= 0; --d) {
            idx[d] = static_cast<int>(flat % n_);
            flat /= n_;
        }
    }
    std::size_t flatten(const int* idx) const {
        std::size_t f = 0;
        for (int d = 0; d < dim_; ++d) f = f * n_ + static_cast<std::size_t>(idx[d]);
        return f;
    }

    bool operator==(const Grid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && L_ == o.L_;
    }

  private:
    int dim_;
    int n_;
    double L_;
    std::size_t size_;
};

/// Real-valued samples on a Grid, row-major.
struct RealField {
    Grid grid;
    std::vector<double> values;

    explicit RealField(const Grid& g) : grid(g), values(g.size(), 0.0) {}
    RealField(const Grid& g, std::vector<double> v);

    /// Throws if any value is NaN or infinite.
    void check_finite() const;
};

/// Complex DFT coefficients, same row-major layout as RealField.
struct SpectralField {
    Grid grid;
    std::vector<std::complex<double>> coef;

    explicit SpectralField(const Grid& g) : grid(g), coef(g.size(), {0.0, 0.0}) {}
};

/// Apply fn(flat_index, |k|^2) over every mode of the grid.
template <typename Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
    const int n = g.n();
    std::vector<double> k2(n);
    for (int j = 0; j < n; ++j) {
        const double k = g.wavenumber(j);
        k2[j] = k * k;
    }
    if (g.dim() == 1) {
        for (int j = 0; j < n; ++j) fn(static_cast<std::size_t>(j), k2[j]);
        return;
    }
    std::vector<int> idx(g.dim() - 1, 0);
    std::size_t flat = 0;
    for (;;) {
        double outer = 0.0;
        for (int d = 0; d < g.dim() - 1; ++d) outer += k2[idx[d]];
        for (int j = 0; j < n; ++j, ++flat) fn(flat, outer + k2[j]);
        int d = g.dim() - 2;
        while (d >= 0 && ++idx[d] == n) idx[d--] = 0;
        if (d < 0) break;
    }
}

}  // namespace relgs
