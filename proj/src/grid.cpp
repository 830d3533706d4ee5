#include "relgs/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relgs {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int dim, int n_per_dim, double box_length)
    : dim_(dim), n_(n_per_dim), L_(box_length) {
    if (dim_ < 1) throw std::invalid_argument("grid: dimension must be >= 1");
    if (!power_of_two(n_) || n_ < 2)
        throw std::invalid_argument("grid: n = " + std::to_string(n_) +
                                    " must be a power of two >= 2");
    if (!(L_ > 0.0)) throw std::invalid_argument("grid: box length must be > 0");
    // cap total storage at 2^28 points (4 GiB of complex doubles)
    std::size_t sz = 1;
    for (int d = 0; d < dim_; ++d) {
        if (sz > (std::size_t{1} << 28) / static_cast<std::size_t>(n_))
            throw std::invalid_argument("grid: n^N = " + std::to_string(n_) + "^" +
                                        std::to_string(dim_) + " exceeds the memory cap");
        sz *= static_cast<std::size_t>(n_);
    }
    size_ = sz;
}

RealField::RealField(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw std::invalid_argument("field: value count does not match grid size");
    check_finite();
}

void RealField::check_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("field: non-finite value");
}

}  // namespace relgs
