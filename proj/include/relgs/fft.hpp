#pragma once

#include "relgs/grid.hpp"

namespace relgs {

/// Unnormalized forward DFT:  w_k = sum_x u_x exp(-i k.x).
/// Parseval under this convention: dx^N * sum|u|^2 = (L^N/n^{2N}) * sum|w|^2.
SpectralField forward_transform(const RealField& u);

/// Inverse DFT scaled by n^{-N}.  The imaginary part of the result measures
/// the Hermitian-symmetry defect of the input; it is discarded when the
/// relative defect is below 1e-8 and rejected as corrupted data above.
RealField inverse_transform(const SpectralField& w);

namespace detail {
/// In-place complex transforms used by the operator routines (no symmetry
/// checks; sign = -1 forward, +1 backward with 1/n^N scaling).
void dft(const Grid& g, std::vector<std::complex<double>>& data, int sign);
}  // namespace detail

}  // namespace relgs
