#pragma once

#include "relgs/grid.hpp"
#include "relgs/params.hpp"

namespace relgs {

/// The Fourier symbol (|k|^2 + m^2)^s evaluated at squared wavenumber k_sq.
double symbol(double k_sq, const ModelParams& params);

/// Apply [(-Delta + m^2)^s - m^{2s}]: multiply by symbol(|k|^2) - m^{2s} in
/// frequency space.  Annihilates constants exactly.
RealField apply_operator(const RealField& u, const ModelParams& params);

/// Solve [(-Delta + m^2)^s - m^{2s} + mu] v = f.  Requires mu > 0 so the
/// multiplier is bounded below by mu.
RealField apply_resolvent(const RealField& f, const ModelParams& params);

/// Squared H^s_m norm: (L^N/n^{2N}) * sum_k (|k|^2+m^2)^s |Fu(k)|^2, the
/// quadratic form of (-Delta+m^2)^s under the grid quadrature.
double hs_norm_sq(const RealField& u, const ModelParams& params);

/// Grid L^q norm (dx^N-weighted sum); q = infinity gives max |u|.
double lp_norm(const RealField& u, double q);

/// dx^N-weighted sums used throughout the energy bookkeeping.
double l2_norm_sq(const RealField& u);
double l2_inner(const RealField& a, const RealField& b);
double lp_norm_p(const RealField& u, double p);  // |u|_p^p

/// Spectral-side L^2: (L^N/n^{2N}) * sum |Fu|^2 (Parseval cross-check).
double l2_norm_sq_spectral(const RealField& u);

}  // namespace relgs
