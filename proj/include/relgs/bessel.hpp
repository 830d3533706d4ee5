#pragma once

namespace relgs {

/// Modified Bessel function of the second kind K_nu(z) for nu >= 0, z > 0.
///
/// Evaluation: the order is reduced to mu in [-1/2, 1/2); K_mu and K_{mu+1}
/// are computed by Temme's series for z <= 2 and by the Temme/Thompson-
/// Barnett continued fraction for z > 2, then lifted to nu by the forward
/// recurrence K_{v+1} = K_{v-1} + (2v/z) K_v.  Relative accuracy is close to
/// machine precision over the ranges exercised here (nu <= ~10, any z).
///
/// Throws std::domain_error for z <= 0 or nu < 0.
double bessel_k(double nu, double z);

}  // namespace relgs
