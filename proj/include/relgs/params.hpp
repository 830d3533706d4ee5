#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace relgs {

/// Parameters of the model equation
///   [(-Delta + m^2)^s - m^{2s}] u + mu u = |u|^{p-2} u   on R^N.
///
/// Admissible ranges: s in (0,1), m >= 0, mu > 0, N >= 2s, and p in the
/// subcritical window (2, 2N/(N-2s)).  When N == 2s (e.g. N=1, s=1/2) the
/// window is taken as (2, inf), the formal limit of 2N/(N-2s).
struct ModelParams {
    double s = 0.5;
    double m = 0.0;
    double mu = 1.0;
    double p = 3.0;
    int N = 1;

    /// 2N/(N-2s), or +inf when N == 2s.
    double critical_exponent() const {
        const double d = N - 2.0 * s;
        if (d <= 0.0) return std::numeric_limits<double>::infinity();
        return 2.0 * N / d;
    }

    /// m^{2s}; the zero-frequency value of the symbol.
    double m2s() const { return std::pow(m * m, s); }

    void validate() const {
        if (!(s > 0.0 && s < 1.0))
            throw std::invalid_argument("model.s = " + std::to_string(s) + " violates s in (0,1)");
        if (!(m >= 0.0))
            throw std::invalid_argument("model.m = " + std::to_string(m) + " violates m >= 0");
        if (!(mu > 0.0))
            throw std::invalid_argument("model.mu = " + std::to_string(mu) + " violates mu > 0");
        if (N < 1)
            throw std::invalid_argument("model.N = " + std::to_string(N) + " violates N >= 1");
        if (2.0 * s > N)
            throw std::invalid_argument("model: 2s = " + std::to_string(2.0 * s) +
                                        " exceeds N = " + std::to_string(N));
        const double pc = critical_exponent();
        if (!(p > 2.0 && p < pc))
            throw std::invalid_argument(
                "model.p = " + std::to_string(p) + " outside the subcritical window (2, " +
                (std::isinf(pc) ? std::string("inf") : std::to_string(pc)) +
                ") = (2, 2N/(N-2s)) for N = " + std::to_string(N) + ", s = " + std::to_string(s));
    }
};

}  // namespace relgs
