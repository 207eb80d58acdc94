#pragma once

#include <cmath>
#include <complex>

namespace icosa {

using cplx = std::complex<double>;

// Golden-ratio constants and the primitive fifth root of unity.
// Everything is derived from sqrt(5); no decimal literals, so the
// algebraic identities p * pinv = 1 and pinv - p = 1 hold to the ulp.
struct GoldenConstants {
    double sqrt5;
    double p;      // (sqrt(5) - 1) / 2, the golden ratio conjugate
    double pinv;   // (sqrt(5) + 1) / 2, the golden ratio
    cplx eta;      // exp(-2*pi*i / 5)

    GoldenConstants()
        : sqrt5(std::sqrt(5.0)),
          p((sqrt5 - 1.0) / 2.0),
          pinv((sqrt5 + 1.0) / 2.0),
          eta(std::polar(1.0, -2.0 * M_PI / 5.0)) {}

    // eta^k for any integer k (negative allowed).
    cplx eta_pow(int k) const {
        int m = ((k % 5) + 5) % 5;
        return std::polar(1.0, -2.0 * M_PI * m / 5.0);
    }
};

inline const GoldenConstants& golden() {
    static const GoldenConstants g;
    return g;
}

} // namespace icosa
