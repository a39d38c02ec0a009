#pragma once

#include "gl3k/types.hpp"

namespace gl3k {

// log Gamma(z), principal branch, all z except poles at 0,-1,-2,...
// Reflection for Re z < 1/2, argument shift into |z| >= 16, then the
// Stirling series with Bernoulli terms through B_18.
Cplx lgamma_c(Cplx z);

// Gamma(z); throws PoleAt on non-positive integers.
Cplx gamma_c(Cplx z);

// log sin(pi z), branch consistent with the reflection formula; safe for
// large |Im z| (no overflow).
Cplx log_sin_pi(Cplx z);

// Euler Beta via lgamma: B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b)
inline Cplx beta_c(Cplx a, Cplx b) {
    return std::exp(lgamma_c(a) + lgamma_c(b) - lgamma_c(a + b));
}

// Main term of Stirling's formula (stir):
//   e^{-pi|t|/2} |t|^{sigma-1/2} exp(i t log(|t|/e)) g_{sigma,M}(t),
// with the Bernoulli series in g truncated so that the omitted error is
// O(|t|^{-M}). Requires |t| >= 10.
Cplx stirling_main(double sigma, double t, int M);

} // namespace gl3k
