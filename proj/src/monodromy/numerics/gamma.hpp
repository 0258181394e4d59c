#pragma once

#include "monodromy/types.hpp"

namespace monodromy::numerics {

// Lanczos approximation with reflection; throws GammaPole at non-positive integers.
cplx complex_gamma(cplx z);

// 1/Gamma(z), zero at the poles.
cplx complex_rgamma(cplx z);

bool near_gamma_pole(cplx z, double tol = 1e-14);

}  // namespace monodromy::numerics
