#pragma once

#include <functional>

#include "monodromy/numerics/quadrature.hpp"
#include "monodromy/types.hpp"

namespace monodromy::zoo {

// (1/Gamma(s)) int_base^z (z-u)^{s-1} f(u) du, Re s > 0, straight path.
cplx fractional_integral(const std::function<cplx(cplx)>& f, cplx s, cplx base, cplx z,
                         const numerics::QuadratureConfig& cfg = {});

// n-fold iterated integral from base, by nested Gauss-Legendre.
cplx iterated_integral(const std::function<cplx(cplx)>& f, int n, cplx base, cplx z);

}  // namespace monodromy::zoo
