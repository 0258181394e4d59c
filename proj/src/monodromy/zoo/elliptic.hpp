#pragma once

#include "monodromy/numerics/quadrature.hpp"
#include "monodromy/types.hpp"

namespace monodromy::zoo {

// (2/pi) int_0^1 du / sqrt((1-u^2)(1-ksq u^2)), ksq in [0, 1)
double elliptic_K_norm(double ksq, const numerics::QuadratureConfig& cfg = {});
double elliptic_K_norm_agm(double ksq);
// sum_{n<m} binom(2n,n)^2 ksq^n / 16^n
double elliptic_K_norm_series(double ksq, std::size_t m);

// Delta_1 of (1-z)^{-1/2} (.) (1-z)^{-1/2} at z:
// -(4 / 2 pi i) int_1^z du / (u (1-u)^{1/2} (1-z/u)^{1/2}), principal factors along [1, z].
cplx modular_delta_closed_form(const Point& z, const numerics::QuadratureConfig& cfg = {});

}  // namespace monodromy::zoo
