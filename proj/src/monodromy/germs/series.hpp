#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "monodromy/types.hpp"

namespace monodromy::germs {

inline constexpr double unbounded = std::numeric_limits<double>::infinity();

struct CoeffSeries {
    std::vector<cplx> a;
    double declared_radius = unbounded;

    std::size_t size() const { return a.size(); }
};

struct Germ {
    cplx center{};
    std::vector<cplx> coeffs;
    double trust_radius = unbounded;
    double err_bound = 0.0;
};

struct GermValue {
    cplx value{};
    double tail_estimate = 0.0;
};

// 4096 when the singularity sits on the circle of convergence, 256 otherwise.
std::size_t default_coeff_count(bool singularity_on_circle);

// Coefficients of (1 - z/alpha)^{-a}.
CoeffSeries binomial_series(cplx a, std::size_t m, cplx alpha = 1.0);

CoeffSeries hadamard_coeffs(const CoeffSeries& f, const CoeffSeries& g);

// Root-test estimate over the tail; unbounded for polynomials.
double radius_estimate(const CoeffSeries& s);

Germ germ_from_series(const CoeffSeries& s);

GermValue germ_eval(const Germ& g, cplx z);

// Taylor shift to c_new; requires |c_new - center| <= theta * trust_radius.
Germ recenter(const Germ& g, cplx c_new, double theta = 0.4);

// Coefficients from samples on a circle (discrete Cauchy formula).
Germ germ_from_samples(const std::function<cplx(cplx)>& f, cplx center, double radius, int nodes,
                       double trust_radius);

}  // namespace monodromy::germs
