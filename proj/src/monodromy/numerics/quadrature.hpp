#pragma once

#include <functional>
#include <span>
#include <vector>

#include "monodromy/types.hpp"

namespace monodromy::numerics {

struct QuadratureConfig {
    int circle_nodes = 512;
    int de_level = 10;
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int fixed_nodes = 0;  // >0: single tanh-sinh pass with about this many nodes

    void validate() const;
};

struct QuadResult {
    cplx value{};
    double err_estimate = 0.0;
    int evaluations = 0;
};

using PointFn = std::function<cplx(const Point&)>;

// Receives nodes sorted from a to b; fills out[i] = f(pts[i]).
using BatchFn = std::function<void(std::span<const Point> pts, std::span<cplx> out)>;

// (1/2 pi i) times the integral of f(u) du over the counterclockwise circle.
cplx circle_integral(const std::function<cplx(cplx)>& f, cplx center, double radius,
                     const QuadratureConfig& cfg = {});

// Tanh-sinh on [a, b]; integrable endpoint singularities allowed.
QuadResult segment_integral_singular(const PointFn& f, cplx a, cplx b,
                                     const QuadratureConfig& cfg = {});
QuadResult segment_integral_batched(const BatchFn& f, cplx a, cplx b,
                                    const QuadratureConfig& cfg = {});

struct GaussRule {
    std::vector<double> x;  // on [-1, 1]
    std::vector<double> w;
};

const GaussRule& gauss_legendre(int n);

// Gauss-Legendre on [a, b] split into equal pieces.
cplx segment_integral_gauss(const std::function<cplx(cplx)>& f, cplx a, cplx b, int pieces = 1,
                            int n = 20);

}  // namespace monodromy::numerics
