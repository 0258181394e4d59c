#pragma once

#include <utility>
#include <vector>

#include "monodromy/convolution/path_integral.hpp"

namespace monodromy::convolution {

using continuation::AnalyticElement;

struct PairDecomposition {
    cplx gamma{};
    std::vector<std::pair<cplx, cplx>> pairs;  // (alpha, beta) with alpha beta = gamma
};

PairDecomposition decompose_pairs(const std::vector<cplx>& f_sing, const std::vector<cplx>& g_sing, cplx gamma,
                                  double rel_tol = 1e-9);

struct BarStarResult {
    cplx value{};
    double err_estimate = 0.0;
};

// -(1/2 pi i) int_alpha^{z/beta} f(u) g(z/u) du/u along the straight segment (or through waypoints),
// f and g taken as their elements' branches at the first piece's midpoint.
// Singular points within 0.05 * length of the segment are bypassed on the far side.
BarStarResult bar_star(const AnalyticElement& f, const AnalyticElement& g, cplx alpha, cplx beta, cplx z,
                       const numerics::QuadratureConfig& cfg = {}, const std::vector<cplx>& waypoints = {});

// x -> (f bar-star g)(x) evaluated afresh at each point.
class BarStarElement final : public AnalyticElement {
public:
    BarStarElement(ElementPtr f, ElementPtr g, cplx alpha, cplx beta, numerics::QuadratureConfig cfg);
    std::vector<cplx> singularities() const override { return {0.0, alpha_ * beta_}; }
    CursorPtr cursor(const Point& z) const override;
    continuation::ElementKind kind() const override { return continuation::ElementKind::Derived; }
    std::string name() const override { return "barstar"; }

private:
    ElementPtr f_, g_;
    cplx alpha_, beta_;
    numerics::QuadratureConfig cfg_;
};

}  // namespace monodromy::convolution
