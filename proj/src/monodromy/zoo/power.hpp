#pragma once

#include <vector>

#include "monodromy/continuation/element.hpp"

namespace monodromy::zoo {

using continuation::AnalyticElement;
using continuation::CursorPtr;
using continuation::ElementPtr;

// A counterclockwise loop multiplies (1 - z/alpha)^{-a} by exp(orientation_sign * 2 pi i a).
inline constexpr int orientation_sign = -1;

// scale * (1 - z/alpha)^{-a}
class PowerBranch final : public AnalyticElement {
public:
    PowerBranch(cplx alpha, cplx a, cplx scale = 1.0);
    std::vector<cplx> singularities() const override { return {alpha_}; }
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return "power"; }
    cplx alpha() const { return alpha_; }
    cplx exponent() const { return a_; }
    cplx scale() const { return scale_; }
    bool integrable() const { return a_.real() < 1.0; }

private:
    cplx alpha_, a_, scale_;
};

// scale * log(1 - z/alpha)
class LogBranch final : public AnalyticElement {
public:
    LogBranch(cplx alpha, cplx scale = 1.0);
    std::vector<cplx> singularities() const override { return {alpha_}; }
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return "log"; }
    cplx alpha() const { return alpha_; }
    cplx scale() const { return scale_; }

private:
    cplx alpha_, scale_;
};

// (z - alpha)^{-a} (log(z - alpha) / 2 pi i)^n phi(z), principal logarithm at k = 0.
class AlgebroGeometricElement final : public AnalyticElement {
public:
    AlgebroGeometricElement(cplx alpha, cplx a, int n, std::vector<cplx> phi);
    std::vector<cplx> singularities() const override { return {alpha_}; }
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return "algebro_geometric"; }
    cplx alpha() const { return alpha_; }
    cplx exponent() const { return a_; }
    int log_power() const { return n_; }
    const std::vector<cplx>& phi() const { return phi_; }
    cplx phi_at(cplx z) const;

private:
    cplx alpha_, a_;
    int n_;
    std::vector<cplx> phi_;
};

// Sigma^k of scale (1 - z/alpha)^{-a} at a principal-branch point z.
cplx power_sigma_exact(const PowerBranch& p, const Point& z, int k);
// Multiplier lambda with Sigma = lambda Id on (1 - z/alpha)^{-a}.
cplx power_multiplier(cplx a);

cplx algebro_geometric_sigma(const AlgebroGeometricElement& e, const Point& z, int k);

}  // namespace monodromy::zoo

namespace monodromy::zoo {

// Coefficients a_0..a_n of Sigma^{n+1} = sum_k a_k Sigma^k on (z - alpha)^{-a} times
// polynomials of degree <= n in log(z - alpha).
std::vector<cplx> vandermonde_recurrence(int n, cplx a);

}  // namespace monodromy::zoo
