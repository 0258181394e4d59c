#pragma once

#include "monodromy/zoo/power.hpp"

namespace monodromy::zoo {

// Root of P(z, w) = sum_i p_i(z) w^i = 0, continued by predictor-corrector.
class AlgebraicElement final : public AnalyticElement {
public:
    // p[i] holds the z-coefficients of w^i; home_root is the selected root at home.
    AlgebraicElement(std::vector<std::vector<cplx>> p, std::vector<cplx> ramification, cplx home_root,
                     cplx home = 0.0, std::string label = "algebraic");
    std::vector<cplx> singularities() const override { return ram_; }
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return label_; }
    int degree() const { return int(p_.size()) - 1; }

    cplx eval_p(cplx z, cplx w) const;
    cplx eval_pw(cplx z, cplx w) const;
    cplx eval_pz(cplx z, cplx w) const;
    std::vector<cplx> roots(cplx z) const;

    // w^2 = 1 - z with w(0) = 1
    static std::shared_ptr<AlgebraicElement> sqrt_one_minus_z();
    // (w - 1)^2 = 1 - z with w(0) = 2, i.e. 1 + sqrt(1 - z)
    static std::shared_ptr<AlgebraicElement> shifted_sqrt();
    // w^3 - w - z = 0 with w(0) = 1; ramified at +-2/(3 sqrt 3)
    static std::shared_ptr<AlgebraicElement> cubic();

private:
    std::vector<std::vector<cplx>> p_;
    std::vector<cplx> ram_;
    cplx home_root_, home_;
    std::string label_;
};

}  // namespace monodromy::zoo
