#pragma once

#include "monodromy/zoo/power.hpp"

namespace monodromy::zoo {

// scale * Li_k(z); continued by integrating Li_{j+1}' = Li_j / z along chords.
class PolylogElement final : public AnalyticElement {
public:
    explicit PolylogElement(int k, cplx scale = 1.0);
    std::vector<cplx> singularities() const override { return {0.0, 1.0}; }
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return "polylog"; }
    int order() const { return k_; }
    cplx scale() const { return scale_; }

private:
    int k_;
    cplx scale_;
};

// Principal Li_k(z), z off [1, inf).
cplx polylog_eval(int k, const Point& z);

// Delta_1 Li_k(z) = -2 pi i (log z)^{k-1} / (k-1)!
cplx polylog_delta_exact(int k, const Point& z);

}  // namespace monodromy::zoo
