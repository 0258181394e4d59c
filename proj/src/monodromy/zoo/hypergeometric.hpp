#pragma once

#include "monodromy/numerics/quadrature.hpp"
#include "monodromy/zoo/power.hpp"

namespace monodromy::zoo {

// 2F1(a, b; c; z), continued with the hypergeometric ODE.
class Hypergeometric2F1 final : public AnalyticElement {
public:
    Hypergeometric2F1(cplx a, cplx b, cplx c);
    std::vector<cplx> singularities() const override { return {0.0, 1.0}; }
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return "hyp2f1"; }
    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }

private:
    cplx a_, b_, c_;
};

struct Hyp2F1Series {
    cplx value{};
    cplx derivative{};
    int terms = 0;
};

// Taylor series at 0; requires |z| < 1.
Hyp2F1Series hyp2f1_series(cplx a, cplx b, cplx c, cplx z);

// Principal branch.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);

// Euler integral; requires Re c > Re b > 0.
cplx euler_2F1(cplx a, cplx b, cplx c, cplx z, const numerics::QuadratureConfig& cfg = {});

// Delta_1 F(a, b; c; z) from the Kummer connection at 1:
// Gamma(c)Gamma(a+b-c)/(Gamma(a)Gamma(b)) (e^{2 pi i (c-a-b)} - 1) (1-z)^{c-a-b} F(c-a, c-b; c-a-b+1; 1-z).
// Integer c-a-b is degenerate (logarithmic) and rejected.
cplx hyp2f1_delta(cplx a, cplx b, cplx c, const Point& z);

// The connection term alone with (z-1)^{c-a-b}; not the monodromy.
cplx hyp2f1_connection_term(cplx a, cplx b, cplx c, const Point& z);

}  // namespace monodromy::zoo
