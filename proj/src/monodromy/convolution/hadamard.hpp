#pragma once

#include "monodromy/convolution/path_integral.hpp"

namespace monodromy::convolution {

using continuation::AnalyticElement;

// Smallest modulus among nonzero singular points; infinite if none.
double element_radius(const AnalyticElement& e);

// (1/2 pi i) circle integral of F(u) G(z/u) du/u on |u| = r with principal branches;
// requires |z|/R_G < r < R_F.
cplx hadamard_eval_contour(const AnalyticElement& F, const AnalyticElement& G, cplx z, double r,
                           const numerics::QuadratureConfig& cfg = {});

struct PushConfig {
    int circle_vertices = 64;
    double support_frac = 0.4;  // push support radius relative to clearance
    double step_frac = 0.1;     // step relative to support radius
    double edge_frac = 0.125;   // edge length near the support relative to support radius
    int gl_nodes = 20;
    double consistency_tol = 1e-8;
};

// F (.) G continued by deforming the Hadamard contour: as z moves, each point z/beta carries
// a disk of the plane with it (a compactly supported isotopy fixing the other singular points),
// and the contour integral is re-evaluated on the image contour.
class HadamardProduct final : public AnalyticElement {
public:
    HadamardProduct(ElementPtr F, ElementPtr G, PushConfig cfg = {});
    std::vector<cplx> singularities() const override;
    CursorPtr cursor(const Point& z) const override;
    continuation::ElementKind kind() const override { return continuation::ElementKind::HadamardProduct; }
    std::string name() const override { return "hadamard(" + F_->name() + "," + G_->name() + ")"; }
    const ElementPtr& F() const { return F_; }
    const ElementPtr& G() const { return G_; }
    const PushConfig& config() const { return cfg_; }

private:
    ElementPtr F_, G_;
    PushConfig cfg_;
};

// Introspection for tests.
struct ContourState {
    std::vector<cplx> vertices;
    std::vector<cplx> moving;
    cplx z;
};
ContourState contour_state(const Cursor& c);

}  // namespace monodromy::convolution
