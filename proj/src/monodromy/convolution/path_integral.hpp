#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "monodromy/continuation/element.hpp"
#include "monodromy/numerics/quadrature.hpp"

namespace monodromy::convolution {

using continuation::Cursor;
using continuation::CursorPtr;
using continuation::ElementPtr;

// Curve parametrized on t in [0, 1].
class Curve {
public:
    virtual ~Curve() = default;
    virtual cplx at(double t) const = 0;
    // Point at end (0 or 1) displaced by dt in parameter, anchored at the end point.
    virtual Point near_end(int end, double dt) const = 0;
    virtual cplx tangent(double t) const = 0;
    // Largest parameter step a cursor may take as a straight chord.
    virtual double max_dt() const { return 1.0; }
};

class SegmentCurve final : public Curve {
public:
    SegmentCurve(cplx a, cplx b) : a_(a), b_(b) {}
    cplx at(double t) const override { return a_ + t * (b_ - a_); }
    Point near_end(int end, double dt) const override {
        return end == 0 ? Point(a_, dt * (b_ - a_)) : Point(b_, dt * (b_ - a_));
    }
    cplx tangent(double) const override { return b_ - a_; }

private:
    cplx a_, b_;
};

// center + radius e^{i(th0 + t (th1 - th0))}
class ArcCurve final : public Curve {
public:
    ArcCurve(cplx center, double radius, double th0, double th1)
        : c_(center), r_(radius), th0_(th0), th1_(th1) {}
    cplx at(double t) const override { return c_ + std::polar(r_, th0_ + t * (th1_ - th0_)); }
    Point near_end(int end, double dt) const override;
    cplx tangent(double t) const override {
        return cplx(0.0, th1_ - th0_) * std::polar(r_, th0_ + t * (th1_ - th0_));
    }
    double max_dt() const override;
    // Use exact values for the end points (e.g. a closed circle through a singular point).
    void pin_ends(cplx a, cplx b) { pin_ = {a, b}; }

private:
    cplx c_;
    double r_, th0_, th1_;
    std::optional<std::pair<cplx, cplx>> pin_;
};

// Move a cursor along a curve from parameter t0 to t1 using chords no longer than max_dt.
void move_along(Cursor& c, const Curve& curve, double t0, double t1, const Point* final_point = nullptr);

// Integral of c.value() du along the curve, cursor placed at parameter t_ref.
// Endpoint singularities are handled by tanh-sinh.
numerics::QuadResult integrate_curve(const Cursor& at_ref, double t_ref, const Curve& curve,
                                     const numerics::QuadratureConfig& cfg);

// Integrand f(u) g(z/u) / u for fixed z with branch-tracked f and g.
class ConvolutionIntegrand final : public Cursor {
public:
    // pair_anchor = (p, beta): points anchored at p map to points anchored at beta.
    ConvolutionIntegrand(CursorPtr f, CursorPtr g, cplx z, std::vector<cplx> g_sing,
                         std::optional<std::pair<cplx, cplx>> pair_anchor = std::nullopt);
    ConvolutionIntegrand(const ConvolutionIntegrand& o);

    Point point() const override { return u_; }
    void move_to(const Point& u) override;
    cplx value() const override;
    CursorPtr clone() const override { return std::make_unique<ConvolutionIntegrand>(*this); }

    // Move z with u fixed (g follows z/u).
    void move_z(cplx z_new);
    cplx z() const { return z_; }
    const Cursor& f() const { return *f_; }
    const Cursor& g() const { return *g_; }

private:
    Point map(const Point& u) const;

    CursorPtr f_, g_;
    cplx z_;
    std::vector<cplx> g_sing_;
    std::optional<std::pair<cplx, cplx>> pair_;
    Point u_;
};

}  // namespace monodromy::convolution
