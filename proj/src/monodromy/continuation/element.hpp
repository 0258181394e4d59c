#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "monodromy/continuation/path.hpp"
#include "monodromy/germs/series.hpp"
#include "monodromy/numerics/quadrature.hpp"
#include "monodromy/types.hpp"

namespace monodromy::continuation {

// A branch of a multivalued function carried along a path.
class Cursor {
public:
    virtual ~Cursor() = default;
    virtual Point point() const = 0;
    // Continue along the straight chord from point() to z.
    virtual void move_to(const Point& z) = 0;
    virtual cplx value() const = 0;
    virtual std::unique_ptr<Cursor> clone() const = 0;

    void follow(const Path& p);
};

using CursorPtr = std::unique_ptr<Cursor>;

enum class ElementKind { SeriesGerm, ZooClosedForm, HadamardProduct, Derived };

class AnalyticElement {
public:
    virtual ~AnalyticElement() = default;
    // Singular points relevant to continuation (branch points; 0 when later sheets are singular there).
    virtual std::vector<cplx> singularities() const = 0;
    // Principal branch at z: continuation from the home point along the straight segment.
    virtual CursorPtr cursor(const Point& z) const = 0;
    virtual ElementKind kind() const { return ElementKind::ZooClosedForm; }
    virtual std::string name() const = 0;

    cplx principal(const Point& z) const { return cursor(z)->value(); }
};

using ElementPtr = std::shared_ptr<const AnalyticElement>;

// Subdivides chords so every step stays within frac * distance to the singular set.
class SteppingCursor : public Cursor {
public:
    Point point() const override { return p_; }
    void move_to(const Point& z) override;

protected:
    SteppingCursor(const Point& p, std::vector<cplx> sing, double frac = 0.4)
        : p_(p), sing_(std::move(sing)), frac_(frac) {}
    // Short step from p_ to z; must set p_ = z.
    virtual void step(const Point& z) = 0;

    Point p_;
    std::vector<cplx> sing_;
    double frac_;
};

// Values of the continuation along [a, b] at points sorted from a to b,
// starting from a cursor placed on the segment.
void sweep_segment(const Cursor& at_ref, cplx a, cplx b, std::span<const Point> pts,
                   std::span<cplx> out);

// Integral of c.value() du along the chord from c.point() to b; leaves c at b.
cplx integrate_chord(Cursor& c, const Point& b, const std::vector<cplx>& sing, int gl_nodes = 20);

// Integral over [a, b] with integrable endpoint singularities, the cursor placed on the segment.
numerics::QuadResult integrate_segment(const Cursor& at_ref, cplx a, cplx b,
                                       const numerics::QuadratureConfig& cfg = {});

void check_loop_isolated(const std::vector<cplx>& sing, cplx alpha, cplx base);

class LinearCombination final : public AnalyticElement {
public:
    struct Term {
        cplx coef;
        ElementPtr element;
    };
    LinearCombination(std::vector<Term> terms, cplx constant = 0.0);
    std::vector<cplx> singularities() const override;
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return "sum"; }
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
    cplx constant_;
};

// h(z) * f(z) with h single-valued away from extra singular points.
class ScaledElement final : public AnalyticElement {
public:
    ScaledElement(ElementPtr f, std::function<cplx(const Point&)> h, std::vector<cplx> extra_sing,
                  std::string label);
    std::vector<cplx> singularities() const override;
    CursorPtr cursor(const Point& z) const override;
    std::string name() const override { return label_; }

private:
    ElementPtr f_;
    std::function<cplx(const Point&)> h_;
    std::vector<cplx> extra_;
    std::string label_;
};

// Sigma_alpha^k F: principal branch continued k times around alpha.
class WoundElement final : public AnalyticElement {
public:
    WoundElement(ElementPtr f, cplx alpha, int k);
    std::vector<cplx> singularities() const override { return f_->singularities(); }
    CursorPtr cursor(const Point& z) const override;
    ElementKind kind() const override { return ElementKind::Derived; }
    std::string name() const override;

private:
    ElementPtr f_;
    cplx alpha_;
    int k_;
};

// Delta_alpha Sigma_alpha^k F = Sigma^{k+1} F - Sigma^k F.
class DeltaElement final : public AnalyticElement {
public:
    DeltaElement(ElementPtr f, cplx alpha, int k);
    std::vector<cplx> singularities() const override { return f_->singularities(); }
    CursorPtr cursor(const Point& z) const override;
    ElementKind kind() const override { return ElementKind::Derived; }
    std::string name() const override;
    cplx alpha() const { return alpha_; }

private:
    ElementPtr f_;
    cplx alpha_;
    int k_;
};

// z -> integral of f from alpha to z (alpha an integrable singularity or regular point).
class PrimitiveElement final : public AnalyticElement {
public:
    PrimitiveElement(ElementPtr f, cplx alpha, numerics::QuadratureConfig cfg = {});
    std::vector<cplx> singularities() const override;
    CursorPtr cursor(const Point& z) const override;
    ElementKind kind() const override { return ElementKind::Derived; }
    std::string name() const override { return "primitive(" + f_->name() + ")"; }

private:
    ElementPtr f_;
    cplx alpha_;
    numerics::QuadratureConfig cfg_;
};

// Element known only through a truncated Taylor germ; continued by Taylor shifts.
class SeriesGermElement final : public AnalyticElement {
public:
    explicit SeriesGermElement(germs::Germ g, std::vector<cplx> known_sing = {}, double theta = 0.4,
                               double drift_tol = 1e-6);
    std::vector<cplx> singularities() const override { return sing_; }
    CursorPtr cursor(const Point& z) const override;
    ElementKind kind() const override { return ElementKind::SeriesGerm; }
    std::string name() const override { return "series-germ"; }
    const germs::Germ& germ() const { return g_; }

private:
    germs::Germ g_;
    std::vector<cplx> sing_;
    double theta_;
    double drift_tol_;
};

}  // namespace monodromy::continuation
