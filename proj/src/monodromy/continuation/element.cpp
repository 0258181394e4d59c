#include "monodromy/continuation/element.hpp"

#include <algorithm>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::continuation {

void Cursor::follow(const Path& p) {
    for (size_t i = 1; i < p.vertices.size(); ++i) move_to(Point(p.vertices[i]));
}

void SteppingCursor::move_to(const Point& z) {
    for (int iter = 0;; ++iter) {
        cplx from_target = diff(p_, z.anchor) - z.offset;
        double len = std::abs(from_target);
        if (len == 0.0) {
            p_ = z;
            return;
        }
        double d = sing_.empty() ? std::numeric_limits<double>::infinity() : dist_to(p_, sing_);
        double smax = frac_ * d;
        if (!(smax > 0.0) || iter > 200000)
            throw Error(ErrorCode::PathTooClose, "continuation path runs into a singular point");
        if (len <= smax) {
            step(z);
            return;
        }
        step(Point(z.anchor, z.offset + from_target * (1.0 - smax / len)));
    }
}

void sweep_segment(const Cursor& at_ref, cplx a, cplx b, std::span<const Point> pts,
                   std::span<cplx> out) {
    const cplx ab = b - a;
    auto param = [&](const Point& p) { return ((p.z() - a) / ab).real(); };
    const double tr = param(at_ref.point());
    size_t split = 0;
    while (split < pts.size() && param(pts[split]) < tr) ++split;
    auto fwd = at_ref.clone();
    for (size_t i = split; i < pts.size(); ++i) {
        fwd->move_to(pts[i]);
        out[i] = fwd->value();
    }
    auto bwd = at_ref.clone();
    for (size_t i = split; i-- > 0;) {
        bwd->move_to(pts[i]);
        out[i] = bwd->value();
    }
}

cplx integrate_chord(Cursor& c, const Point& b, const std::vector<cplx>& sing, int gl_nodes) {
    const auto& rule = numerics::gauss_legendre(gl_nodes);
    cplx total{};
    for (int iter = 0;; ++iter) {
        Point cur = c.point();
        cplx rem = -(diff(cur, b.anchor) - b.offset);
        double len = std::abs(rem);
        if (len == 0.0) return total;
        double d = sing.empty() ? std::numeric_limits<double>::infinity() : dist_to(cur, sing);
        double piece = std::min(len, 0.5 * d);
        if (!(piece > 1e-15 * len) || iter > 100000)
            throw Error(ErrorCode::PathTooClose, "integration chord runs into a singular point");
        bool last = piece == len;
        cplx c0 = cur.z();
        cplx step = rem * (piece / len);
        cplx s{};
        for (int i = gl_nodes; i-- > 0;) {
            // nodes in increasing order along the chord
            double x = rule.x[i];
            c.move_to(Point(c0 + 0.5 * (1.0 + x) * step));
            s += rule.w[i] * c.value();
        }
        total += 0.5 * step * s;
        c.move_to(last ? b : Point(c0 + step));
        if (last) return total;
    }
}

numerics::QuadResult integrate_segment(const Cursor& at_ref, cplx a, cplx b,
                                       const numerics::QuadratureConfig& cfg) {
    return numerics::segment_integral_batched(
        [&](std::span<const Point> pts, std::span<cplx> out) { sweep_segment(at_ref, a, b, pts, out); },
        a, b, cfg);
}

void check_loop_isolated(const std::vector<cplx>& sing, cplx alpha, cplx base) {
    double r = std::abs(base - alpha);
    for (auto s : sing) {
        double d = std::abs(s - alpha);
        if (d < 1e-12 * (1.0 + std::abs(alpha))) continue;
        if (d <= r * (1.0 + 1e-9))
            throw Error(ErrorCode::InvalidAnnulus,
                        "loop around the singular point encloses or touches another singular point");
    }
}

namespace {

// Loop around alpha keeping the offset from alpha exact.
void follow_loop(Cursor& c, cplx alpha, int turns, double max_chord_deg = 20.0) {
    if (turns == 0) return;
    Point start = c.point();
    cplx off = diff(start, alpha);
    double angle = 2.0 * pi * turns;
    int n = std::max(1, int(std::ceil(std::abs(angle) * 180.0 / pi / max_chord_deg)));
    for (int i = 1; i < n; ++i) c.move_to(Point(alpha, off * std::polar(1.0, angle * i / n)));
    c.move_to(Point(alpha, off));
    c.move_to(start);
}

class SumCursor final : public Cursor {
public:
    SumCursor(std::vector<CursorPtr> parts, std::vector<cplx> coefs, cplx constant, Point p)
        : parts_(std::move(parts)), coefs_(std::move(coefs)), constant_(constant), p_(p) {}
    Point point() const override { return p_; }
    void move_to(const Point& z) override {
        for (auto& c : parts_) c->move_to(z);
        p_ = z;
    }
    cplx value() const override {
        cplx s = constant_;
        for (size_t i = 0; i < parts_.size(); ++i) s += coefs_[i] * parts_[i]->value();
        return s;
    }
    CursorPtr clone() const override {
        std::vector<CursorPtr> c;
        for (const auto& p : parts_) c.push_back(p->clone());
        return std::make_unique<SumCursor>(std::move(c), coefs_, constant_, p_);
    }

private:
    std::vector<CursorPtr> parts_;
    std::vector<cplx> coefs_;
    cplx constant_;
    Point p_;
};

class ScaledCursor final : public Cursor {
public:
    ScaledCursor(CursorPtr inner, const std::function<cplx(const Point&)>* h)
        : inner_(std::move(inner)), h_(h) {}
    Point point() const override { return inner_->point(); }
    void move_to(const Point& z) override { inner_->move_to(z); }
    cplx value() const override { return (*h_)(inner_->point()) * inner_->value(); }
    CursorPtr clone() const override { return std::make_unique<ScaledCursor>(inner_->clone(), h_); }

private:
    CursorPtr inner_;
    const std::function<cplx(const Point&)>* h_;
};

class DeltaCursor final : public Cursor {
public:
    DeltaCursor(CursorPtr lo, CursorPtr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
    Point point() const override { return lo_->point(); }
    void move_to(const Point& z) override {
        lo_->move_to(z);
        hi_->move_to(z);
    }
    cplx value() const override { return hi_->value() - lo_->value(); }
    CursorPtr clone() const override { return std::make_unique<DeltaCursor>(lo_->clone(), hi_->clone()); }

private:
    CursorPtr lo_, hi_;
};

class PrimitiveCursor final : public Cursor {
public:
    PrimitiveCursor(CursorPtr f, cplx v, std::vector<cplx> sing)
        : f_(std::move(f)), v_(v), sing_(std::move(sing)) {}
    Point point() const override { return f_->point(); }
    void move_to(const Point& z) override { v_ += integrate_chord(*f_, z, sing_); }
    cplx value() const override { return v_; }
    CursorPtr clone() const override { return std::make_unique<PrimitiveCursor>(f_->clone(), v_, sing_); }

private:
    CursorPtr f_;
    cplx v_;
    std::vector<cplx> sing_;
};

class GermCursor final : public Cursor {
public:
    GermCursor(germs::Germ g, std::vector<cplx> sing, double theta, double drift_tol)
        : g_(std::move(g)), sing_(std::move(sing)), theta_(theta), drift_tol_(drift_tol) {}
    Point point() const override { return Point(g_.center); }
    void move_to(const Point& target) override {
        const cplx z = target.z();
        for (int iter = 0; iter < 100000; ++iter) {
            cplx rem = z - g_.center;
            double len = std::abs(rem);
            if (len == 0.0) return;
            double s = std::min(len, theta_ * g_.trust_radius);
            if (!(s > 0.0)) throw Error(ErrorCode::StepViolation, "germ trust radius collapsed");
            cplx dir = rem / len;
            germs::Germ next = germs::recenter(g_, g_.center + s * dir, theta_);
            if (!sing_.empty()) next.trust_radius = dist_to(Point(next.center), sing_);
            double probe = 0.5 * std::min(next.trust_radius, g_.trust_radius - s);
            if (probe > 0.0 && std::isfinite(probe)) {
                cplx q = next.center + probe * dir;
                cplx vo = germs::germ_eval(g_, q).value;
                cplx vn = germs::germ_eval(next, q).value;
                if (std::abs(vn - vo) > drift_tol_ * (1.0 + std::abs(vo)))
                    throw Error(ErrorCode::AccuracyLoss,
                                "Taylor-shift continuation lost accuracy (overlap drift above tolerance)");
            }
            g_ = std::move(next);
        }
        throw Error(ErrorCode::StepViolation, "too many recenter steps");
    }
    cplx value() const override { return g_.coeffs.empty() ? cplx{} : g_.coeffs[0]; }
    CursorPtr clone() const override { return std::make_unique<GermCursor>(*this); }

private:
    germs::Germ g_;
    std::vector<cplx> sing_;
    double theta_, drift_tol_;
};

void append_unique(std::vector<cplx>& v, const std::vector<cplx>& more) {
    for (auto s : more)
        if (std::none_of(v.begin(), v.end(), [&](cplx t) { return std::abs(t - s) < 1e-14; }))
            v.push_back(s);
}

}  // namespace

LinearCombination::LinearCombination(std::vector<Term> terms, cplx constant)
    : terms_(std::move(terms)), constant_(constant) {}

std::vector<cplx> LinearCombination::singularities() const {
    std::vector<cplx> s;
    for (const auto& t : terms_) append_unique(s, t.element->singularities());
    return s;
}

CursorPtr LinearCombination::cursor(const Point& z) const {
    std::vector<CursorPtr> parts;
    std::vector<cplx> coefs;
    for (const auto& t : terms_) {
        parts.push_back(t.element->cursor(z));
        coefs.push_back(t.coef);
    }
    return std::make_unique<SumCursor>(std::move(parts), std::move(coefs), constant_, z);
}

ScaledElement::ScaledElement(ElementPtr f, std::function<cplx(const Point&)> h,
                             std::vector<cplx> extra_sing, std::string label)
    : f_(std::move(f)), h_(std::move(h)), extra_(std::move(extra_sing)), label_(std::move(label)) {}

std::vector<cplx> ScaledElement::singularities() const {
    auto s = f_->singularities();
    append_unique(s, extra_);
    return s;
}

CursorPtr ScaledElement::cursor(const Point& z) const {
    return std::make_unique<ScaledCursor>(f_->cursor(z), &h_);
}

WoundElement::WoundElement(ElementPtr f, cplx alpha, int k) : f_(std::move(f)), alpha_(alpha), k_(k) {}

std::string WoundElement::name() const { return "sigma^" + std::to_string(k_) + "(" + f_->name() + ")"; }

CursorPtr WoundElement::cursor(const Point& z) const {
    check_loop_isolated(f_->singularities(), alpha_, z.z());
    auto c = f_->cursor(z);
    follow_loop(*c, alpha_, k_);
    return c;
}

DeltaElement::DeltaElement(ElementPtr f, cplx alpha, int k) : f_(std::move(f)), alpha_(alpha), k_(k) {}

std::string DeltaElement::name() const {
    return "delta sigma^" + std::to_string(k_) + "(" + f_->name() + ")";
}

CursorPtr DeltaElement::cursor(const Point& z) const {
    check_loop_isolated(f_->singularities(), alpha_, z.z());
    auto lo = f_->cursor(z);
    follow_loop(*lo, alpha_, k_);
    auto hi = lo->clone();
    follow_loop(*hi, alpha_, 1);
    return std::make_unique<DeltaCursor>(std::move(lo), std::move(hi));
}

PrimitiveElement::PrimitiveElement(ElementPtr f, cplx alpha, numerics::QuadratureConfig cfg)
    : f_(std::move(f)), alpha_(alpha), cfg_(cfg) {}

std::vector<cplx> PrimitiveElement::singularities() const { return f_->singularities(); }

CursorPtr PrimitiveElement::cursor(const Point& z) const {
    cplx zz = z.z();
    cplx m = 0.5 * (alpha_ + zz);
    auto fm = f_->cursor(Point(m));
    cplx v = integrate_segment(*fm, alpha_, zz, cfg_).value;
    fm->move_to(z);
    return std::make_unique<PrimitiveCursor>(std::move(fm), v, f_->singularities());
}

SeriesGermElement::SeriesGermElement(germs::Germ g, std::vector<cplx> known_sing, double theta,
                                     double drift_tol)
    : g_(std::move(g)), sing_(std::move(known_sing)), theta_(theta), drift_tol_(drift_tol) {}

CursorPtr SeriesGermElement::cursor(const Point& z) const {
    auto c = std::make_unique<GermCursor>(g_, sing_, theta_, drift_tol_);
    c->move_to(z);
    return c;
}

}  // namespace monodromy::continuation
