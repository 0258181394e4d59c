#include "monodromy/convolution/barstar.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "monodromy/error.hpp"

namespace monodromy::convolution {

PairDecomposition decompose_pairs(const std::vector<cplx>& f_sing, const std::vector<cplx>& g_sing, cplx gamma,
                                  double rel_tol) {
    PairDecomposition d;
    d.gamma = gamma;
    for (auto a : f_sing) {
        if (std::abs(a) == 0.0) continue;
        for (auto b : g_sing) {
            if (std::abs(b) == 0.0) continue;
            if (std::abs(a * b - gamma) <= rel_tol * std::abs(gamma)) d.pairs.emplace_back(a, b);
        }
    }
    return d;
}

namespace {

std::vector<cplx> nonzero(const std::vector<cplx>& v) {
    std::vector<cplx> out;
    for (auto s : v)
        if (std::abs(s) > 0.0) out.push_back(s);
    return out;
}

}  // namespace

BarStarResult bar_star(const AnalyticElement& f, const AnalyticElement& g, cplx alpha, cplx beta, cplx z,
                       const numerics::QuadratureConfig& cfg, const std::vector<cplx>& waypoints) {
    BarStarResult res;
    const cplx p = z / beta;
    const double len = std::abs(p - alpha);
    if (len == 0.0) return res;
    if (alpha == 0.0 || beta == 0.0) throw Error(ErrorCode::InvalidArgument, "bar-star endpoints must be nonzero");

    std::vector<cplx> verts{alpha};
    if (!waypoints.empty()) {
        verts.insert(verts.end(), waypoints.begin(), waypoints.end());
    } else {
        // nearby singular points of the integrand
        std::vector<cplx> obs{0.0};
        for (auto s : f.singularities())
            if (std::abs(s - alpha) > 1e-12 * std::abs(alpha) && s != 0.0) obs.push_back(s);
        for (auto b : nonzero(g.singularities()))
            if (std::abs(b - beta) > 1e-12 * std::abs(beta)) obs.push_back(z / b);
        const double eps = 0.05 * len;
        const cplx e = (p - alpha) / len;
        struct Bump {
            double t;
            cplx away;
        };
        std::vector<Bump> bumps;
        for (auto s : obs) {
            double t = ((s - alpha) * std::conj(e)).real();
            double h = ((s - alpha) * std::conj(e)).imag();
            if (t <= 0.0 || t >= len || std::abs(h) >= eps) continue;
            if (std::abs(h) < 1e-12 * len)
                throw Error(ErrorCode::ContourHitsSingularity, "bar-star segment passes through a singular point");
            if (t < eps || t > len - eps)
                throw Error(ErrorCode::ContourHitsSingularity, "singular point too close to a bar-star endpoint");
            bumps.push_back({t, h > 0 ? -cplx(0, 1) * e : cplx(0, 1) * e});
        }
        std::sort(bumps.begin(), bumps.end(), [](const Bump& a, const Bump& b) { return a.t < b.t; });
        for (const auto& b : bumps) {
            cplx foot = alpha + b.t * e;
            verts.push_back(foot - eps * e);
            verts.push_back(foot + eps * b.away);
            verts.push_back(foot + eps * e);
        }
    }
    verts.push_back(p);

    const auto g_sing = nonzero(g.singularities());
    const cplx m = 0.5 * (verts[0] + verts[1]);
    ConvolutionIntegrand state(f.cursor(Point(m)), g.cursor(Point(z / m)), z, g_sing, std::make_pair(p, beta));
    cplx total{};
    double err = 0;
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        SegmentCurve seg(verts[i], verts[i + 1]);
        double t_ref = i == 0 ? 0.5 : 0.0;
        auto q = integrate_curve(state, t_ref, seg, cfg);
        total += q.value;
        err += q.err_estimate;
        if (i + 2 < verts.size()) move_along(state, seg, t_ref, 1.0);
    }
    res.value = -total / two_pi_i;
    res.err_estimate = err / (2.0 * pi);
    return res;
}

namespace {

class FreshCursor final : public Cursor {
public:
    FreshCursor(const BarStarElement* e, std::function<cplx(cplx)> fn, const Point& z)
        : e_(e), fn_(std::move(fn)), z_(z) {}
    Point point() const override { return z_; }
    void move_to(const Point& z) override {
        z_ = z;
        has_ = false;
    }
    cplx value() const override {
        if (!has_) {
            v_ = fn_(z_.z());
            has_ = true;
        }
        return v_;
    }
    CursorPtr clone() const override { return std::make_unique<FreshCursor>(*this); }

private:
    const BarStarElement* e_;
    std::function<cplx(cplx)> fn_;
    Point z_;
    mutable cplx v_{};
    mutable bool has_ = false;
};

}  // namespace

BarStarElement::BarStarElement(ElementPtr f, ElementPtr g, cplx alpha, cplx beta, numerics::QuadratureConfig cfg)
    : f_(std::move(f)), g_(std::move(g)), alpha_(alpha), beta_(beta), cfg_(cfg) {}

CursorPtr BarStarElement::cursor(const Point& z) const {
    auto fn = [this](cplx x) { return bar_star(*f_, *g_, alpha_, beta_, x, cfg_).value; };
    return std::make_unique<FreshCursor>(this, fn, z);
}

}  // namespace monodromy::convolution
