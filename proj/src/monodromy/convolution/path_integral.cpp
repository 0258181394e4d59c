#include "monodromy/convolution/path_integral.hpp"

#include <algorithm>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::convolution {

Point ArcCurve::near_end(int end, double dt) const {
    double th = end == 0 ? th0_ : th1_;
    double d = dt * (th1_ - th0_);
    // e^{id} - 1 without cancellation
    cplx em1(-2.0 * std::sin(0.5 * d) * std::sin(0.5 * d), std::sin(d));
    cplx e = pin_ ? (end == 0 ? pin_->first : pin_->second) : at(double(end));
    return Point(e, std::polar(r_, th) * em1);
}

double ArcCurve::max_dt() const {
    double span = std::abs(th1_ - th0_);
    return span > 0 ? std::min(1.0, (10.0 * pi / 180.0) / span) : 1.0;
}

void move_along(Cursor& c, const Curve& curve, double t0, double t1, const Point* final_point) {
    const double h = curve.max_dt();
    double t = t0;
    while (std::abs(t1 - t) > h) {
        t += (t1 > t ? h : -h);
        c.move_to(Point(curve.at(t)));
    }
    c.move_to(final_point ? *final_point : Point(curve.at(t1)));
}

numerics::QuadResult integrate_curve(const Cursor& at_ref, double t_ref, const Curve& curve,
                                     const numerics::QuadratureConfig& cfg) {
    auto batch = [&](std::span<const Point> nodes, std::span<cplx> out) {
        // node parameters and curve points
        const size_t n = nodes.size();
        std::vector<double> t(n);
        std::vector<Point> pts(n);
        for (size_t i = 0; i < n; ++i) {
            const Point& q = nodes[i];
            if (q.anchor == cplx(1.0)) {
                t[i] = 1.0 + q.offset.real();
                pts[i] = curve.near_end(1, q.offset.real());
            } else {
                t[i] = q.anchor.real() + q.offset.real();
                pts[i] = curve.near_end(0, t[i]);
            }
        }
        size_t split = 0;
        while (split < n && t[split] < t_ref) ++split;
        auto fwd = at_ref.clone();
        double tc = t_ref;
        for (size_t i = split; i < n; ++i) {
            move_along(*fwd, curve, tc, t[i], &pts[i]);
            tc = t[i];
            out[i] = fwd->value() * curve.tangent(t[i]);
        }
        auto bwd = at_ref.clone();
        tc = t_ref;
        for (size_t i = split; i-- > 0;) {
            move_along(*bwd, curve, tc, t[i], &pts[i]);
            tc = t[i];
            out[i] = bwd->value() * curve.tangent(t[i]);
        }
    };
    return numerics::segment_integral_batched(batch, 0.0, 1.0, cfg);
}

ConvolutionIntegrand::ConvolutionIntegrand(CursorPtr f, CursorPtr g, cplx z, std::vector<cplx> g_sing,
                                           std::optional<std::pair<cplx, cplx>> pair_anchor)
    : f_(std::move(f)), g_(std::move(g)), z_(z), g_sing_(std::move(g_sing)), pair_(pair_anchor) {
    u_ = f_->point();
}

ConvolutionIntegrand::ConvolutionIntegrand(const ConvolutionIntegrand& o)
    : f_(o.f_->clone()), g_(o.g_->clone()), z_(o.z_), g_sing_(o.g_sing_), pair_(o.pair_), u_(o.u_) {}

Point ConvolutionIntegrand::map(const Point& u) const {
    if (pair_ && u.anchor == pair_->first && u.offset != 0.0) {
        cplx beta = pair_->second;
        return Point(beta, -beta * u.offset / u.z());
    }
    return Point(z_ / u.z());
}

void ConvolutionIntegrand::move_to(const Point& target) {
    for (int iter = 0;; ++iter) {
        cplx from_target = diff(u_, target.anchor) - target.offset;
        double len = std::abs(from_target);
        if (len == 0.0) break;
        cplx uc = u_.z();
        double au = std::abs(uc);
        if (au == 0.0) throw Error(ErrorCode::PathTooClose, "convolution path through 0");
        double dw = g_sing_.empty() ? std::numeric_limits<double>::infinity()
                                    : dist_to(map(u_), g_sing_);
        double smax = std::min(0.25 * au, 0.25 * dw * au * au / std::max(std::abs(z_), 1e-300));
        if (!(smax > 0.0) || iter > 1000000)
            throw Error(ErrorCode::PathTooClose, "convolution path runs into a singular point");
        Point next = len <= smax ? target : Point(target.anchor, target.offset + from_target * (1.0 - smax / len));
        f_->move_to(next);
        g_->move_to(map(next));
        u_ = next;
        if (len <= smax) break;
    }
    u_ = target;
}

cplx ConvolutionIntegrand::value() const { return f_->value() * g_->value() / u_.z(); }

void ConvolutionIntegrand::move_z(cplx z_new) {
    // w = z/u moves on a straight chord for fixed u
    z_ = z_new;
    g_->move_to(map(u_));
}

}  // namespace monodromy::convolution
