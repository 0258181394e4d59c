#include "monodromy/continuation/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::continuation {

CursorPtr continue_along(const AnalyticElement& el, const Path& path, const StepPolicy& policy) {
    if (path.vertices.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
    double clearance = policy.clearance_rel * std::max(path.length(), 1e-300);
    for (auto s : el.singularities())
        if (path.vertices.size() > 1 && path.distance_to(s) < clearance)
            throw Error(ErrorCode::PathTooClose, "path passes too close to a singular point");
    auto c = el.cursor(Point(path.start()));
    c->follow(path);
    return c;
}

germs::Germ germ_at(const Cursor& c, const std::vector<cplx>& sing, int nodes, double radius_frac) {
    Point base = c.point();
    double d = sing.empty() ? 1.0 : dist_to(base, sing);
    double r = radius_frac * d;
    return germs::germ_from_samples(
        [&](cplx u) {
            auto k = c.clone();
            k->move_to(Point(u));
            return k->value();
        },
        base.z(), r, nodes, sing.empty() ? germs::unbounded : d);
}

double isolation_radius(const AnalyticElement& el, cplx alpha) {
    double d = std::numeric_limits<double>::infinity();
    for (auto s : el.singularities()) {
        double t = std::abs(s - alpha);
        if (t > 1e-12 * (1.0 + std::abs(alpha))) d = std::min(d, t);
    }
    return d;
}

cplx default_loop_base(const AnalyticElement& el, cplx alpha) {
    double d = isolation_radius(el, alpha);
    if (!std::isfinite(d)) d = std::max(1.0, std::abs(alpha));
    cplx dir = std::abs(alpha) > 0 ? -alpha / std::abs(alpha) : cplx(1.0);
    return alpha + 0.5 * d * dir;
}

void check_working_annulus(const AnalyticElement& el, cplx alpha, cplx base, double outer_frac) {
    double r = std::abs(base - alpha);
    double d = isolation_radius(el, alpha);
    if (!(r > 0) || (std::isfinite(d) && r >= outer_frac * d))
        throw Error(ErrorCode::InvalidAnnulus, "base point outside the working annulus of the singular point");
}

germs::Germ sigma_k(const AnalyticElement& el, cplx alpha, cplx base, int k, const StepPolicy& policy) {
    check_working_annulus(el, alpha, base);
    auto c = el.cursor(Point(base));
    c->follow(Path::loop(alpha, base, k, policy.max_chord_deg));
    return germ_at(*c, el.singularities());
}

BranchTable build_branch_table(const AnalyticElement& el, cplx alpha, cplx base, int k_min, int k_max,
                               bool with_germs, const StepPolicy& policy) {
    if (k_min > 0 || k_max < 0 || k_min > k_max)
        throw Error(ErrorCode::InvalidArgument, "branch range must contain 0");
    check_working_annulus(el, alpha, base);
    BranchTable t;
    t.alpha = alpha;
    t.base = base;
    const auto sing = el.singularities();
    auto record = [&](int k, const Cursor& c) {
        t.values[k] = c.value();
        if (with_germs) {
            auto g = germ_at(c, sing);
            t.err_bound = std::max(t.err_bound, g.err_bound);
            t.branches[k] = std::move(g);
        }
    };
    auto c0 = el.cursor(Point(base));
    record(0, *c0);
    auto fwd = c0->clone();
    for (int k = 1; k <= k_max; ++k) {
        fwd->follow(Path::loop(alpha, base, 1, policy.max_chord_deg));
        fwd->move_to(Point(base));
        record(k, *fwd);
    }
    auto bwd = c0->clone();
    for (int k = -1; k >= k_min; --k) {
        bwd->follow(Path::loop(alpha, base, -1, policy.max_chord_deg));
        bwd->move_to(Point(base));
        record(k, *bwd);
    }
    if (with_germs)
        for (int k = k_min; k < k_max; ++k) t.deltas[k] = germ_difference(t.branches[k + 1], t.branches[k]);
    return t;
}

germs::Germ germ_difference(const germs::Germ& a, const germs::Germ& b) {
    if (a.center != b.center) throw Error(ErrorCode::InvalidArgument, "germs have different centers");
    germs::Germ d;
    d.center = a.center;
    d.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) d.coeffs[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) d.coeffs[i] -= b.coeffs[i];
    d.trust_radius = std::min(a.trust_radius, b.trust_radius);
    d.err_bound = a.err_bound + b.err_bound;
    return d;
}

IntegrabilityReport integrability_check(const AnalyticElement& el, cplx alpha, double abs_tol) {
    IntegrabilityReport rep;
    double d = isolation_radius(el, alpha);
    if (!std::isfinite(d)) d = std::max(1.0, std::abs(alpha));
    double r0 = 0.5 * d;
    cplx dir = std::abs(alpha) > 0 ? -alpha / std::abs(alpha) : cplx(1.0);
    const double angles[3] = {-pi / 4, 0.0, pi / 4};
    const int levels = 40;
    bool monotone = true;
    double last_max = 0.0;
    double slope_sum = 0.0;
    int slope_n = 0;
    for (double ang : angles) {
        std::vector<double> mags;
        cplx e = dir * std::polar(1.0, ang);
        auto c = el.cursor(Point(alpha, r0 * e));
        for (int j = 0; j < levels; ++j) {
            double r = r0 * std::pow(10.0, -double(j));
            Point p(alpha, r * e);
            c->move_to(p);
            mags.push_back(std::abs(r * e * c->value()));
        }
        for (size_t j = 3; j < mags.size(); ++j)
            if (!(mags[j] < mags[j - 1] * (1.0 + 1e-9))) monotone = false;
        for (size_t j = levels - 10; j < mags.size(); ++j)
            if (mags[j] > 0 && mags[j - 1] > 0) {
                slope_sum += std::log10(mags[j - 1] / mags[j]);
                ++slope_n;
            }
        last_max = std::max(last_max, mags.back());
        rep.magnitudes.push_back(std::move(mags));
    }
    rep.exponent = slope_n > 0 ? slope_sum / slope_n : 0.0;
    rep.integrable = monotone && (last_max < abs_tol || rep.exponent > 1e-3);
    return rep;
}

}  // namespace monodromy::continuation
