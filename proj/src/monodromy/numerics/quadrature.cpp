#include "monodromy/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "monodromy/error.hpp"

namespace monodromy::numerics {

void QuadratureConfig::validate() const {
    if (circle_nodes < 16) throw Error(ErrorCode::InvalidArgument, "circle_nodes must be >= 16");
    if (de_level < 3) throw Error(ErrorCode::InvalidArgument, "de_level must be >= 3");
    if (!(abs_tol > 0) || !(rel_tol > 0))
        throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
    if (fixed_nodes < 0) throw Error(ErrorCode::InvalidArgument, "fixed_nodes must be >= 0");
}

cplx circle_integral(const std::function<cplx(cplx)>& f, cplx center, double radius,
                     const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(radius > 0)) throw Error(ErrorCode::InvalidArgument, "circle radius must be positive");
    const int n = cfg.circle_nodes;
    cplx sum{};
    for (int j = 0; j < n; ++j) {
        cplx e = std::polar(1.0, 2.0 * pi * j / n);
        cplx v = f(center + radius * e);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            cplx u = center + radius * e;
            throw Error(ErrorCode::ContourHitsSingularity, "non-finite integrand on circle at node " +
                                                               std::to_string(u.real()) + (u.imag() < 0 ? "" : "+") +
                                                               std::to_string(u.imag()) + "i");
        }
        sum += v * radius * e;
    }
    return sum / double(n);
}

namespace {

constexpr double kTailFraction = 1e-300;

struct Node {
    double t;
    Point p;
    double w;  // weight, without the (b-a)/2 factor
};

// Nodes t = k*h for odd k (or all k when level 0), both signs.
std::vector<Node> level_nodes(cplx a, cplx b, double h, bool all, double t_max) {
    std::vector<Node> nodes;
    const cplx len = b - a;
    const int kmax = int(std::floor(t_max / h));
    for (int k = -kmax; k <= kmax; ++k) {
        if (!all && (k % 2 == 0)) continue;
        double t = k * h;
        double s = 0.5 * pi * std::sinh(t);
        double c = std::cosh(s);
        double w = h * 0.5 * pi * std::cosh(t) / (c * c);
        Point p;
        if (t <= 0) {
            double fa = 1.0 / (1.0 + std::exp(-2.0 * s));
            if (fa < kTailFraction) continue;
            p = Point(a, len * fa);
        } else {
            double fb = 1.0 / (1.0 + std::exp(2.0 * s));
            if (fb < kTailFraction) continue;
            p = Point(b, -len * fb);
        }
        nodes.push_back({t, p, w});
    }
    return nodes;
}

double t_limit() {
    // fraction 1/(1+e^{2s}) reaches kTailFraction
    double s = 0.5 * std::log(1.0 / kTailFraction);
    return std::asinh(2.0 * s / pi);
}

}  // namespace

QuadResult segment_integral_batched(const BatchFn& f, cplx a, cplx b, const QuadratureConfig& cfg) {
    cfg.validate();
    QuadResult res;
    if (a == b) return res;
    const cplx half = 0.5 * (b - a);
    const double tmax = t_limit();

    auto eval = [&](const std::vector<Node>& nodes, double& tail) {
        std::vector<Point> pts(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) pts[i] = nodes[i].p;
        std::vector<cplx> vals(nodes.size());
        f(pts, vals);
        res.evaluations += int(nodes.size());
        cplx s{};
        tail = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (!std::isfinite(vals[i].real()) || !std::isfinite(vals[i].imag()))
                throw Error(ErrorCode::NonIntegrableEndpoint, "non-finite integrand at quadrature node");
            cplx term = nodes[i].w * vals[i];
            s += term;
            if (std::abs(nodes[i].t) > tmax - 1.0) tail = std::max(tail, std::abs(term * half));
        }
        return s;
    };

    if (cfg.fixed_nodes > 0) {
        const double T = 4.5;
        double h = 2.0 * T / cfg.fixed_nodes;
        auto nodes = level_nodes(a, b, h, true, T);
        double tail = 0;
        res.value = half * eval(nodes, tail);
        res.err_estimate = tail;
        return res;
    }

    double h = 1.0;
    double tail = 0;
    cplx sum = eval(level_nodes(a, b, h, true, tmax), tail);
    cplx prev = half * sum;
    for (int level = 1; level <= cfg.de_level; ++level) {
        h *= 0.5;
        double tl = 0;
        cplx add = eval(level_nodes(a, b, h, false, tmax), tl);
        tail = std::max(tail, tl);
        sum = 0.5 * sum + add;
        cplx cur = half * sum;
        double delta = std::abs(cur - prev);
        res.value = cur;
        res.err_estimate = delta;
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur));
        if (tail > std::max(1e3 * tol, 1e-10 * std::abs(cur)))
            throw Error(ErrorCode::NonIntegrableEndpoint,
                        "endpoint contributions do not decay; integrand not integrable");
        if (level >= 3 && delta <= tol) return res;
        prev = cur;
    }
    return res;
}

QuadResult segment_integral_singular(const PointFn& f, cplx a, cplx b, const QuadratureConfig& cfg) {
    return segment_integral_batched(
        [&](std::span<const Point> pts, std::span<cplx> out) {
            for (size_t i = 0; i < pts.size(); ++i) out[i] = f(pts[i]);
        },
        a, b, cfg);
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre order must be >= 1");
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) { p1 = x; p0 = 1; }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

cplx segment_integral_gauss(const std::function<cplx(cplx)>& f, cplx a, cplx b, int pieces, int n) {
    const auto& g = gauss_legendre(n);
    cplx total{};
    cplx step = (b - a) / double(pieces);
    for (int p = 0; p < pieces; ++p) {
        cplx lo = a + double(p) * step;
        cplx mid = lo + 0.5 * step;
        cplx s{};
        for (int i = 0; i < n; ++i) s += g.w[i] * f(mid + 0.5 * step * g.x[i]);
        total += 0.5 * step * s;
    }
    return total;
}

}  // namespace monodromy::numerics
