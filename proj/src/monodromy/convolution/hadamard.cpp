#include "monodromy/convolution/hadamard.hpp"

#include <algorithm>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::convolution {

namespace {

std::vector<cplx> nonzero(const std::vector<cplx>& v) {
    std::vector<cplx> out;
    for (auto s : v)
        if (std::abs(s) > 1e-300) out.push_back(s);
    return out;
}

}  // namespace

double element_radius(const AnalyticElement& e) {
    double r = std::numeric_limits<double>::infinity();
    for (auto s : e.singularities())
        if (std::abs(s) > 1e-300) r = std::min(r, std::abs(s));
    return r;
}

cplx hadamard_eval_contour(const AnalyticElement& F, const AnalyticElement& G, cplx z, double r,
                           const numerics::QuadratureConfig& cfg) {
    double RF = element_radius(F), RG = element_radius(G);
    if (!(r < RF) || !(std::abs(z) / RG < r))
        throw Error(ErrorCode::InvalidAnnulus, "contour radius outside |z|/R_G < r < R_F");
    auto sf = nonzero(F.singularities());
    auto sg = nonzero(G.singularities());
    auto f = [&](cplx u) {
        for (auto a : sf)
            if (std::abs(u - a) < 1e-12 * std::abs(a)) throw Error(ErrorCode::ContourHitsSingularity, "contour hits a singular point of F");
        cplx w = z / u;
        for (auto b : sg)
            if (std::abs(w - b) < 1e-12 * std::abs(b)) throw Error(ErrorCode::ContourHitsSingularity, "contour hits a singular point of G");
        return F.principal(Point(u)) * G.principal(Point(w)) / u;
    };
    return numerics::circle_integral(f, 0.0, r, cfg);
}

namespace {

class ProductCursor final : public Cursor {
public:
    ProductCursor(ElementPtr F, ElementPtr G, const PushConfig& cfg, cplx z_init)
        : F_(std::move(F)), G_(std::move(G)), cfg_(cfg) {
        betas_ = nonzero(G_->singularities());
        fixed_ = nonzero(F_->singularities());
        fixed_.push_back(0.0);
        double RF = element_radius(*F_);
        double RG = element_radius(*G_);
        r_ = std::isfinite(RF) ? 0.5 * RF : 1.0;
        z_ = z_init;
        if (std::isfinite(RG) && !(std::abs(z_) / RG < 0.5 * r_))
            throw Error(ErrorCode::InvalidArgument, "initial point outside the Hadamard disk");
        // base vertex away from the moving points
        double best = -1, phi0 = 0;
        for (int i = 0; i < 64; ++i) {
            double phi = 2.0 * pi * (i + 0.5) / 64.0;
            cplx u = std::polar(r_, phi);
            double m = std::numeric_limits<double>::infinity();
            for (auto b : betas_) {
                cplx dir = z_ == 0.0 ? cplx(1.0) : z_ / b;
                m = std::min(m, std::abs(std::arg(u / dir)));
            }
            if (m > best) {
                best = m;
                phi0 = phi;
            }
        }
        const int n = cfg_.circle_vertices;
        for (int i = 0; i < n; ++i) V_.push_back(std::polar(r_, phi0 + 2.0 * pi * i / n));
        u0_ = V_[0];
        f0_ = F_->cursor(Point(u0_));
        g0_ = G_->cursor(Point(z_ / u0_));
        for (auto b : betas_) p_.push_back(z_ / b);
    }

    ProductCursor(const ProductCursor& o)
        : F_(o.F_), G_(o.G_), cfg_(o.cfg_), betas_(o.betas_), fixed_(o.fixed_), p_(o.p_), V_(o.V_),
          r_(o.r_), u0_(o.u0_), z_(o.z_), f0_(o.f0_->clone()), g0_(o.g0_->clone()),
          n_simplified_(o.n_simplified_), cached_(o.cached_),
          has_cache_(o.has_cache_) {}

    Point point() const override { return Point(z_); }

    void move_to(const Point& target) override {
        cplx t = target.z();
        if (t == z_) return;
        has_cache_ = false;
        for (long iter = 0; iter < 100000000L; ++iter) {
            cplx rem = t - z_;
            double len = std::abs(rem);
            if (len == 0.0) return;
            std::vector<double> rho(p_.size());
            double smax = std::numeric_limits<double>::infinity();
            for (size_t j = 0; j < p_.size(); ++j) {
                double c = clearance(j);
                if (!(c > 1e-9 * r_))
                    throw Error(ErrorCode::PathTooClose, "product continuation runs into a singular point");
                rho[j] = cfg_.support_frac * c;
                smax = std::min(smax, std::abs(betas_[j]) * rho[j] * cfg_.step_frac);
            }
            cplx zn = len <= smax ? t : z_ + rem * (smax / len);
            for (size_t j = 0; j < p_.size(); ++j) refine(p_[j], rho[j]);
            std::vector<cplx> shift(p_.size());
            for (size_t j = 0; j < p_.size(); ++j) shift[j] = zn / betas_[j] - p_[j];
            for (auto& v : V_) {
                if (v == u0_) continue;
                for (size_t j = 0; j < p_.size(); ++j) v += shift[j] * profile(std::abs(v - p_[j]) / rho[j]);
            }
            for (size_t j = 0; j < p_.size(); ++j) p_[j] = zn / betas_[j];
            z_ = zn;
            g0_->move_to(Point(z_ / u0_));
            if (V_.size() > 2 * n_simplified_) simplify(rho);
        }
        throw Error(ErrorCode::PathTooClose, "product continuation did not converge");
    }

    cplx value() const override {
        if (has_cache_) return cached_;
        std::vector<cplx> sing = fixed_;
        sing.insert(sing.end(), p_.begin(), p_.end());
        ConvolutionIntegrand it(f0_->clone(), g0_->clone(), z_, betas_);
        cplx sum{};
        const size_t n = V_.size();
        for (size_t k = 0; k < n; ++k)
            sum += continuation::integrate_chord(it, Point(V_[(k + 1) % n]), sing, cfg_.gl_nodes);
        cplx f_end = it.f().value(), g_end = it.g().value();
        cplx f0 = f0_->value(), g0 = g0_->value();
        if (std::abs(f_end - f0) > cfg_.consistency_tol * (1.0 + std::abs(f0)) ||
            std::abs(g_end - g0) > cfg_.consistency_tol * (1.0 + std::abs(g0)))
            throw Error(ErrorCode::AccuracyLoss, "branch not restored after traversing the deformed contour");
        cached_ = sum / two_pi_i;
        has_cache_ = true;
        return cached_;
    }

    CursorPtr clone() const override { return std::make_unique<ProductCursor>(*this); }

    ContourState state() const { return {V_, p_, z_}; }

private:
    // 1 on [0, 1/2], smooth decay to 0 at 1.
    static double profile(double s) {
        if (s <= 0.5) return 1.0;
        if (s >= 1.0) return 0.0;
        double x = 2.0 * (1.0 - s);
        return x * x * (3.0 - 2.0 * x);
    }

    double clearance(size_t j) const {
        double c = std::abs(p_[j] - u0_);
        for (auto a : fixed_) c = std::min(c, std::abs(p_[j] - a));
        for (size_t i = 0; i < p_.size(); ++i)
            if (i != j) c = std::min(c, std::abs(p_[j] - p_[i]));
        return c;
    }

    // Drop vertices whose removal sweeps no singular point, keeping margins to the moving points.
    void simplify(const std::vector<double>& rho) {
        const double fixed_margin = 1e-3 * r_;
        auto removable = [&](cplx a, cplx v, cplx b) {
            for (auto o : fixed_)
                if (in_triangle(o, a, v, b) || continuation::point_segment_distance(o, a, b) < fixed_margin)
                    return false;
            for (size_t j = 0; j < p_.size(); ++j)
                if (in_triangle(p_[j], a, v, b) ||
                    continuation::point_segment_distance(p_[j], a, b) < 0.5 * cfg_.support_frac * rho[j])
                    return false;
            return true;
        };
        for (int pass = 0; pass < 8; ++pass) {
            std::vector<cplx> out{V_[0]};
            const size_t n = V_.size();
            for (size_t i = 1; i < n; ++i) {
                cplx b = V_[(i + 1) % n];
                if (!removable(out.back(), V_[i], b)) out.push_back(V_[i]);
            }
            bool changed = out.size() != n;
            V_.swap(out);
            if (!changed) break;
        }
        n_simplified_ = std::max<size_t>(V_.size(), cfg_.circle_vertices);
    }

    static bool in_triangle(cplx x, cplx a, cplx b, cplx c) {
        double d1 = cross(b - a, x - a), d2 = cross(c - b, x - b), d3 = cross(a - c, x - c);
        bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
        return !(neg && pos);
    }
    static double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

    // Subdivide edges near the support of the push so chords follow the deformation.
    void refine(cplx p, double rho) {
        const double hmax = cfg_.edge_frac * rho;
        std::vector<cplx> out;
        out.reserve(V_.size() + 16);
        const size_t n = V_.size();
        for (size_t k = 0; k < n; ++k) {
            cplx a = V_[k], b = V_[(k + 1) % n];
            out.push_back(a);
            double L = std::abs(b - a);
            if (L > hmax && continuation::point_segment_distance(p, a, b) < 1.5 * rho) {
                int m = int(std::ceil(L / hmax));
                for (int i = 1; i < m; ++i) out.push_back(a + (b - a) * (double(i) / m));
            }
        }
        V_.swap(out);
    }

    ElementPtr F_, G_;
    PushConfig cfg_;
    std::vector<cplx> betas_, fixed_, p_, V_;
    double r_ = 1.0;
    cplx u0_{}, z_{};
    CursorPtr f0_, g0_;
    size_t n_simplified_ = 64;
    mutable cplx cached_{};
    mutable bool has_cache_ = false;
};

}  // namespace

HadamardProduct::HadamardProduct(ElementPtr F, ElementPtr G, PushConfig cfg)
    : F_(std::move(F)), G_(std::move(G)), cfg_(cfg) {}

std::vector<cplx> HadamardProduct::singularities() const {
    std::vector<cplx> s{0.0};
    for (auto a : nonzero(F_->singularities()))
        for (auto b : nonzero(G_->singularities())) {
            cplx ab = a * b;
            if (std::none_of(s.begin(), s.end(), [&](cplx x) { return std::abs(x - ab) < 1e-12 * std::abs(ab); }))
                s.push_back(ab);
        }
    return s;
}

CursorPtr HadamardProduct::cursor(const Point& zp) const {
    cplx z = zp.z();
    double RF = element_radius(*F_), RG = element_radius(*G_);
    double r = std::isfinite(RF) ? 0.5 * RF : 1.0;
    double lim = std::isfinite(RG) ? 0.25 * r * RG : std::numeric_limits<double>::infinity();
    cplx z_init = std::abs(z) <= lim ? z : z * (lim / std::abs(z));
    auto c = std::make_unique<ProductCursor>(F_, G_, cfg_, z_init);
    c->move_to(Point(z));
    return c;
}

ContourState contour_state(const Cursor& c) {
    auto* p = dynamic_cast<const ProductCursor*>(&c);
    if (!p) throw Error(ErrorCode::InvalidArgument, "not a Hadamard product cursor");
    return p->state();
}

}  // namespace monodromy::convolution
