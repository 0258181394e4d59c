#include "monodromy/zoo/algebraic.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::zoo {

namespace {

cplx poly(const std::vector<cplx>& c, cplx z) {
    cplx s{};
    for (size_t i = c.size(); i-- > 0;) s = s * z + c[i];
    return s;
}

cplx dpoly(const std::vector<cplx>& c, cplx z) {
    cplx s{};
    for (size_t i = c.size(); i-- > 1;) s = s * z + double(i) * c[i];
    return s;
}

constexpr double kCoalesce = 1e-6;

class AlgebraicCursor final : public continuation::SteppingCursor {
public:
    AlgebraicCursor(const AlgebraicElement* e, const Point& z, cplx w)
        : SteppingCursor(z, e->singularities(), 0.4), e_(e), w_(w) {}
    cplx value() const override { return w_; }
    CursorPtr clone() const override { return std::make_unique<AlgebraicCursor>(*this); }

protected:
    void step(const Point& z) override {
        advance(p_.z(), z.z(), 0);
        p_ = z;
    }

private:
    void advance(cplx z0, cplx z1, int depth) {
        if (depth > 30) throw Error(ErrorCode::PathTooClose, "predictor-corrector failed to track the root");
        cplx pw = e_->eval_pw(z0, w_);
        if (pw == 0.0) throw Error(ErrorCode::PathTooClose, "root is critical");
        cplx wp = w_ - e_->eval_pz(z0, w_) / pw * (z1 - z0);
        cplx w = wp;
        for (int it = 0; it < 50; ++it) {
            cplx d = e_->eval_p(z1, w) / e_->eval_pw(z1, w);
            w -= d;
            if (std::abs(d) <= 1e-15 * (1.0 + std::abs(w))) break;
        }
        auto r = e_->roots(z1);
        double sep = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t j = i + 1; j < r.size(); ++j) sep = std::min(sep, std::abs(r[i] - r[j]));
        if (sep < kCoalesce) throw Error(ErrorCode::PathTooClose, "two roots come within 1e-6");
        size_t best = 0;
        for (size_t i = 1; i < r.size(); ++i)
            if (std::abs(r[i] - wp) < std::abs(r[best] - wp)) best = i;
        bool ok = std::abs(r[best] - w) < 0.1 * sep && std::abs(wp - w) < 0.3 * sep;
        if (!ok) {
            cplx mid = 0.5 * (z0 + z1);
            advance(z0, mid, depth + 1);
            advance(mid, z1, depth + 1);
            return;
        }
        w_ = w;
    }

    const AlgebraicElement* e_;
    cplx w_;
};

}  // namespace

AlgebraicElement::AlgebraicElement(std::vector<std::vector<cplx>> p, std::vector<cplx> ramification,
                                   cplx home_root, cplx home, std::string label)
    : p_(std::move(p)), ram_(std::move(ramification)), home_root_(home_root), home_(home),
      label_(std::move(label)) {
    if (p_.size() < 2) throw Error(ErrorCode::InvalidArgument, "algebraic element needs w-degree >= 1");
    if (std::abs(eval_p(home_, home_root_)) > 1e-10 * (1.0 + std::abs(home_root_)))
        throw Error(ErrorCode::InvalidArgument, "home root does not satisfy the polynomial");
}

cplx AlgebraicElement::eval_p(cplx z, cplx w) const {
    cplx s{};
    for (size_t i = p_.size(); i-- > 0;) s = s * w + poly(p_[i], z);
    return s;
}

cplx AlgebraicElement::eval_pw(cplx z, cplx w) const {
    cplx s{};
    for (size_t i = p_.size(); i-- > 1;) s = s * w + double(i) * poly(p_[i], z);
    return s;
}

cplx AlgebraicElement::eval_pz(cplx z, cplx w) const {
    cplx s{};
    for (size_t i = p_.size(); i-- > 0;) s = s * w + dpoly(p_[i], z);
    return s;
}

std::vector<cplx> AlgebraicElement::roots(cplx z) const {
    const int d = degree();
    cplx lead = poly(p_[d], z);
    if (lead == 0.0) throw Error(ErrorCode::DomainError, "leading coefficient vanishes");
    if (d == 1) return {-poly(p_[0], z) / lead};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -poly(p_[i], z) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> r(d);
    for (int i = 0; i < d; ++i) {
        cplx w = es.eigenvalues()(i);
        for (int it = 0; it < 5; ++it) {
            cplx pw = eval_pw(z, w);
            if (pw == 0.0) break;
            w -= eval_p(z, w) / pw;
        }
        r[i] = w;
    }
    return r;
}

CursorPtr AlgebraicElement::cursor(const Point& z) const {
    auto c = std::make_unique<AlgebraicCursor>(this, Point(home_), home_root_);
    c->move_to(z);
    return c;
}

std::shared_ptr<AlgebraicElement> AlgebraicElement::sqrt_one_minus_z() {
    return std::make_shared<AlgebraicElement>(
        std::vector<std::vector<cplx>>{{-1.0, 1.0}, {0.0}, {1.0}}, std::vector<cplx>{1.0}, 1.0, 0.0,
        "sqrt(1-z)");
}

std::shared_ptr<AlgebraicElement> AlgebraicElement::shifted_sqrt() {
    return std::make_shared<AlgebraicElement>(
        std::vector<std::vector<cplx>>{{0.0, 1.0}, {-2.0}, {1.0}}, std::vector<cplx>{1.0}, 2.0, 0.0,
        "1+sqrt(1-z)");
}

std::shared_ptr<AlgebraicElement> AlgebraicElement::cubic() {
    double r = 2.0 / (3.0 * std::sqrt(3.0));
    return std::make_shared<AlgebraicElement>(
        std::vector<std::vector<cplx>>{{0.0, -1.0}, {-1.0}, {0.0}, {1.0}}, std::vector<cplx>{r, -r}, 1.0,
        0.0, "w^3-w-z");
}

}  // namespace monodromy::zoo
