#include "monodromy/zoo/power.hpp"

#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::zoo {

namespace {

// Continuous log(q(z)) for q(z) = c * (z - s).
class LogCursor final : public continuation::SteppingCursor {
public:
    LogCursor(const Point& z, cplx s, cplx c, std::function<cplx(cplx)> out)
        : SteppingCursor(z, {s}, 0.4), s_(s), c_(c), out_(std::move(out)) {
        q_ = c_ * diff(z, s_);
        if (q_ == 0.0) throw Error(ErrorCode::PathTooClose, "evaluation at a branch point");
        L_ = std::log(q_);
    }
    cplx value() const override { return out_(L_); }
    CursorPtr clone() const override { return std::make_unique<LogCursor>(*this); }
    cplx log_value() const { return L_; }

protected:
    void step(const Point& z) override {
        cplx q = c_ * diff(z, s_);
        if (q == 0.0) throw Error(ErrorCode::PathTooClose, "continuation hits a branch point");
        L_ += std::log(q / q_);
        q_ = q;
        p_ = z;
    }

private:
    cplx s_, c_;
    std::function<cplx(cplx)> out_;
    cplx q_{}, L_{};
};

}  // namespace

PowerBranch::PowerBranch(cplx alpha, cplx a, cplx scale) : alpha_(alpha), a_(a), scale_(scale) {
    if (alpha == 0.0) throw Error(ErrorCode::InvalidArgument, "power branch point must be nonzero");
}

CursorPtr PowerBranch::cursor(const Point& z) const {
    cplx a = a_, sc = scale_;
    return std::make_unique<LogCursor>(z, alpha_, -1.0 / alpha_,
                                       [a, sc](cplx L) { return sc * std::exp(-a * L); });
}

LogBranch::LogBranch(cplx alpha, cplx scale) : alpha_(alpha), scale_(scale) {
    if (alpha == 0.0) throw Error(ErrorCode::InvalidArgument, "log branch point must be nonzero");
}

CursorPtr LogBranch::cursor(const Point& z) const {
    cplx sc = scale_;
    return std::make_unique<LogCursor>(z, alpha_, -1.0 / alpha_, [sc](cplx L) { return sc * L; });
}

AlgebroGeometricElement::AlgebroGeometricElement(cplx alpha, cplx a, int n, std::vector<cplx> phi)
    : alpha_(alpha), a_(a), n_(n), phi_(std::move(phi)) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "log power must be >= 0");
    if (phi_.size() > 5) throw Error(ErrorCode::InvalidArgument, "phi degree must be <= 4");
    if (phi_.empty()) phi_.push_back(1.0);
}

cplx AlgebroGeometricElement::phi_at(cplx z) const {
    cplx s{};
    for (size_t i = phi_.size(); i-- > 0;) s = s * z + phi_[i];
    return s;
}

namespace {

class AlgebroCursor final : public continuation::SteppingCursor {
public:
    AlgebroCursor(const AlgebroGeometricElement* e, const Point& z)
        : SteppingCursor(z, {e->alpha()}, 0.4), e_(e) {
        q_ = diff(z, e_->alpha());
        if (q_ == 0.0) throw Error(ErrorCode::PathTooClose, "evaluation at a branch point");
        L_ = std::log(q_);
    }
    cplx value() const override {
        cplx l = L_ / two_pi_i;
        return std::exp(-e_->exponent() * L_) * std::pow(l, e_->log_power()) * e_->phi_at(p_.z());
    }
    CursorPtr clone() const override { return std::make_unique<AlgebroCursor>(*this); }

protected:
    void step(const Point& z) override {
        cplx q = diff(z, e_->alpha());
        if (q == 0.0) throw Error(ErrorCode::PathTooClose, "continuation hits a branch point");
        L_ += std::log(q / q_);
        q_ = q;
        p_ = z;
    }

private:
    const AlgebroGeometricElement* e_;
    cplx q_{}, L_{};
};

}  // namespace

CursorPtr AlgebroGeometricElement::cursor(const Point& z) const {
    return std::make_unique<AlgebroCursor>(this, z);
}

cplx power_multiplier(cplx a) { return std::exp(double(orientation_sign) * two_pi_i * a); }

cplx power_sigma_exact(const PowerBranch& p, const Point& z, int k) {
    cplx q = -diff(z, p.alpha()) / p.alpha();
    return p.scale() * std::exp(-p.exponent() * std::log(q)) * std::pow(power_multiplier(p.exponent()), k);
}

cplx algebro_geometric_sigma(const AlgebroGeometricElement& e, const Point& z, int k) {
    cplx L = std::log(diff(z, e.alpha()));
    cplx l = L / two_pi_i + double(k);
    return std::exp(-e.exponent() * L) * std::pow(power_multiplier(e.exponent()), k) *
           std::pow(l, e.log_power()) * e.phi_at(z.z());
}

}  // namespace monodromy::zoo

#include <Eigen/Dense>

namespace monodromy::zoo {

std::vector<cplx> vandermonde_recurrence(int n, cplx a) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "log power must be >= 0");
    const int m = n + 1;
    Eigen::MatrixXd V(m, m);
    Eigen::VectorXd rhs(m);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) V(j, k) = std::pow(double(k), j);
        rhs(j) = -std::pow(double(n + 1), j);
    }
    Eigen::VectorXd d = V.fullPivLu().solve(rhs);
    cplx lambda = power_multiplier(a);
    std::vector<cplx> out(m);
    for (int k = 0; k < m; ++k) out[k] = -d(k) * std::pow(lambda, n + 1 - k);
    return out;
}

}  // namespace monodromy::zoo
