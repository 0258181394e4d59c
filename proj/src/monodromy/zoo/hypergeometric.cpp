#include "monodromy/zoo/hypergeometric.hpp"

#include <cmath>

#include "monodromy/error.hpp"
#include "monodromy/numerics/gamma.hpp"

namespace monodromy::zoo {

namespace {

bool nonpositive_integer(cplx c) {
    return std::abs(c.imag()) < 1e-14 && c.real() <= 0.5 && std::abs(c.real() - std::round(c.real())) < 1e-14;
}

// Taylor step of the hypergeometric ODE from z0 to z0 + h.
void ode_step(cplx a, cplx b, cplx c, cplx z0, cplx h, cplx& y, cplx& dy) {
    const cplx A = z0 - z0 * z0, B = 1.0 - 2.0 * z0, C = c - (a + b + 1.0) * z0, D = -(a + b + 1.0);
    const cplx ab = a * b;
    cplx Y0 = y, Y1 = dy * h;
    cplx sum = Y0 + Y1, dsum = Y1;
    int small = 0;
    for (int n = 0; n < 200; ++n) {
        double nn = n;
        cplx Y2 = -((B * nn * (nn + 1.0) + C * (nn + 1.0)) * Y1 * h +
                    (-nn * (nn - 1.0) + D * nn - ab) * Y0 * h * h) /
                  (A * (nn + 1.0) * (nn + 2.0));
        sum += Y2;
        dsum += (nn + 2.0) * Y2;
        double mag = std::abs(Y2);
        if (mag <= 1e-18 * std::abs(sum)) {
            if (++small >= 3) break;
        } else {
            small = 0;
        }
        Y0 = Y1;
        Y1 = Y2;
    }
    y = sum;
    dy = dsum / h;
}

class Hyp2F1Cursor final : public continuation::SteppingCursor {
public:
    Hyp2F1Cursor(cplx a, cplx b, cplx c, const Point& z) : SteppingCursor(z, {0.0, 1.0}, 0.4), a_(a), b_(b), c_(c) {
        cplx zz = z.z();
        if (std::abs(zz) <= 0.7) {
            auto s = hyp2f1_series(a, b, c, zz);
            y_ = s.value;
            dy_ = s.derivative;
        } else {
            cplx za = 0.7 * zz / std::abs(zz);
            auto s = hyp2f1_series(a, b, c, za);
            y_ = s.value;
            dy_ = s.derivative;
            p_ = Point(za);
            move_to(z);
        }
    }
    cplx value() const override { return y_; }
    CursorPtr clone() const override { return std::make_unique<Hyp2F1Cursor>(*this); }

protected:
    void step(const Point& z) override {
        cplx h = diff(z, p_.anchor) - p_.offset;
        ode_step(a_, b_, c_, p_.z(), h, y_, dy_);
        p_ = z;
    }

private:
    cplx a_, b_, c_;
    cplx y_{}, dy_{};
};

}  // namespace

Hypergeometric2F1::Hypergeometric2F1(cplx a, cplx b, cplx c) : a_(a), b_(b), c_(c) {
    if (nonpositive_integer(c)) throw Error(ErrorCode::DomainError, "c must not be a non-positive integer");
}

CursorPtr Hypergeometric2F1::cursor(const Point& z) const {
    return std::make_unique<Hyp2F1Cursor>(a_, b_, c_, z);
}

Hyp2F1Series hyp2f1_series(cplx a, cplx b, cplx c, cplx z) {
    if (nonpositive_integer(c)) throw Error(ErrorCode::DomainError, "c must not be a non-positive integer");
    if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::DomainError, "series requires |z| < 1");
    Hyp2F1Series out;
    cplx term = 1.0, sum = 1.0, dsum = 0.0, zn = 1.0;
    int small = 0;
    for (int n = 0; n < 100000; ++n) {
        double nn = n;
        term *= (a + nn) * (b + nn) / ((c + nn) * (nn + 1.0));
        cplx dterm = term * (nn + 1.0) * zn;
        zn *= z;
        cplx zt = term * zn;
        sum += zt;
        dsum += dterm;
        out.terms = n + 1;
        if (term == 0.0) break;
        if (std::abs(zt) <= 1e-17 * std::abs(sum) && std::abs(dterm) <= 1e-17 * (std::abs(dsum) + 1e-300)) {
            if (++small >= 3) break;
        } else {
            small = 0;
        }
    }
    out.value = sum;
    out.derivative = dsum;
    return out;
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
    if (std::abs(z) < 0.9) return hyp2f1_series(a, b, c, z).value;
    return Hypergeometric2F1(a, b, c).principal(Point(z));
}

cplx euler_2F1(cplx a, cplx b, cplx c, cplx z, const numerics::QuadratureConfig& cfg) {
    if (!(c.real() > b.real() && b.real() > 0))
        throw Error(ErrorCode::DomainError, "Euler integral requires Re c > Re b > 0");
    if (z.imag() == 0.0 && z.real() >= 1.0) throw Error(ErrorCode::DomainError, "z on the cut [1, inf)");
    auto f = [&](const Point& t) {
        cplx t0 = diff(t, 0.0);
        cplx t1 = -diff(t, 1.0);
        return std::exp((b - 1.0) * std::log(t0) + (c - b - 1.0) * std::log(t1) - a * std::log(1.0 - z * t.z()));
    };
    cplx integral = numerics::segment_integral_singular(f, 0.0, 1.0, cfg).value;
    return numerics::complex_gamma(c) * numerics::complex_rgamma(b) * numerics::complex_rgamma(c - b) * integral;
}

cplx hyp2f1_delta(cplx a, cplx b, cplx c, const Point& z) {
    cplx s = c - a - b;
    if (std::abs(s.imag()) < 1e-12 && std::abs(s.real() - std::round(s.real())) < 1e-12)
        throw Error(ErrorCode::UnsupportedDegenerate, "integer c-a-b: logarithmic case not supported");
    cplx one_minus = -diff(z, 1.0);
    cplx pref = numerics::complex_gamma(c) * numerics::complex_gamma(-s) * numerics::complex_rgamma(a) *
                numerics::complex_rgamma(b);
    cplx mult = std::exp(two_pi_i * s) - 1.0;
    return pref * mult * std::exp(s * std::log(one_minus)) * hyp2f1(c - a, c - b, s + 1.0, one_minus);
}

cplx hyp2f1_connection_term(cplx a, cplx b, cplx c, const Point& z) {
    cplx s = c - a - b;
    cplx zm1 = diff(z, 1.0);
    cplx pref = numerics::complex_gamma(c) * numerics::complex_gamma(-s) * numerics::complex_rgamma(a) *
                numerics::complex_rgamma(b);
    return pref * std::exp(s * std::log(zm1)) * hyp2f1(c - a, c - b, s + 1.0, -zm1);
}

}  // namespace monodromy::zoo
