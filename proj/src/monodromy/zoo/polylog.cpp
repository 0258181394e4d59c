#include "monodromy/zoo/polylog.hpp"

#include <algorithm>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::zoo {

namespace {

constexpr int kCheb = 24;

// Lobatto nodes on [-1, 1] ascending and the cumulative integration matrix from -1.
struct ChebRule {
    double t[kCheb + 1];
    double Q[kCheb + 1][kCheb + 1];

    ChebRule() {
        const int N = kCheb;
        for (int j = 0; j <= N; ++j) t[j] = -std::cos(pi * j / N);
        for (int col = 0; col <= N; ++col) {
            // coefficients of the interpolant of the unit vector e_col
            double c[kCheb + 2] = {};
            for (int k = 0; k <= N; ++k) {
                double s = 0;
                for (int j = 0; j <= N; ++j) {
                    double f = (j == col) ? 1.0 : 0.0;
                    double w = (j == 0 || j == N) ? 0.5 : 1.0;
                    s += w * f * std::cos(pi * k * j / N);
                }
                c[k] = 2.0 * s / N;
            }
            c[0] *= 0.5;
            c[N] *= 0.5;
            // nodes are x_j = cos(pi j / N); t_j = -x_j, so T_k(t) = (-1)^k T_k(x)
            for (int k = 0; k <= N; ++k)
                if (k % 2 == 1) c[k] = -c[k];
            // integral coefficients
            double b[kCheb + 3] = {};
            for (int k = 0; k <= N; ++k) {
                if (k == 0) {
                    b[1] += c[0];
                } else if (k == 1) {
                    b[2] += c[1] / 4.0;
                    b[0] += c[1] / 4.0;  // T_2/4 - 1/4 constant absorbed below
                } else {
                    b[k + 1] += c[k] / (2.0 * (k + 1));
                    b[k - 1] -= c[k] / (2.0 * (k - 1));
                }
            }
            auto eval = [&](double x) {
                double s = 0;
                for (int k = 0; k <= N + 1; ++k) s += b[k] * std::cos(k * std::acos(std::clamp(x, -1.0, 1.0)));
                return s;
            };
            double base = eval(-1.0);
            for (int i = 0; i <= N; ++i) Q[i][col] = eval(t[i]) - base;
        }
    }
};

const ChebRule& cheb() {
    static const ChebRule r;
    return r;
}

class PolylogCursor final : public continuation::SteppingCursor {
public:
    PolylogCursor(int k, cplx scale, const Point& z) : SteppingCursor(z, {0.0, 1.0}, 0.4), k_(k), scale_(scale) {
        li_.assign(k + 1, 0.0);
        cplx zz = z.z();
        cplx one_minus = -diff(z, 1.0);
        if (one_minus == 0.0) throw Error(ErrorCode::PathTooClose, "polylog evaluated at 1");
        if (std::abs(zz) <= 0.5) {
            L1_ = std::log(one_minus);
            li_[1] = -L1_;
            for (int j = 2; j <= k_; ++j) {
                cplx s{}, p = zz;
                for (int n = 1; n <= 90; ++n) {
                    s += p / std::pow(double(n), j);
                    p *= zz;
                }
                li_[j] = s;
            }
        } else {
            p_ = Point(0.5 * zz / std::abs(zz));
            cplx a = p_.z();
            L1_ = std::log(1.0 - a);
            li_[1] = -L1_;
            for (int j = 2; j <= k_; ++j) {
                cplx s{}, p = a;
                for (int n = 1; n <= 90; ++n) {
                    s += p / std::pow(double(n), j);
                    p *= a;
                }
                li_[j] = s;
            }
            move_to(z);
        }
    }
    cplx value() const override { return scale_ * li_[k_]; }
    CursorPtr clone() const override { return std::make_unique<PolylogCursor>(*this); }
    cplx li(int j) const { return li_[j]; }

protected:
    void step(const Point& z) override {
        const auto& R = cheb();
        const int N = kCheb;
        cplx z0 = p_.z();
        cplx om0 = -diff(p_, 1.0);
        cplx h = diff(z, p_.anchor) - p_.offset;  // z - z0
        cplx om1 = -diff(z, 1.0);
        if (om1 == 0.0) throw Error(ErrorCode::PathTooClose, "polylog continuation hits 1");
        std::vector<cplx> prev(N + 1), u(N + 1);
        for (int i = 0; i <= N; ++i) {
            cplx dz = 0.5 * (R.t[i] + 1.0) * h;
            u[i] = z0 + dz;
            cplx om = (i == N) ? om1 : om0 - dz;
            prev[i] = -(L1_ + std::log(om / om0));
        }
        cplx L1_new = -prev[N];
        for (int j = 2; j <= k_; ++j) {
            std::vector<cplx> g(N + 1), cur(N + 1);
            for (int i = 0; i <= N; ++i) g[i] = prev[i] / u[i];
            for (int i = 0; i <= N; ++i) {
                cplx s{};
                for (int c = 0; c <= N; ++c) s += R.Q[i][c] * g[c];
                cur[i] = li_[j] + 0.5 * h * s;
            }
            li_[j] = cur[N];
            prev.swap(cur);
        }
        L1_ = L1_new;
        li_[1] = -L1_;
        p_ = z;
    }

private:
    int k_;
    cplx scale_;
    cplx L1_{};
    std::vector<cplx> li_;
};

}  // namespace

PolylogElement::PolylogElement(int k, cplx scale) : k_(k), scale_(scale) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "polylog order must be >= 1");
}

CursorPtr PolylogElement::cursor(const Point& z) const {
    return std::make_unique<PolylogCursor>(k_, scale_, z);
}

namespace {

// zeta(k), k >= 2, by Euler-Maclaurin with N = 20
double zeta_int(int k) {
    const int N = 20;
    double s = 0;
    for (int n = N - 1; n >= 1; --n) s += std::pow(double(n), -k);
    double x = double(N);
    s += std::pow(x, 1.0 - k) / (k - 1) + 0.5 * std::pow(x, -k);
    s += k * std::pow(x, -k - 1.0) / 12.0;
    s -= k * (k + 1.0) * (k + 2.0) * std::pow(x, -k - 3.0) / 720.0;
    s += k * (k + 1.0) * (k + 2.0) * (k + 3.0) * (k + 4.0) * std::pow(x, -k - 5.0) / 30240.0;
    return s;
}

}  // namespace

cplx polylog_eval(int k, const Point& z) {
    if (k >= 2 && z.z() == 1.0) return zeta_int(k);
    return PolylogElement(k).principal(z);
}

cplx polylog_delta_exact(int k, const Point& z) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "polylog order must be >= 1");
    cplx L = std::log(z.z());
    double fact = std::tgamma(double(k));
    return -two_pi_i * std::pow(L, k - 1) / fact;
}

}  // namespace monodromy::zoo
