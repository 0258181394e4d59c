#include "monodromy/zoo/elliptic.hpp"

#include <cmath>

#include "monodromy/error.hpp"
#include "monodromy/germs/series.hpp"

namespace monodromy::zoo {

double elliptic_K_norm(double ksq, const numerics::QuadratureConfig& cfg) {
    if (!(ksq >= 0.0 && ksq < 1.0)) throw Error(ErrorCode::DomainError, "ksq must lie in [0, 1)");
    auto f = [&](const Point& p) {
        double u = p.z().real();
        double one_minus = -diff(p, 1.0).real();
        return cplx(1.0 / std::sqrt(one_minus * (1.0 + u) * (1.0 - ksq * u * u)), 0.0);
    };
    return 2.0 / pi * numerics::segment_integral_singular(f, 0.0, 1.0, cfg).value.real();
}

double elliptic_K_norm_agm(double ksq) {
    if (!(ksq >= 0.0 && ksq < 1.0)) throw Error(ErrorCode::DomainError, "ksq must lie in [0, 1)");
    double a = 1.0, b = std::sqrt(1.0 - ksq);
    for (int i = 0; i < 60 && std::abs(a - b) > 1e-17 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 1.0 / a;
}

double elliptic_K_norm_series(double ksq, std::size_t m) {
    auto c = germs::binomial_series(0.5, m);
    double s = 0, p = 1;
    for (std::size_t n = 0; n < m; ++n) {
        s += std::norm(c.a[n]) * p;
        p *= ksq;
    }
    return s;
}

cplx modular_delta_closed_form(const Point& z, const numerics::QuadratureConfig& cfg) {
    const cplx zz = z.z();
    if (diff(z, 1.0) == 0.0) return 0.0;
    auto f = [&](const Point& u) {
        cplx uu = u.z();
        cplx one_minus_u = -diff(u, 1.0);
        cplx one_minus_zu = diff(u, zz) / uu;
        return 1.0 / (uu * std::sqrt(one_minus_u) * std::sqrt(one_minus_zu));
    };
    cplx I = numerics::segment_integral_singular(f, 1.0, zz, cfg).value;
    return -4.0 / two_pi_i * I;
}

}  // namespace monodromy::zoo
