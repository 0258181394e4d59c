#include "monodromy/germs/series.hpp"

#include <algorithm>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::germs {

namespace {

// c * r^n without intermediate overflow.
cplx scaled(cplx c, double log_r, double n) {
    double m = std::abs(c);
    if (m == 0.0) return 0.0;
    return (c / m) * std::exp(std::log(m) + n * log_r);
}

double scaled_abs(double m, double r, double n) {
    if (m == 0.0 || r == 0.0) return 0.0;
    return std::exp(std::log(m) + n * std::log(r));
}

}  // namespace

std::size_t default_coeff_count(bool singularity_on_circle) {
    return singularity_on_circle ? 4096 : 256;
}

CoeffSeries binomial_series(cplx a, std::size_t m, cplx alpha) {
    CoeffSeries s;
    s.a.resize(m);
    s.declared_radius = std::abs(alpha);
    cplx c = 1.0;
    for (std::size_t n = 0; n < m; ++n) {
        s.a[n] = c;
        c *= (a + double(n)) / (double(n + 1) * alpha);
    }
    return s;
}

CoeffSeries hadamard_coeffs(const CoeffSeries& f, const CoeffSeries& g) {
    CoeffSeries h;
    std::size_t m = std::min(f.size(), g.size());
    h.a.resize(m);
    for (std::size_t n = 0; n < m; ++n) h.a[n] = f.a[n] * g.a[n];
    h.declared_radius = f.declared_radius * g.declared_radius;
    return h;
}

double radius_estimate(const CoeffSeries& s) {
    const std::size_t m = s.size();
    if (m <= 1) return unbounded;
    std::size_t zeros = 0;
    while (zeros < m && s.a[m - 1 - zeros] == 0.0) ++zeros;
    if (zeros >= std::max<std::size_t>(2, m / 4)) return unbounded;  // polynomial
    double best = unbounded;
    for (std::size_t n = std::max<std::size_t>(1, m / 2); n < m; ++n) {
        double mag = std::abs(s.a[n]);
        if (mag == 0.0) continue;
        best = std::min(best, std::exp(-std::log(mag) / double(n)));
    }
    return best;
}

Germ germ_from_series(const CoeffSeries& s) {
    Germ g;
    g.coeffs = s.a;
    if (s.size() <= 1)
        g.trust_radius = unbounded;
    else if (std::isfinite(s.declared_radius))
        g.trust_radius = s.declared_radius;
    else
        g.trust_radius = radius_estimate(s);
    return g;
}

GermValue germ_eval(const Germ& g, cplx z) {
    GermValue out;
    const auto& c = g.coeffs;
    if (c.empty()) return out;
    if (c.size() == 1) {
        out.value = c[0];
        return out;
    }
    cplx w = z - g.center;
    double r = std::abs(w);
    if (!(r < g.trust_radius))
        throw Error(ErrorCode::OutOfDisk, "evaluation point outside the germ's trust disk");
    cplx acc{};
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * w + c[n];
    out.value = acc;
    double q = std::isfinite(g.trust_radius) ? r / g.trust_radius : 0.0;
    double last = scaled_abs(std::abs(c.back()), r, double(c.size() - 1));
    out.tail_estimate = g.err_bound + (q < 1.0 ? last * q / (1.0 - q) : last);
    return out;
}

Germ recenter(const Germ& g, cplx c_new, double theta) {
    cplx delta = c_new - g.center;
    double d = std::abs(delta);
    if (d > theta * g.trust_radius)
        throw Error(ErrorCode::StepViolation, "recenter step exceeds theta * trust radius");
    Germ out;
    out.center = c_new;
    const std::size_t m = g.coeffs.size();
    if (m <= 1) {
        out.coeffs = g.coeffs;
        out.trust_radius = unbounded;
        out.err_bound = g.err_bound;
        return out;
    }
    double rho = std::isfinite(g.trust_radius) ? g.trust_radius : 1.0;
    std::vector<cplx> b(m);
    const double lr = std::log(rho);
    for (std::size_t n = 0; n < m; ++n) b[n] = scaled(g.coeffs[n], lr, double(n));
    cplx dt = delta / rho;
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t k = m - 1; k-- > i;) b[k] += dt * b[k + 1];
    for (std::size_t n = 0; n < m; ++n) b[n] = scaled(b[n], -lr, double(n));
    out.coeffs = std::move(b);
    out.trust_radius = g.trust_radius - d;
    double reach = d + out.trust_radius;
    double q = std::isfinite(g.trust_radius) ? reach / g.trust_radius : 0.0;
    double last = scaled_abs(std::abs(g.coeffs.back()), reach, double(m - 1));
    out.err_bound = g.err_bound + (q < 1.0 ? last / (1.0 - q) : last);
    return out;
}

Germ germ_from_samples(const std::function<cplx(cplx)>& f, cplx center, double radius, int nodes,
                       double trust_radius) {
    if (nodes < 4 || !(radius > 0))
        throw Error(ErrorCode::InvalidArgument, "sampling circle needs >= 4 nodes and positive radius");
    std::vector<cplx> vals(nodes);
    for (int j = 0; j < nodes; ++j) vals[j] = f(center + std::polar(radius, 2.0 * pi * j / nodes));
    Germ g;
    g.center = center;
    g.trust_radius = trust_radius;
    g.coeffs.resize(nodes);
    for (int n = 0; n < nodes; ++n) {
        cplx s{};
        for (int j = 0; j < nodes; ++j) s += vals[j] * std::polar(1.0, -2.0 * pi * double(j) * n / nodes);
        g.coeffs[n] = s / double(nodes) / std::pow(radius, double(n));
    }
    return g;
}

}  // namespace monodromy::germs
