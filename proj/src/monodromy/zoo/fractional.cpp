#include "monodromy/zoo/fractional.hpp"

#include <cmath>

#include "monodromy/error.hpp"
#include "monodromy/numerics/gamma.hpp"

namespace monodromy::zoo {

cplx fractional_integral(const std::function<cplx(cplx)>& f, cplx s, cplx base, cplx z,
                         const numerics::QuadratureConfig& cfg) {
    if (!(s.real() > 0)) throw Error(ErrorCode::DomainError, "fractional order must have positive real part");
    if (z == base) return 0.0;
    // u = base + t (z - base) on [0, 1], so the endpoint offsets stay well scaled for tiny z - base
    const cplx h = z - base;
    auto g = [&](const Point& t) {
        double one_minus_t = -diff(t, 1.0).real();
        return std::exp((s - 1.0) * std::log(one_minus_t)) * f(base + t.z() * h);
    };
    cplx hs = std::exp(s * std::log(h));
    return numerics::complex_rgamma(s) * hs * numerics::segment_integral_singular(g, 0.0, 1.0, cfg).value;
}

cplx iterated_integral(const std::function<cplx(cplx)>& f, int n, cplx base, cplx z) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
    if (n == 0) return f(z);
    return numerics::segment_integral_gauss(
        [&](cplx u) { return iterated_integral(f, n - 1, base, u); }, base, z, 1, 16);
}

}  // namespace monodromy::zoo
