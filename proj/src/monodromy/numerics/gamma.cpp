#include "monodromy/numerics/gamma.hpp"

#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::numerics {

namespace {

constexpr double kG = 7.0;
constexpr double kCoef[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos(cplx z) {
    z -= 1.0;
    cplx x = kCoef[0];
    for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + double(i));
    cplx t = z + kG + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

bool near_gamma_pole(cplx z, double tol) {
    if (z.real() > 0.5) return false;
    double n = std::round(z.real());
    return std::abs(z - cplx(n, 0.0)) < tol;
}

cplx complex_gamma(cplx z) {
    if (near_gamma_pole(z)) throw Error(ErrorCode::GammaPole, "Gamma evaluated at a pole");
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * lanczos(1.0 - z));
    return lanczos(z);
}

cplx complex_rgamma(cplx z) {
    if (near_gamma_pole(z)) return 0.0;
    return 1.0 / complex_gamma(z);
}

}  // namespace monodromy::numerics
