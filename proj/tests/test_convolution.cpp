#include <cmath>
#include <random>

#include "doctest.h"
#include "monodromy/continuation/element.hpp"
#include "monodromy/convolution/residuals.hpp"
#include "monodromy/error.hpp"
#include "monodromy/germs/series.hpp"
#include "monodromy/numerics/quadrature.hpp"
#include "monodromy/zoo/elliptic.hpp"
#include "monodromy/zoo/polylog.hpp"
#include "monodromy/zoo/power.hpp"

using namespace monodromy;
using namespace monodromy::convolution;
using continuation::ElementPtr;
using zoo::PowerBranch;

namespace {

ElementPtr power(cplx alpha, cplx a, cplx scale = 1.0) { return std::make_shared<PowerBranch>(alpha, a, scale); }

ElementPtr polynomial() {
    return std::make_shared<zoo::AlgebroGeometricElement>(1.0, 0.0, 0, std::vector<cplx>{1.0, 0.5, 0.25});
}

}  // namespace

TEST_CASE("contour evaluation of simple products") {
    PowerBranch g2(2.0, 1.0);
    CHECK(std::abs(hadamard_eval_contour(g2, g2, 1.0, 1.0) - 4.0 / 3.0) < 1e-13);
    PowerBranch h(1.0, 0.5);
    CHECK(std::abs(hadamard_eval_contour(h, h, 0.0, 0.5) - 1.0) < 1e-14);
    auto b = germs::binomial_series(0.5, 2000);
    auto c = germs::hadamard_coeffs(b, b);
    cplx s = 0, p = 1;
    for (auto a : c.a) {
        s += a * p;
        p *= 0.25;
    }
    CHECK(std::abs(hadamard_eval_contour(h, h, 0.25, 0.5) - s) < 1e-13);
}

TEST_CASE("contour value does not depend on the radius") {
    PowerBranch f(1.0, 1.0 / 3), g(1.0, 0.2);
    cplx z(0.3, 0.1);
    cplx v = hadamard_eval_contour(f, g, z, 0.5);
    for (double r : {0.4, 0.7, 0.9}) CHECK(std::abs(hadamard_eval_contour(f, g, z, r) - v) < 1e-12);
}

TEST_CASE("contour against coefficients at 30 random points") {
    PowerBranch f(1.0, 1.0 / 3), g(1.0, 0.2);
    auto c = germs::hadamard_coeffs(germs::binomial_series(1.0 / 3, 3000), germs::binomial_series(0.2, 3000));
    auto germ = germs::germ_from_series(c);
    germ.trust_radius = 1.0;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        cplx z = std::polar(0.6 * std::sqrt(U(rng)), 2 * pi * U(rng));
        double r = std::sqrt(std::max(std::abs(z), 0.05));
        CHECK(std::abs(hadamard_eval_contour(f, g, z, r) - germs::germ_eval(germ, z).value) < 1e-12);
    }
}

TEST_CASE("product element on the principal sheet and after one loop") {
    HadamardProduct H(power(1.0, 0.5), power(1.0, 0.5));
    cplx z(0.5, 0.25);
    CHECK(std::abs(H.principal(z) - cplx(1.14757476439692275, 0.123840747230243667)) < 1e-12);
    auto v = product_branch_values(H, 1.0, 0.5, 1);
    CHECK(std::abs(v[1] - v[0] - zoo::modular_delta_closed_form(cplx(0.5))) < 1e-5);
    auto c = H.cursor(z);
    auto st = contour_state(*c);
    CHECK(st.z == z);
    CHECK(st.moving.size() == 1);
}

TEST_CASE("pair decomposition") {
    auto pd = decompose_pairs({2.0, 3.0}, {3.0, 2.0}, 6.0);
    CHECK(pd.pairs.size() == 2);
    for (auto [a, b] : pd.pairs) CHECK(std::abs(a * b - 6.0) < 1e-12);
    CHECK(decompose_pairs({2.0}, {2.0}, 6.0).pairs.empty());
}

TEST_CASE("bar-star trivial cases") {
    auto f = power(1.0, 0.5), zero = power(1.0, 0.5, 0.0);
    CHECK(std::abs(bar_star(*zero, *f, 1.0, 1.0, cplx(0.5, 0.2)).value) == 0.0);
    CHECK(bar_star(*f, *f, 1.0, 1.0, 1.0).value == 0.0);
}

TEST_CASE("bar-star of the square-root monodromies against the closed form") {
    auto F = power(1.0, 0.5);
    continuation::DeltaElement d(F, 1.0, 0);
    double z = 0.5;
    // -(4 / 2 pi i) int_1^z du / (u sqrt(1-u) sqrt(1-z/u)), reduced to 2 int_0^{pi/2} dphi / sqrt(z + (1-z) sin^2)
    cplx I = numerics::segment_integral_gauss(
        [&](cplx p) { return 2.0 / std::sqrt(z + (1 - z) * std::sin(p) * std::sin(p)); }, 0.0, pi / 2, 4, 20);
    cplx oracle = 4.0 / two_pi_i * I;
    CHECK(std::abs(bar_star(d, d, 1.0, 1.0, z).value - oracle) < 1e-10);
}

TEST_CASE("iterated formula at the reference point") {
    auto F = power(1.0, 0.5);
    cplx z(0.5, 0.25);
    auto r1 = iterated_formula_residual(F, F, 1.0, 1, z);
    CHECK(r1.residual < 1e-5);
    CHECK(std::abs(r1.lhs) > 0.1);
    auto r3 = iterated_formula_residual(F, F, 1.0, 3, z);
    cplx sum = 0;
    for (int k = 0; k < 3; ++k) sum += pair_term(F, F, 1.0, 1.0, z, k).value;
    CHECK(std::abs(r3.rhs - sum) < 1e-14);
    CHECK(r3.residual < 1e-5);
}

TEST_CASE("iterated formula with holomorphic factors") {
    auto P = polynomial();
    auto r = iterated_formula_residual(P, P, 1.0, 1, cplx(0.7, 0.2));
    CHECK(std::abs(r.lhs) < 1e-10);
    CHECK(std::abs(r.rhs) < 1e-10);
}

TEST_CASE("morphism residuals") {
    auto F = power(1.0, 0.5);
    cplx z(0.5, 0.25);
    auto m0 = morphism_residual(F, F, 1.0, 0, z);
    auto e1 = iterated_formula_residual(F, F, 1.0, 1, z);
    CHECK(std::abs(m0.lhs - e1.lhs) < 1e-10);
    CHECK(std::abs(m0.rhs - e1.rhs) < 1e-14);
    CHECK(morphism_residual(F, F, 1.0, 1, z).residual < 1e-4);
    auto P = polynomial();
    CHECK(morphism_residual(P, P, 1.0, 1, z).residual < 1e-10);
}

TEST_CASE("multi-factor right-hand side") {
    auto F = power(1.0, 0.5);
    cplx z(1.3, 0.2);
    for (int N = 1; N <= 2; ++N)
        CHECK(std::abs(multi_factor_rhs({F, F}, 1.0, N, z) - iterated_formula_residual(F, F, 1.0, N, z).rhs) < 1e-14);
    cplx v = multi_factor_rhs({F, F, F}, 1.0, 1, z, 256);
    CHECK(std::isfinite(std::abs(v)));
    CHECK(std::abs(multi_factor_rhs({F, F, polynomial()}, 1.0, 1, z, 64)) < 1e-12);
    CHECK_THROWS_AS(multi_factor_rhs({F, F, F, F}, 1.0, 1, z), Error);
}

TEST_CASE("fundamental formula") {
    auto P = polynomial();
    auto rp = fundamental_formula_residual(P, 1.0, cplx(0.5, 0.5));
    CHECK(std::abs(rp.lhs) < 1e-12);
    CHECK(std::abs(rp.rhs) < 1e-12);
    auto li = std::make_shared<continuation::ScaledElement>(
        std::make_shared<zoo::PolylogElement>(1), [](const Point& u) { return 1.0 / u.z(); }, std::vector<cplx>{0.0},
        "li1/u");
    cplx z(0.5, 0.3);
    auto rl = fundamental_formula_residual(li, 1.0, z);
    CHECK(std::abs(rl.lhs + two_pi_i * std::log(z)) < 1e-8);
    CHECK(std::abs(rl.rhs + two_pi_i * std::log(z)) < 1e-8);
    auto rs = fundamental_formula_residual(power(1.0, 0.5, cplx(0, -1)), 1.0, cplx(0.5, 0.5));
    CHECK(rs.residual < 1e-8);
}

TEST_CASE("bar-star monodromy") {
    auto F = power(1.0, 0.5);
    auto P = polynomial();
    CHECK(barstar_monodromy_residual(P, P, 1.0, 1.0, cplx(0.5, 0.25)).residual < 1e-12);
    CHECK(barstar_monodromy_residual(F, F, 1.0, 1.0, cplx(0.5, 0.25)).residual < 1e-4);
    auto r = barstar_monodromy_residual(power(1.0, 1.0 / 3), power(1.0, 0.2), 1.0, 1.0, cplx(0.5, 0.25));
    CHECK(std::abs(r.lhs) > 0.1);
    CHECK(r.residual < 1e-4);
}

TEST_CASE("annulus points are deterministic and in range") {
    auto a = annulus_points(1.0, 20, 42), b = annulus_points(1.0, 20, 42), c = annulus_points(1.0, 20, 43);
    CHECK(a == b);
    CHECK(a != c);
    for (cplx z : a) {
        double r = std::abs(z - 1.0);
        CHECK(r >= 0.2);
        CHECK(r <= 0.6);
        CHECK(std::abs(std::arg(z - 1.0)) >= 10.0 * pi / 180 - 1e-12);
    }
}

TEST_CASE("dn-adic digits and regrouping") {
    auto d = dn_adic_digits(7, 2, 2);
    CHECK(d.K2 == 1);
    CHECK(d.K1 == 1);
    CHECK(d.K0 == 1);
    std::mt19937_64 rng(9);
    std::normal_distribution<double> N;
    // T periodic with period D2 = 4 for the regrouping to hold
    std::vector<cplx> base(4);
    for (auto& t : base) t = {N(rng), N(rng)};
    std::vector<cplx> T(12);
    for (size_t k = 0; k < T.size(); ++k) T[k] = base[k % 4];
    cplx direct = 0;
    for (int n = 1; n <= 12; ++n) {
        direct += T[n - 1];
        CHECK(std::abs(dn_adic_sum(T, n, 2, 2) - direct) < 1e-13);
    }
}
