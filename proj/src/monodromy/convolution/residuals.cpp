#include "monodromy/convolution/residuals.hpp"

#include <cmath>
#include <random>

#include "monodromy/continuation/path.hpp"
#include "monodromy/error.hpp"
#include "monodromy/zoo/descriptor.hpp"

namespace monodromy::convolution {

using continuation::DeltaElement;
using continuation::Path;
using continuation::PrimitiveElement;

nlohmann::json ResidualRecord::to_json() const {
    return {{"identity", identity},
            {"parameters", parameters},
            {"z", zoo::complex_to_json(z)},
            {"lhs", zoo::complex_to_json(lhs)},
            {"rhs", zoo::complex_to_json(rhs)},
            {"residual", residual},
            {"err_estimates", err_estimates}};
}

std::vector<cplx> product_branch_values(const HadamardProduct& H, cplx gamma, cplx z, int n_max) {
    std::vector<cplx> out;
    auto c = H.cursor(Point(z));
    out.push_back(c->value());
    const auto loop = Path::loop(gamma, z, 1);
    for (int n = 1; n <= n_max; ++n) {
        c->follow(loop);
        c->move_to(Point(z));
        out.push_back(c->value());
    }
    return out;
}

BarStarResult pair_term(const ElementPtr& F, const ElementPtr& G, cplx alpha, cplx beta, cplx z, int k,
                        const numerics::QuadratureConfig& cfg) {
    DeltaElement f(F, alpha, k), g(G, beta, k);
    return bar_star(f, g, alpha, beta, z, cfg);
}

std::vector<cplx> iterated_terms(const ElementPtr& F, const ElementPtr& G, cplx gamma, cplx z, int K,
                                 const numerics::QuadratureConfig& cfg) {
    auto pd = decompose_pairs(F->singularities(), G->singularities(), gamma);
    std::vector<cplx> T(K, 0.0);
    for (int k = 0; k < K; ++k)
        for (auto [a, b] : pd.pairs) T[k] += pair_term(F, G, a, b, z, k, cfg).value;
    return T;
}

namespace {

nlohmann::json describe_pair(const ElementPtr& F, const ElementPtr& G, cplx gamma) {
    return {{"F", zoo::describe(*F)}, {"G", zoo::describe(*G)}, {"gamma", zoo::complex_to_json(gamma)}};
}

}  // namespace

ResidualRecord iterated_formula_residual(const ElementPtr& F, const ElementPtr& G, cplx gamma, int N, cplx z,
                                         const numerics::QuadratureConfig& cfg) {
    if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
    ResidualRecord r;
    r.identity = "iterated-monodromy";
    r.parameters = describe_pair(F, G, gamma);
    r.parameters["N"] = N;
    r.z = z;
    HadamardProduct H(F, G);
    auto vals = product_branch_values(H, gamma, z, N);
    r.lhs = vals[N] - vals[0];
    auto pd = decompose_pairs(F->singularities(), G->singularities(), gamma);
    double err = 0;
    for (int k = 0; k < N; ++k)
        for (auto [a, b] : pd.pairs) {
            auto t = pair_term(F, G, a, b, z, k, cfg);
            r.rhs += t.value;
            err += t.err_estimate;
        }
    r.residual = std::abs(r.lhs - r.rhs);
    r.err_estimates["rhs"] = err;
    return r;
}

ResidualRecord morphism_residual(const ElementPtr& F, const ElementPtr& G, cplx gamma, int k, cplx z,
                                 const numerics::QuadratureConfig& cfg) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
    ResidualRecord r;
    r.identity = "morphism";
    r.parameters = describe_pair(F, G, gamma);
    r.parameters["k"] = k;
    r.z = z;
    HadamardProduct H(F, G);
    auto vals = product_branch_values(H, gamma, z, k + 1);
    r.lhs = vals[k + 1] - vals[k];
    auto pd = decompose_pairs(F->singularities(), G->singularities(), gamma);
    double err = 0;
    for (auto [a, b] : pd.pairs) {
        auto t = pair_term(F, G, a, b, z, k, cfg);
        r.rhs += t.value;
        err += t.err_estimate;
    }
    r.residual = std::abs(r.lhs - r.rhs);
    r.err_estimates["rhs"] = err;
    return r;
}

namespace {

std::vector<cplx> nonzero_sing(const ElementPtr& e) {
    std::vector<cplx> out;
    for (auto s : e->singularities())
        if (std::abs(s) > 0.0) out.push_back(s);
    return out;
}

void tuples(const std::vector<std::vector<cplx>>& sets, size_t i, std::vector<cplx>& cur, cplx prod, cplx gamma,
            std::vector<std::vector<cplx>>& out) {
    if (i == sets.size()) {
        if (std::abs(prod - gamma) <= 1e-9 * std::abs(gamma)) out.push_back(cur);
        return;
    }
    for (auto s : sets[i]) {
        cur.push_back(s);
        tuples(sets, i + 1, cur, prod * s, gamma, out);
        cur.pop_back();
    }
}

}  // namespace

cplx multi_factor_rhs(const std::vector<ElementPtr>& factors, cplx gamma, int N, cplx z, int base_nodes,
                      const numerics::QuadratureConfig& cfg) {
    const size_t n = factors.size();
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two factors");
    if (n > 3) throw Error(ErrorCode::UnsupportedDepth, "nested bar-star depth above 3 is not supported");
    if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
    if (n == 2) {
        cplx s = 0;
        for (auto t : iterated_terms(factors[0], factors[1], gamma, z, N, cfg)) s += t;
        return s;
    }
    std::vector<std::vector<cplx>> sets;
    for (const auto& f : factors) sets.push_back(nonzero_sing(f));
    std::vector<std::vector<cplx>> tup;
    std::vector<cplx> cur;
    tuples(sets, 0, cur, 1.0, gamma, tup);

    cplx total = 0;
    for (int k = 0; k < N; ++k) {
        for (const auto& al : tup) {
            // innermost first
            ElementPtr h = std::make_shared<DeltaElement>(factors[n - 1], al[n - 1], k);
            cplx g_prod = al[n - 1];
            for (size_t i = n - 1; i-- > 1;) {
                auto q = cfg;
                q.fixed_nodes = std::max(16, base_nodes >> (2 * i));
                auto f = std::make_shared<DeltaElement>(factors[i], al[i], k);
                h = std::make_shared<BarStarElement>(f, h, al[i], g_prod, q);
                g_prod *= al[i];
            }
            auto q = cfg;
            q.fixed_nodes = base_nodes;
            DeltaElement f0(factors[0], al[0], k);
            total += bar_star(f0, *h, al[0], g_prod, z, q).value;
        }
    }
    return total;
}

ResidualRecord fundamental_formula_residual(const ElementPtr& f, cplx alpha, cplx z,
                                            const numerics::QuadratureConfig& cfg) {
    ResidualRecord r;
    r.identity = "integro-monodromy";
    r.parameters = {{"f", zoo::describe(*f)}, {"alpha", zoo::complex_to_json(alpha)}};
    r.z = z;
    PrimitiveElement prim(f, alpha, cfg);
    auto c = prim.cursor(Point(z));
    cplx v0 = c->value();
    c->follow(Path::loop(alpha, z, 1));
    c->move_to(Point(z));
    r.lhs = c->value() - v0;
    DeltaElement d(f, alpha, 0);
    auto q = continuation::integrate_segment(*d.cursor(Point(0.5 * (alpha + z))), alpha, z, cfg);
    r.rhs = q.value;
    r.err_estimates["rhs"] = q.err_estimate;
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

ResidualRecord barstar_monodromy_residual(const ElementPtr& F, const ElementPtr& G, cplx alpha, cplx beta, cplx z,
                                          int k, const numerics::QuadratureConfig& cfg) {
    ResidualRecord r;
    r.identity = "barstar-monodromy";
    r.parameters = describe_pair(F, G, alpha * beta);
    r.parameters["alpha"] = zoo::complex_to_json(alpha);
    r.parameters["beta"] = zoo::complex_to_json(beta);
    r.parameters["k"] = k;
    r.z = z;
    const cplx gamma = alpha * beta;
    DeltaElement f(F, alpha, k), g(G, beta, k);
    auto B = bar_star(f, g, alpha, beta, z, cfg);

    const cplx p0 = z / beta;
    const double s = std::abs(p0 - alpha);
    if (s == 0.0) throw Error(ErrorCode::InvalidArgument, "z must differ from alpha beta");
    const double th0 = std::arg(p0 - alpha);
    std::vector<cplx> g_sing;
    for (auto b : G->singularities())
        if (std::abs(b) > 0.0) g_sing.push_back(b);

    // Integrand at the radius midpoint, carried once around gamma in z.
    const cplx m = 0.5 * (alpha + p0);
    ConvolutionIntegrand st(f.cursor(Point(m)), g.cursor(Point(z / m)), z, g_sing, std::make_pair(p0, beta));
    const int steps = 72;
    for (int j = 1; j <= steps; ++j) {
        double phi = 2.0 * pi * j / steps;
        st.move_z(j == steps ? z : gamma + (z - gamma) * std::polar(1.0, phi));
    }

    SegmentCurve radius(alpha, p0);
    auto I_rad = integrate_curve(st, 0.5, radius, cfg);

    // Round the corner at p0 on the inner side, then go to the circle's midpoint.
    const double eps = 0.05 * s;
    move_along(st, radius, 0.5, 1.0 - eps / s);
    ArcCurve corner(p0, eps, th0 + pi, th0 + 0.5 * pi);
    move_along(st, corner, 0.0, 1.0);
    ArcCurve circle(alpha, s, th0, th0 + 2.0 * pi);
    circle.pin_ends(p0, p0);
    const double t1 = (eps / s) / (2.0 * pi);
    st.move_to(Point(circle.at(t1)));
    move_along(st, circle, t1, 0.5);
    auto I_circ = integrate_curve(st, 0.5, circle, cfg);

    cplx continued = -(I_rad.value + I_circ.value) / two_pi_i;
    r.lhs = continued - B.value;

    DeltaElement f1(F, alpha, k + 1), g1(G, beta, k + 1);
    auto B1 = bar_star(f1, g1, alpha, beta, z, cfg);
    r.rhs = B1.value - B.value;
    r.residual = std::abs(r.lhs - r.rhs);
    r.err_estimates["lhs"] = (I_rad.err_estimate + I_circ.err_estimate) / (2.0 * pi) + B.err_estimate;
    r.err_estimates["rhs"] = B1.err_estimate + B.err_estimate;
    return r;
}

std::vector<cplx> annulus_points(cplx gamma, int n, std::uint64_t seed, double rmin, double rmax,
                                 double sector_deg) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const cplx dir = std::abs(gamma) > 0 ? gamma / std::abs(gamma) : cplx(1.0);
    const double half = 0.5 * sector_deg * pi / 180.0;
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) {
        double rho = rmin + (rmax - rmin) * unit();
        double psi = half + (2.0 * pi - 2.0 * half) * unit();
        out.push_back(gamma + rho * dir * std::polar(1.0, psi));
    }
    return out;
}

DnAdicDigits dn_adic_digits(int N, int d1, int d2) {
    if (N < 1 || d1 < 1 || d2 < 1) throw Error(ErrorCode::InvalidArgument, "dn-adic digits need positive input");
    const int D2 = d1 * d2, D1 = d2;
    DnAdicDigits g;
    g.K2 = N / D2;
    int R2 = N % D2;
    g.K1 = R2 / D1;
    g.K0 = R2 % D1;
    return g;
}

cplx dn_adic_sum(const std::vector<cplx>& T, int N, int d1, int d2) {
    const int D2 = d1 * d2, D1 = d2;
    if (static_cast<int>(T.size()) < D2) throw Error(ErrorCode::InvalidArgument, "need one full period of terms");
    auto g = dn_adic_digits(N, d1, d2);
    cplx full = 0, mid = 0, rest = 0;
    for (int k = 0; k < D2; ++k) full += T[k];
    for (int j = 0; j < g.K1; ++j)
        for (int i = 0; i < D1; ++i) mid += T[j * D1 + i];
    for (int k = 0; k < g.K0; ++k) rest += T[g.K1 * D1 + k];
    return double(g.K2) * full + mid + rest;
}

}  // namespace monodromy::convolution
