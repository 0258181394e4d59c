#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/convolution/barstar.hpp"
#include "monodromy/convolution/hadamard.hpp"

namespace monodromy::convolution {

struct ResidualRecord {
    std::string identity;
    nlohmann::json parameters = nlohmann::json::object();
    cplx z{};
    cplx lhs{}, rhs{};
    double residual = 0.0;
    nlohmann::json err_estimates = nlohmann::json::object();

    nlohmann::json to_json() const;
};

// Values Sigma_gamma^N (F (.) G)(z) for N = 0..n_max, one product cursor looped n_max times.
std::vector<cplx> product_branch_values(const HadamardProduct& H, cplx gamma, cplx z, int n_max);

// Delta Sigma^k F bar-star Delta Sigma^k G for one pair.
BarStarResult pair_term(const ElementPtr& F, const ElementPtr& G, cplx alpha, cplx beta, cplx z, int k,
                        const numerics::QuadratureConfig& cfg = {});

// T_k summed over the pairs of gamma, for k = 0..K-1; pairs summed in order, then k.
std::vector<cplx> iterated_terms(const ElementPtr& F, const ElementPtr& G, cplx gamma, cplx z, int K,
                                 const numerics::QuadratureConfig& cfg = {});

ResidualRecord iterated_formula_residual(const ElementPtr& F, const ElementPtr& G, cplx gamma, int N, cplx z,
                                         const numerics::QuadratureConfig& cfg = {});

ResidualRecord morphism_residual(const ElementPtr& F, const ElementPtr& G, cplx gamma, int k, cplx z,
                                 const numerics::QuadratureConfig& cfg = {});

// Nested bar-star over tuples alpha_1 ... alpha_n = gamma. n = 2 uses adaptive quadrature,
// n = 3 fixed node counts base_nodes, base_nodes / 4 at successive depths.
cplx multi_factor_rhs(const std::vector<ElementPtr>& factors, cplx gamma, int N, cplx z, int base_nodes = 512,
                      const numerics::QuadratureConfig& cfg = {});

ResidualRecord fundamental_formula_residual(const ElementPtr& f, cplx alpha, cplx z,
                                            const numerics::QuadratureConfig& cfg = {});

// Delta_gamma (f bar-star g) against Sigma f bar-star Sigma g - f bar-star g,
// f = Delta Sigma^k F at alpha, g = Delta Sigma^k G at beta.
ResidualRecord barstar_monodromy_residual(const ElementPtr& F, const ElementPtr& G, cplx alpha, cplx beta, cplx z,
                                          int k = 0, const numerics::QuadratureConfig& cfg = {});

// Seeded points gamma + rho e^{i psi} gamma/|gamma| with rho in [rmin, rmax], |psi| >= sector/2.
std::vector<cplx> annulus_points(cplx gamma, int n, std::uint64_t seed, double rmin = 0.2, double rmax = 0.6,
                                 double sector_deg = 20.0);

// sum_{k<N} T_k regrouped by N = K2 D2 + K1 D1 + K0 (D1 = d2, D2 = d1 d2), using only T_0..T_{D2-1}.
struct DnAdicDigits {
    int K2 = 0, K1 = 0, K0 = 0;
};
DnAdicDigits dn_adic_digits(int N, int d1, int d2);
cplx dn_adic_sum(const std::vector<cplx>& T, int N, int d1, int d2);

}  // namespace monodromy::convolution
