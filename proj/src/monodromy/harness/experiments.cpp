#include "monodromy/harness/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "monodromy/continuation/monodromy.hpp"
#include "monodromy/continuation/recurrence.hpp"
#include "monodromy/convolution/residuals.hpp"
#include "monodromy/error.hpp"
#include "monodromy/germs/coeff_csv.hpp"
#include "monodromy/zoo/algebraic.hpp"
#include "monodromy/zoo/descriptor.hpp"
#include "monodromy/zoo/elliptic.hpp"
#include "monodromy/zoo/fractional.hpp"
#include "monodromy/zoo/hypergeometric.hpp"
#include "monodromy/zoo/polylog.hpp"
#include "monodromy/zoo/power.hpp"

namespace monodromy::harness {

using continuation::AnalyticElement;
using continuation::ElementPtr;
using continuation::LinearCombination;
using continuation::Path;
using nlohmann::json;
namespace cv = monodromy::convolution;

germs::CoeffSeries cached_binomial(const ExperimentConfig& cfg, cplx a, std::size_t m) {
    if (cfg.out.empty()) return germs::binomial_series(a, m);
    namespace fs = std::filesystem;
    fs::path dir = fs::path(cfg.out).parent_path();
    char name[160];
    std::snprintf(name, sizeof name, "coeffs_binomial_a%.17g%+.17gi_M%zu.csv", a.real(), a.imag(), m);
    fs::path file = dir / name;
    std::error_code ec;
    if (fs::exists(file, ec)) {
        try {
            auto s = germs::load_coeffs_csv(file.string());
            if (s.size() == m) return s;
        } catch (const Error&) {
        }
    }
    auto s = germs::binomial_series(a, m);
    try {
        germs::save_coeffs_csv(file.string(), s);
    } catch (const Error&) {
    }
    return s;
}

namespace {

json cj(cplx z) { return zoo::complex_to_json(z); }

std::string zs(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f%+.4fi", z.real(), z.imag());
    return buf;
}

ElementPtr power(cplx alpha, cplx a, cplx scale = 1.0) { return std::make_shared<zoo::PowerBranch>(alpha, a, scale); }

double rel1(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(lhs)); }

template <class Fn>
void guarded(Report& r, const std::string& id, const json& inputs, double tol, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        r.add_error(id, inputs, e.what(), tol);
    }
}

cplx numeric_delta(const AnalyticElement& el, cplx alpha, cplx z) {
    auto c = el.cursor(Point(z));
    cplx v0 = c->value();
    c->follow(Path::loop(alpha, z, 1));
    c->move_to(Point(z));
    return c->value() - v0;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<cplx> points_or(const ExperimentConfig& cfg, std::vector<cplx> fixed, cplx gamma) {
    if (cfg.samples <= 0) return fixed;
    return cv::annulus_points(gamma, cfg.samples, cfg.seed);
}

// ---------------------------------------------------------------------------

void eq1_residual(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-5);
    auto F = power(1.0, 0.5);
    cv::HadamardProduct H(F, F);
    const int nmax = 3;
    for (cplx z : cv::annulus_points(1.0, cfg.samples_or(10), cfg.seed)) {
        json in = {{"z", cj(z)}};
        guarded(r, "z=" + zs(z), in, tol, [&] {
            auto vals = cv::product_branch_values(H, 1.0, z, nmax);
            auto T = cv::iterated_terms(F, F, 1.0, z, nmax);
            cplx rhs = 0;
            for (int N = 1; N <= nmax; ++N) {
                rhs += T[N - 1];
                cplx lhs = vals[N] - vals[0];
                json i2 = {{"z", cj(z)}, {"N", N}};
                r.add("z=" + zs(z) + " N=" + std::to_string(N), i2, lhs, rhs, rel1(lhs, rhs), tol, "rel1");
            }
        });
    }
}

std::vector<cplx> multiplicity_points(const ExperimentConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<cplx> out;
    const int n = cfg.samples_or(4);
    while (static_cast<int>(out.size()) < n) {
        double rho = 0.3 + 0.6 * unit(rng);
        double psi = pi * unit(rng);
        cplx z = 6.0 + std::polar(rho, psi);
        if (z.imag() >= 0.3) out.push_back(z);
    }
    return out;
}

ElementPtr sum2(ElementPtr a, ElementPtr b) {
    return std::make_shared<LinearCombination>(std::vector<LinearCombination::Term>{{1.0, a}, {1.0, b}});
}

void multiplicity_superposition(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-4);
    auto F = sum2(power(2.0, 0.5), power(3.0, 1.0 / 3));
    auto G = sum2(power(3.0, 0.2), power(2.0, 0.5));
    const cplx gamma = 6.0;
    cv::HadamardProduct H(F, G);
    for (cplx z : multiplicity_points(cfg)) {
        json in = {{"z", cj(z)}, {"N", 1}};
        guarded(r, "z=" + zs(z), in, tol, [&] {
            auto pd = cv::decompose_pairs(F->singularities(), G->singularities(), gamma);
            if (pd.pairs.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected multiplicity 2");
            auto vals = cv::product_branch_values(H, gamma, z, 1);
            cplx lhs = vals[1] - vals[0];
            cplx rhs = cv::iterated_terms(F, G, gamma, z, 1)[0];
            r.add("lhs-rhs z=" + zs(z), in, lhs, rhs, std::abs(lhs - rhs), tol);
            // each pair on its own
            cplx t23 = cv::pair_term(F, G, 2.0, 3.0, z, 0).value;
            cplx t32 = cv::pair_term(F, G, 3.0, 2.0, z, 0).value;
            r.add("superposition z=" + zs(z), in, rhs, t23 + t32, std::abs(rhs - (t23 + t32)),
                  cfg.tol("superposition", 0.0));
            // pairs built from the single power factors alone
            cplx s23 = cv::pair_term(power(2.0, 0.5), power(3.0, 0.2), 2.0, 3.0, z, 0).value;
            cplx s32 = cv::pair_term(power(3.0, 1.0 / 3), power(2.0, 0.5), 3.0, 2.0, z, 0).value;
            r.add("isolated-factors z=" + zs(z), in, rhs, s23 + s32, std::abs(rhs - (s23 + s32)),
                  cfg.tol("isolated", 1e-10));
        });
    }
}

void morphism(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-4);
    auto F = power(1.0, 0.5);
    cv::HadamardProduct H(F, F);
    for (cplx z : cv::annulus_points(1.0, cfg.samples_or(5), cfg.seed)) {
        json in = {{"z", cj(z)}};
        guarded(r, "z=" + zs(z), in, tol, [&] {
            auto vals = cv::product_branch_values(H, 1.0, z, 3);
            for (int k = 0; k <= 2; ++k) {
                cplx lhs = vals[k + 1] - vals[k];
                auto t = cv::pair_term(F, F, 1.0, 1.0, z, k);
                auto& c = r.add("z=" + zs(z) + " k=" + std::to_string(k), {{"z", cj(z)}, {"k", k}}, lhs, t.value,
                                std::abs(lhs - t.value), tol);
                c.err_estimates["rhs"] = t.err_estimate;
            }
        });
    }
}

void multi_factor_n3(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("stability", 5e-4);
    const double tol2 = cfg.tol("reduction", 1e-10);
    auto F = power(1.0, 0.5);
    std::vector<ElementPtr> three{F, F, F}, two{F, F};
    for (cplx z : cv::annulus_points(1.0, cfg.samples_or(3), cfg.seed)) {
        json in = {{"z", cj(z)}, {"n", 3}, {"N", 1}};
        guarded(r, "n3 z=" + zs(z), in, tol, [&] {
            cplx a = cv::multi_factor_rhs(three, 1.0, 1, z, 512);
            cplx b = cv::multi_factor_rhs(three, 1.0, 1, z, 1024);
            r.add("n3-doubling z=" + zs(z), in, a, b, std::abs(a - b) / std::max(std::abs(b), 1e-300), tol, "rel");
        });
        for (int N = 1; N <= 3; ++N) {
            json i2 = {{"z", cj(z)}, {"n", 2}, {"N", N}};
            guarded(r, "n2 z=" + zs(z), i2, tol2, [&] {
                cplx m = cv::multi_factor_rhs(two, 1.0, N, z);
                cplx e = 0;
                for (int k = 0; k < N; ++k) e += cv::pair_term(F, F, 1.0, 1.0, z, k).value;
                r.add("n2-reduction z=" + zs(z) + " N=" + std::to_string(N), i2, m, e, std::abs(m - e), tol2);
            });
        }
    }
}

void fundamental(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-6);
    struct Ex {
        std::string label;
        ElementPtr f;
        std::vector<cplx> zs;
        bool li2;
    };
    auto li1_over_u = std::make_shared<continuation::ScaledElement>(
        std::make_shared<zoo::PolylogElement>(1), [](const Point& u) { return 1.0 / u.z(); }, std::vector<cplx>{0.0},
        "Li_1(u)/u");
    std::vector<Ex> exs{
        {"(u-1)^(-1/2)", power(1.0, 0.5, cplx(0.0, -1.0)), {cplx(0.5, 0.5), cplx(0.3, -0.4), cplx(1.4, 0.3)}, false},
        {"Li_1(u)/u", li1_over_u, {cplx(0.5, 0.3), cplx(0.6, -0.5), cplx(1.3, 0.4)}, true},
        {"(1-u)^(-1/3)", power(1.0, 1.0 / 3), {cplx(0.6, -0.4), cplx(0.4, 0.2), cplx(1.5, -0.3)}, false},
        {"polynomial", std::make_shared<zoo::AlgebroGeometricElement>(1.0, 0.0, 0, std::vector<cplx>{1.0, 1.0, 0.5}),
         {cplx(0.5, 0.5), cplx(1.2, -0.3)}, false},
    };
    for (const auto& ex : exs) {
        for (cplx z : ex.zs) {
            json in = {{"f", ex.label}, {"alpha", cj(1.0)}, {"z", cj(z)}};
            guarded(r, ex.label + " z=" + zs(z), in, tol, [&] {
                auto rec = cv::fundamental_formula_residual(ex.f, 1.0, z);
                auto& c = r.add(ex.label + " z=" + zs(z), in, rec.lhs, rec.rhs, rec.residual, tol);
                c.err_estimates = rec.err_estimates;
                if (ex.li2) {
                    cplx exact = -two_pi_i * std::log(z);
                    r.add(ex.label + " vs -2 pi i log z z=" + zs(z), in, rec.lhs, exact, std::abs(rec.lhs - exact),
                          tol);
                }
            });
        }
    }
}

void barstar_cor34(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-4);
    struct Pair {
        std::string label;
        ElementPtr F, G;
    };
    std::vector<Pair> pairs{{"elliptic", power(1.0, 0.5), power(1.0, 0.5)},
                            {"(1/3,1/5)", power(1.0, 1.0 / 3), power(1.0, 0.2)}};
    auto pts = cv::annulus_points(1.0, cfg.samples_or(5), cfg.seed);
    for (const auto& p : pairs) {
        for (cplx z : pts) {
            for (int k = 0; k <= 1; ++k) {
                json in = {{"pair", p.label}, {"z", cj(z)}, {"k", k}};
                std::string id = p.label + " z=" + zs(z) + " k=" + std::to_string(k);
                guarded(r, id, in, tol, [&] {
                    auto rec = cv::barstar_monodromy_residual(p.F, p.G, 1.0, 1.0, z, k);
                    auto& c = r.add(id, in, rec.lhs, rec.rhs, rec.residual, tol);
                    c.err_estimates = rec.err_estimates;
                });
            }
        }
    }
    // Telescoping: (Sigma^2 - Id)(F (.) G) = 2 T_0 + Delta_gamma T_0
    for (const auto& p : pairs) {
        for (size_t i = 0; i < std::min<size_t>(2, pts.size()); ++i) {
            cplx z = pts[i];
            json in = {{"pair", p.label}, {"z", cj(z)}, {"N", 2}};
            std::string id = "telescope " + p.label + " z=" + zs(z);
            guarded(r, id, in, tol, [&] {
                cv::HadamardProduct H(p.F, p.G);
                auto vals = cv::product_branch_values(H, 1.0, z, 2);
                cplx T0 = cv::pair_term(p.F, p.G, 1.0, 1.0, z, 0).value;
                auto rec = cv::barstar_monodromy_residual(p.F, p.G, 1.0, 1.0, z, 0);
                cplx lhs = vals[2] - vals[0];
                cplx rhs = 2.0 * T0 + rec.lhs;
                r.add(id, in, lhs, rhs, rel1(lhs, rhs), tol, "rel1");
            });
        }
    }
}

void polylog_monodromy(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-8);
    for (int k = 1; k <= 4; ++k) {
        zoo::PolylogElement li(k);
        for (cplx z : cv::annulus_points(1.0, cfg.samples_or(5), cfg.seed)) {
            json in = {{"k", k}, {"z", cj(z)}};
            std::string id = "k=" + std::to_string(k) + " z=" + zs(z);
            guarded(r, id, in, tol, [&] {
                cplx num = numeric_delta(li, 1.0, z);
                cplx ex = zoo::polylog_delta_exact(k, Point(z));
                r.add(id, in, num, ex, std::abs(num - ex), tol);
            });
        }
    }
}

// max over j of |Sigma^{N+2d} - 2 Sigma^{N+d} + Sigma^N| relative to the branch scale
void recurrence_algebraic(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-4);
    struct Case {
        std::string label;
        ElementPtr F, G;
        int d;
    };
    std::vector<Case> cases{{"elliptic d=4", power(1.0, 0.5), power(1.0, 0.5), 4},
                            {"(1/3,1/2) d=6", power(1.0, 1.0 / 3), power(1.0, 0.5), 6}};
    for (const auto& c : cases) {
        cv::HadamardProduct H(c.F, c.G);
        for (cplx z : cv::annulus_points(1.0, cfg.samples_or(3), cfg.seed)) {
            json in = {{"H", c.label}, {"z", cj(z)}, {"d", c.d}};
            guarded(r, c.label + " z=" + zs(z), in, tol, [&] {
                auto vals = cv::product_branch_values(H, 1.0, z, 2 + 2 * c.d);
                double scale = 0;
                for (auto v : vals) scale = std::max(scale, std::abs(v));
                for (int N = 1; N <= 2; ++N) {
                    cplx lhs = vals[N + 2 * c.d] - 2.0 * vals[N + c.d] + vals[N];
                    json i2 = in;
                    i2["N"] = N;
                    r.add(c.label + " z=" + zs(z) + " N=" + std::to_string(N), i2, lhs, 0.0, std::abs(lhs) / scale,
                          tol, "rel-max");
                }
            });
        }
    }
}

void birkhoff_limit(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("ratio", 0.25);
    auto F = power(1.0, 1.0 / 3), G = power(1.0, 0.5);
    const int d = 6;
    cv::HadamardProduct H(F, G);
    for (cplx z : cv::annulus_points(1.0, cfg.samples_or(3), cfg.seed)) {
        json in = {{"z", cj(z)}, {"d", d}, {"N", {8, 16}}};
        guarded(r, "z=" + zs(z), in, tol, [&] {
            auto vals = cv::product_branch_values(H, 1.0, z, 16);
            auto T = cv::iterated_terms(F, G, 1.0, z, d);
            cplx L = 0;
            for (auto t : T) L += t;
            L /= double(d);
            double e8 = std::abs((vals[8] - vals[0]) / 8.0 - L);
            double e16 = std::abs((vals[16] - vals[0]) / 16.0 - L);
            double ratio = e16 / e8;
            auto& c = r.add("z=" + zs(z), in, ratio, 0.5, std::abs(ratio - 0.5) / 0.5, tol, "ratio");
            c.err_estimates = {{"e8", e8}, {"e16", e16}, {"L", cj(L)}};
        });
    }
}

void dn_adic_n2(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-4);
    auto F = power(1.0, 0.5);
    const int d1 = 2, d2 = 2, nmax = 10;
    cv::HadamardProduct H(F, F);
    for (cplx z : cv::annulus_points(1.0, cfg.samples_or(3), cfg.seed)) {
        json in = {{"z", cj(z)}, {"d1", d1}, {"d2", d2}};
        guarded(r, "z=" + zs(z), in, tol, [&] {
            auto T = cv::iterated_terms(F, F, 1.0, z, nmax);
            auto vals = cv::product_branch_values(H, 1.0, z, nmax);
            cplx direct = 0;
            for (int N = 1; N <= nmax; ++N) {
                direct += T[N - 1];
                cplx dec = cv::dn_adic_sum(T, N, d1, d2);
                auto g = cv::dn_adic_digits(N, d1, d2);
                json i2 = in;
                i2["N"] = N;
                i2["digits"] = {g.K2, g.K1, g.K0};
                r.add("direct z=" + zs(z) + " N=" + std::to_string(N), i2, dec, direct, rel1(direct, dec), tol,
                      "rel1");
                cplx lhs = vals[N] - vals[0];
                r.add("lhs z=" + zs(z) + " N=" + std::to_string(N), i2, lhs, dec, rel1(lhs, dec), tol, "rel1");
            }
        });
    }
}

std::vector<cplx> binomial_char_poly(int n, cplx lambda) {
    // Sigma^{n+1} = sum_k a_k Sigma^k from (x - lambda)^{n+1} = 0
    std::vector<cplx> a(n + 1);
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        a[k] = -binom * std::pow(-lambda, double(n + 1 - k));
        binom = binom * double(n + 1 - k) / double(k + 1);
    }
    return a;
}

void recurrence_detect_suite(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("coeffs", 1e-8);
    struct Case {
        std::string label;
        ElementPtr el;
        int d_max;
        std::function<std::vector<cplx>()> oracle;
    };
    auto measured_lambda = [](cplx a) {
        zoo::PowerBranch p(1.0, a);
        cplx z(0.5, 0.0);
        cplx d = numeric_delta(p, 1.0, z);
        return 1.0 + d / p.principal(Point(z));
    };
    std::vector<Case> cases{
        {"1+sqrt(1-z)", zoo::AlgebraicElement::shifted_sqrt(), 2, [] { return std::vector<cplx>{1.0, 0.0}; }},
        {"sqrt(1-z)", zoo::AlgebraicElement::sqrt_one_minus_z(), 2, [] { return std::vector<cplx>{-1.0}; }},
        {"log(1-z)", std::make_shared<zoo::LogBranch>(1.0), 2, [] { return std::vector<cplx>{-1.0, 2.0}; }},
        {"(1-z)^(-1/3)", power(1.0, 1.0 / 3), 2, [&] { return std::vector<cplx>{measured_lambda(1.0 / 3)}; }},
    };
    for (int n = 0; n <= 2; ++n)
        for (cplx a : {cplx(0.0), cplx(0.5)}) {
            if (n == 0 && a == 0.0) continue;  // holomorphic: no singularity
            char lab[64];
            std::snprintf(lab, sizeof lab, "algebro-geometric n=%d a=%g", n, a.real());
            auto el = std::make_shared<zoo::AlgebroGeometricElement>(1.0, a, n, std::vector<cplx>{1.0, 0.5});
            cases.push_back({lab, el, n + 1, [=] { return binomial_char_poly(n, measured_lambda(a)); }});
        }
    for (const auto& c : cases) {
        json in = {{"element", c.label}, {"d_max", c.d_max}};
        guarded(r, c.label, in, tol, [&] {
            cplx base = continuation::default_loop_base(*c.el, 1.0);
            double rad = 0.25 * std::abs(base - 1.0);
            std::vector<cplx> tp{base + rad * std::polar(1.0, 0.3), base + rad * std::polar(1.0, 2.4),
                                 base + rad * std::polar(1.0, 4.5)};
            auto table = continuation::build_branch_table(*c.el, 1.0, base, 0, 2 * c.d_max);
            auto rel = continuation::recurrence_detect(table, c.d_max, tp);
            auto want = c.oracle();
            if (!rel) throw Error(ErrorCode::AccuracyLoss, "no recurrence found up to the given order");
            json i2 = in;
            i2["d"] = rel->d;
            i2["field"] = continuation::field_tag_name(rel->field);
            i2["fit_residual"] = rel->residual;
            if (rel->d != static_cast<int>(want.size())) {
                r.add_error(c.label, i2, "order " + std::to_string(rel->d) + " found, expected " +
                                             std::to_string(want.size()), tol);
                return;
            }
            double err = 0;
            json got = json::array(), exp = json::array();
            for (size_t k = 0; k < want.size(); ++k) {
                err = std::max(err, std::abs(rel->coeffs[k] - want[k]));
                got.push_back(cj(rel->coeffs[k]));
                exp.push_back(cj(want[k]));
            }
            i2["coeffs"] = got;
            i2["oracle"] = exp;
            r.add(c.label, i2, rel->coeffs.back(), want.back(), err, tol, "max-coeff");
        });
    }
    // a single sqrt has the shorter relation Sigma = -Id; the period-2 relation is checked on its own
    {
        auto el = zoo::AlgebraicElement::sqrt_one_minus_z();
        json in = {{"element", "sqrt(1-z)"}, {"relation", "Sigma^2 = Id"}};
        guarded(r, "sqrt(1-z) period 2", in, tol, [&] {
            cplx base = continuation::default_loop_base(*el, 1.0);
            auto table = continuation::build_branch_table(*el, 1.0, base, 0, 2);
            auto d = continuation::germ_difference(table.branches.at(2), table.branches.at(0));
            double err = 0;
            for (auto c : d.coeffs) err = std::max(err, std::abs(c));
            r.add("sqrt(1-z) period 2", in, table.values.at(2), table.values.at(0), err, tol, "max-coeff");
        });
    }
    // constructed relation against the same oracle
    for (int n = 0; n <= 2; ++n)
        for (cplx a : {cplx(0.0), cplx(0.5), cplx(1.0 / 3)}) {
            char lab[64];
            std::snprintf(lab, sizeof lab, "vandermonde n=%d a=%.4g", n, a.real());
            json in = {{"n", n}, {"a", cj(a)}};
            guarded(r, lab, in, tol, [&] {
                auto got = zoo::vandermonde_recurrence(n, a);
                auto want = binomial_char_poly(n, measured_lambda(a));
                double err = 0;
                for (size_t k = 0; k < want.size(); ++k) err = std::max(err, std::abs(got[k] - want[k]));
                r.add(lab, in, got.back(), want.back(), err, tol, "max-coeff");
            });
        }
}

void elliptic_identity(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("series", 1e-8);
    const double tol_agm = cfg.tol("agm", 1e-10);
    const double tol_c = cfg.tol("coeffs", 1e-13);
    const std::size_t M = cfg.coeffs_or(4000);
    auto b = cached_binomial(cfg, 0.5, M);
    auto h = germs::hadamard_coeffs(b, b);
    // ((2n-1)!!/(2n)!!)^2
    double q = 1.0, worst = 0.0;
    for (int n = 0; n < 64; ++n) {
        if (n > 0) q *= double(2 * n - 1) / double(2 * n);
        worst = std::max(worst, std::abs(h.a[n] - q * q) / (q * q));
    }
    r.add("coefficients n<64", {{"M", M}}, h.a[63], q * q, worst, tol_c, "rel-max");
    for (double k2 : {0.1, 0.3, 0.5}) {
        json in = {{"ksq", k2}, {"M", M}};
        guarded(r, "ksq=" + std::to_string(k2), in, tol, [&] {
            cplx s = 0, p = 1;
            for (std::size_t n = 0; n < h.size(); ++n) {
                s += h.a[n] * p;
                p *= k2;
            }
            double quad = zoo::elliptic_K_norm(k2);
            double agm = zoo::elliptic_K_norm_agm(k2);
            char id[64];
            std::snprintf(id, sizeof id, "series ksq=%.1f", k2);
            r.add(id, in, s, quad, std::abs(s - quad), tol);
            std::snprintf(id, sizeof id, "agm ksq=%.1f", k2);
            r.add(id, in, quad, agm, std::abs(quad - agm), tol_agm);
        });
    }
}

void modular_monodromy(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-5);
    const double tol_s = cfg.tol("symmetry", 1e-12);
    auto F = power(1.0, 0.5);
    cv::HadamardProduct H(F, F);
    auto pts = points_or(cfg, {cplx(0.5, 0.0), cplx(0.5, 0.25), cplx(0.5, -0.25), cplx(0.7, 0.3), cplx(0.75, -0.4)}, 1.0);
    for (cplx z : pts) {
        json in = {{"z", cj(z)}};
        guarded(r, "z=" + zs(z), in, tol, [&] {
            auto vals = cv::product_branch_values(H, 1.0, z, 1);
            cplx num = vals[1] - vals[0];
            cplx cf = zoo::modular_delta_closed_form(Point(z));
            r.add("z=" + zs(z), in, num, cf, std::abs(num - cf), tol);
        });
    }
    cplx z(0.5, 0.25);
    json in = {{"z", cj(z)}};
    guarded(r, "conjugation", in, tol_s, [&] {
        cplx a = zoo::modular_delta_closed_form(Point(z));
        cplx b = zoo::modular_delta_closed_form(Point(std::conj(z)));
        r.add("conjugation z=" + zs(z), in, b, -std::conj(a), std::abs(b + std::conj(a)), tol_s);
    });
}

void hypergeometric_identity(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("coeffs", 1e-13);
    const double tol_v = cfg.tol("values", 1e-10);
    for (auto [a, b] : {std::pair<double, double>{0.5, 0.5}, {1.0 / 3, 0.2}}) {
        char lab[64];
        std::snprintf(lab, sizeof lab, "a=%.4g b=%.4g", a, b);
        json in = {{"a", a}, {"b", b}};
        auto h = germs::hadamard_coeffs(germs::binomial_series(a, 64), germs::binomial_series(b, 64));
        double t = 1.0, worst = 0.0;
        for (int n = 0; n < 64; ++n) {
            if (n > 0) t *= (a + n - 1) * (b + n - 1) / (double(n) * double(n));
            worst = std::max(worst, std::abs(h.a[n] - t) / std::abs(t));
        }
        r.add(std::string("coefficients ") + lab, in, h.a[63], t, worst, tol, "rel-max");
        zoo::PowerBranch Fa(1.0, a), Gb(1.0, b);
        for (cplx z : {cplx(0.3, 0.2), cplx(-0.4, 0.1), cplx(0.1, -0.45)}) {
            json i2 = {{"a", a}, {"b", b}, {"z", cj(z)}};
            std::string id = std::string("contour ") + lab + " z=" + zs(z);
            guarded(r, id, i2, tol_v, [&] {
                cplx v = cv::hadamard_eval_contour(Fa, Gb, z, 0.75);
                cplx w = zoo::hyp2f1(a, b, 1.0, z);
                r.add(id, i2, v, w, std::abs(v - w), tol_v);
            });
        }
    }
}

void euler_integral(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-9);
    std::mt19937_64 rng(cfg.seed);
    std::vector<cplx> pts;
    for (int i = 0; i < cfg.samples_or(10); ++i) {
        double rho = 0.7 * std::sqrt(unit(rng));
        double th = 2.0 * pi * unit(rng);
        pts.push_back(std::polar(rho, th));
    }
    for (auto [a, b, c] : {std::tuple<double, double, double>{1.0 / 3, 0.2, 1.0}, {0.5, 0.5, 1.0}}) {
        for (cplx z : pts) {
            json in = {{"a", a}, {"b", b}, {"c", c}, {"z", cj(z)}};
            char id[96];
            std::snprintf(id, sizeof id, "(%.4g,%.4g,%.4g) z=%s", a, b, c, zs(z).c_str());
            guarded(r, id, in, tol, [&] {
                cplx e = zoo::euler_2F1(a, b, c, z);
                cplx s = zoo::hyp2f1_series(a, b, c, z).value;
                r.add(id, in, e, s, std::abs(e - s), tol);
            });
        }
    }
}

void hyp2f1_monodromy(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("residual", 1e-6);
    const cplx a = 1.0 / 3, b = 0.2, c = 1.0;
    zoo::Hypergeometric2F1 F(a, b, c);
    for (cplx z : cv::annulus_points(1.0, cfg.samples_or(5), cfg.seed)) {
        json in = {{"a", cj(a)}, {"b", cj(b)}, {"c", cj(c)}, {"z", cj(z)}};
        guarded(r, "z=" + zs(z), in, tol, [&] {
            cplx num = numeric_delta(F, 1.0, z);
            cplx cf = zoo::hyp2f1_delta(a, b, c, Point(z));
            r.add("z=" + zs(z), in, num, cf, std::abs(num - cf), tol);
        });
    }
}

void fractional_semigroup(const ExperimentConfig& cfg, Report& r) {
    const double tol = cfg.tol("semigroup", 1e-8);
    const double tol_i = cfg.tol("integer", 1e-12);
    std::vector<cplx> pts{cplx(0.7, 0.0), cplx(0.3, 0.4), cplx(-0.5, 0.2), cplx(0.0, 0.9), cplx(0.6, -0.6)};
    for (int m = 0; m <= 5; ++m) {
        auto f = [m](cplx u) { return std::pow(u, m); };
        for (cplx z : pts) {
            json in = {{"degree", m}, {"z", cj(z)}};
            std::string id = "deg=" + std::to_string(m) + " z=" + zs(z);
            guarded(r, "half " + id, in, tol, [&] {
                auto half = [&](cplx x) { return zoo::fractional_integral(f, 0.5, 0.0, x); };
                cplx twice = zoo::fractional_integral(half, 0.5, 0.0, z);
                cplx one = zoo::fractional_integral(f, 1.0, 0.0, z);
                r.add("half-half " + id, in, twice, one, std::abs(twice - one), tol);
            });
            for (int n = 1; n <= 3; ++n) {
                json i2 = in;
                i2["order"] = n;
                std::string id2 = "I" + std::to_string(n) + " " + id;
                guarded(r, id2, i2, tol_i, [&] {
                    cplx frac = zoo::fractional_integral(f, double(n), 0.0, z);
                    cplx it = zoo::iterated_integral(f, n, 0.0, z);
                    r.add(id2, i2, frac, it, std::abs(frac - it), tol_i);
                });
            }
        }
    }
}

}  // namespace

std::vector<ExperimentInfo> builtin_experiments() {
    return {
        {"eq1-residual", "iterated monodromy formula for the elliptic pair, N = 1..3", eq1_residual},
        {"multiplicity-superposition", "two pairs over gamma = 6", multiplicity_superposition},
        {"morphism", "Delta Sigma^k of a Hadamard product against one bar-star term, k = 0..2", morphism},
        {"multi-factor-n3", "three-factor nested bar-star: node doubling and n = 2 reduction", multi_factor_n3},
        {"fundamental-3-1", "monodromy of a primitive against the primitive of the monodromy", fundamental},
        {"barstar-cor-3-4", "monodromy of a bar-star convolution", barstar_cor34},
        {"polylog-monodromy", "numerical Delta_1 Li_k against -2 pi i (log z)^(k-1)/(k-1)!", polylog_monodromy},
        {"recurrence-algebraic", "second difference of branches with step d vanishes", recurrence_algebraic},
        {"birkhoff-limit", "Cesaro average of Sigma^N - Id converges like 1/N", birkhoff_limit},
        {"dn-adic-n2", "block decomposition of the k-sum for two degree-2 factors", dn_adic_n2},
        {"recurrence-detect-suite", "recurrence detection on branch tables", recurrence_detect_suite},
        {"elliptic-identity", "Hadamard square series against quadrature and AGM", elliptic_identity},
        {"modular-monodromy", "closed-form monodromy of the Hadamard square", modular_monodromy},
        {"hypergeometric-identity", "(1-z)^-a (.) (1-z)^-b = 2F1(a, b; 1; z)", hypergeometric_identity},
        {"euler-integral", "Euler integral against the 2F1 series", euler_integral},
        {"hyp2f1-monodromy", "connection-formula monodromy against loop continuation", hyp2f1_monodromy},
        {"fractional-semigroup", "Riemann-Liouville semigroup and integer orders", fractional_semigroup},
    };
}

}  // namespace monodromy::harness
