#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "monodromy/harness/registry.hpp"

using namespace monodromy::harness;

namespace {

struct Run {
    std::string experiment;
    std::map<std::string, double> tol;
    std::size_t min_cases = 1;
    std::size_t coeffs = 0;
};

struct Criterion {
    std::string name;
    std::vector<Run> runs;
    double max_seconds = 0;  // 0: no runtime bound
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c{
        {"eq1-residual", {{"eq1-residual", {{"residual", 1e-5}}, 30}}, 120},
        {"multiplicity-superposition",
         {{"multiplicity-superposition", {{"residual", 1e-4}, {"superposition", 0.0}}, 8}},
         60},
        {"morphism", {{"morphism", {{"residual", 1e-4}}, 15}}},
        {"multi-factor-n3", {{"multi-factor-n3", {{"stability", 5e-4}, {"reduction", 1e-10}}, 12}}},
        {"fundamental-3-1 + barstar-cor-3-4",
         {{"fundamental-3-1", {{"residual", 1e-6}}, 11}, {"barstar-cor-3-4", {{"residual", 1e-4}}, 20}}},
        {"polylog-monodromy", {{"polylog-monodromy", {{"residual", 1e-8}}, 20}}},
        {"recurrence-algebraic", {{"recurrence-algebraic", {{"residual", 1e-4}}, 6}}},
        {"birkhoff-limit", {{"birkhoff-limit", {{"ratio", 0.25}}, 1}}},
        {"dn-adic-n2", {{"dn-adic-n2", {{"residual", 1e-4}}, 30}}},
        {"recurrence-detect-suite", {{"recurrence-detect-suite", {{"coeffs", 1e-8}}, 8}}},
        {"elliptic-identity", {{"elliptic-identity", {{"series", 1e-8}, {"agm", 1e-10}}, 7, 4000}}},
        {"modular-monodromy", {{"modular-monodromy", {{"residual", 1e-5}}, 5}}},
        {"hypergeometric-identity", {{"hypergeometric-identity", {{"coeffs", 1e-13}}, 2}}},
        {"euler-integral", {{"euler-integral", {{"residual", 1e-9}}, 10}}},
        {"hyp2f1-monodromy", {{"hyp2f1-monodromy", {{"residual", 1e-6}}, 5}}},
        {"fractional-semigroup", {{"fractional-semigroup", {{"semigroup", 1e-8}}, 30}}},
    };
    return c;
}

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria()) {
        bool ok = true;
        std::string detail;
        double seconds = 0, worst = 0;
        std::size_t cases = 0;
        for (const auto& run : c.runs) {
            ExperimentConfig cfg;
            cfg.experiment = run.experiment;
            cfg.tolerances = run.tol;
            cfg.coeffs = run.coeffs;
            auto t0 = std::chrono::steady_clock::now();
            Report r = run_experiment(cfg);
            seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            cases += r.cases.size();
            if (!r.pass) {
                ok = false;
                for (const auto& cs : r.cases)
                    if (!cs.pass && detail.empty())
                        detail = run.experiment + "/" + cs.id + (cs.error.empty() ? "" : ": " + cs.error);
            }
            if (r.cases.size() < run.min_cases) {
                ok = false;
                detail = run.experiment + ": too few cases";
            }
            for (const auto& cs : r.cases)
                if (cs.tol > 0) worst = std::max(worst, cs.residual / cs.tol);
        }
        if (c.max_seconds > 0 && seconds > c.max_seconds) {
            ok = false;
            detail = "runtime " + std::to_string(seconds) + " s over " + std::to_string(c.max_seconds) + " s";
        }
        std::printf("%s  %-36s cases=%-4zu worst_resid/tol=%-10.3g time=%.2fs%s%s\n", ok ? "PASS" : "FAIL",
                    c.name.c_str(), cases, worst, seconds, detail.empty() ? "" : "  ", detail.c_str());
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria().size()) - failed, criteria().size());
    return failed == 0 ? 0 : 1;
}
