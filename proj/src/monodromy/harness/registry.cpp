#include "monodromy/harness/registry.hpp"

#include <chrono>

#include "monodromy/error.hpp"
#include "monodromy/harness/experiments.hpp"

namespace monodromy::harness {

const std::vector<ExperimentInfo>& registry() {
    static const std::vector<ExperimentInfo> list = builtin_experiments();
    return list;
}

std::vector<std::string> experiment_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
}

const ExperimentInfo& find_experiment(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return e;
    std::string msg = "unknown experiment '" + name + "'; available:";
    for (const auto& e : registry()) msg += " " + e.name;
    throw Error(ErrorCode::UnknownExperiment, msg);
}

Report run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto& info = find_experiment(cfg.experiment);
    Report r;
    r.experiment = info.name;
    r.config = cfg.to_json();
    auto t0 = std::chrono::steady_clock::now();
    try {
        info.run(cfg, r);
    } catch (const std::exception& e) {
        r.add_error("aborted", nlohmann::json::object(), e.what(), 0.0);
    }
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.finalize();
    return r;
}

}  // namespace monodromy::harness
