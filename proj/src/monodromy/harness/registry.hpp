#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monodromy/harness/report.hpp"

namespace monodromy::harness {

using ExperimentFn = std::function<void(const ExperimentConfig&, Report&)>;

struct ExperimentInfo {
    std::string name;
    std::string description;
    ExperimentFn run;
};

const std::vector<ExperimentInfo>& registry();
std::vector<std::string> experiment_names();
// Throws UnknownExperiment listing the available names.
const ExperimentInfo& find_experiment(const std::string& name);

// Runs with timing; failures inside a case are recorded in the report, not thrown.
Report run_experiment(const ExperimentConfig& cfg);

}  // namespace monodromy::harness
