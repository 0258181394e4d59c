#pragma once

#include <string>
#include <vector>

#include "monodromy/germs/series.hpp"
#include "monodromy/harness/registry.hpp"

namespace monodromy::harness {

std::vector<ExperimentInfo> builtin_experiments();

// Binomial coefficients of (1 - z)^{-a}, cached as CSV beside cfg.out when it is set.
germs::CoeffSeries cached_binomial(const ExperimentConfig& cfg, cplx a, std::size_t m);

}  // namespace monodromy::harness
