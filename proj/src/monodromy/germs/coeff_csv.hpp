#pragma once

#include <string>

#include "monodromy/germs/series.hpp"

namespace monodromy::germs {

// CSV with header "n,re,im".
void save_coeffs_csv(const std::string& path, const CoeffSeries& s);
CoeffSeries load_coeffs_csv(const std::string& path);

}  // namespace monodromy::germs
