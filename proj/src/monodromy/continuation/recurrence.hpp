#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monodromy/continuation/monodromy.hpp"

namespace monodromy::continuation {

enum class FieldTag { Rational, Real, Complex };

const char* field_tag_name(FieldTag t);

// Sigma^d = sum_{j<d} coeffs[j] Sigma^j.
struct RecurrenceRelation {
    int d = 0;
    std::vector<cplx> coeffs;
    double residual = 0.0;
    FieldTag field = FieldTag::Complex;
};

// Smallest d <= d_max whose least-squares fit holds at m = 0 and m = d.
// Requires branches 0..2*d_max in the table.
std::optional<RecurrenceRelation> recurrence_detect(const BranchTable& table, int d_max,
                                                    std::span<const cplx> test_points,
                                                    double tol = 1e-6);

// Same detection from branch values sampled directly: values[k][t].
std::optional<RecurrenceRelation> recurrence_detect_values(const std::vector<std::vector<cplx>>& values,
                                                           int d_max, double tol = 1e-6);

FieldTag classify_field(const std::vector<cplx>& coeffs, double tol = 1e-8);

}  // namespace monodromy::continuation
