#pragma once

#include <map>
#include <vector>

#include "monodromy/continuation/element.hpp"

namespace monodromy::continuation {

struct StepPolicy {
    double theta = 0.4;
    double max_chord_deg = 20.0;
    double clearance_rel = 1e-3;  // of the path length
};

// Branch at the end of the path, starting from the principal branch at its start.
CursorPtr continue_along(const AnalyticElement& el, const Path& path, const StepPolicy& policy = {});

// Taylor germ of the branch carried by c, from samples on a circle.
germs::Germ germ_at(const Cursor& c, const std::vector<cplx>& sing, int nodes = 64,
                    double radius_frac = 0.5);

// Distance from alpha to the nearest other singular point.
double isolation_radius(const AnalyticElement& el, cplx alpha);
// Base on the segment from alpha toward the home point 0 at half the isolation radius.
cplx default_loop_base(const AnalyticElement& el, cplx alpha);
// Base must lie in 0 < |base - alpha| < outer_frac * isolation radius.
void check_working_annulus(const AnalyticElement& el, cplx alpha, cplx base, double outer_frac = 0.95);

germs::Germ sigma_k(const AnalyticElement& el, cplx alpha, cplx base, int k, const StepPolicy& policy = {});

struct BranchTable {
    cplx alpha{};
    cplx base{};
    std::map<int, germs::Germ> branches;
    std::map<int, germs::Germ> deltas;  // branches[k+1] - branches[k]
    std::map<int, cplx> values;         // at base
    double err_bound = 0.0;
};

// Coefficientwise a - b; the centers must agree.
germs::Germ germ_difference(const germs::Germ& a, const germs::Germ& b);

// Branches k_min..k_max at base, built by successive single loops.
BranchTable build_branch_table(const AnalyticElement& el, cplx alpha, cplx base, int k_min, int k_max,
                               bool with_germs = true, const StepPolicy& policy = {});

struct IntegrabilityReport {
    bool integrable = false;
    std::vector<std::vector<double>> magnitudes;  // per ray, shrinking radii
    double exponent = 0.0;                        // fitted decay exponent of |(z - alpha) F|
};

IntegrabilityReport integrability_check(const AnalyticElement& el, cplx alpha, double abs_tol = 1e-13);

}  // namespace monodromy::continuation
