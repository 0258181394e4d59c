#pragma once

#include <vector>

#include "json.hpp"
#include "monodromy/types.hpp"

namespace monodromy::continuation {

struct Path {
    std::vector<cplx> vertices;

    static Path segment(cplx a, cplx b);
    // |turns| turns around alpha starting and ending at base; positive is counterclockwise.
    static Path loop(cplx alpha, cplx base, int turns, double max_chord_deg = 20.0);
    // Rotate start about center by angle (radians) using chords of at most max_chord_deg.
    static Path arc(cplx center, cplx start, double angle, double max_chord_deg = 20.0);

    cplx start() const { return vertices.front(); }
    cplx end() const { return vertices.back(); }
    Path then(const Path& next) const;
    double length() const;
    double distance_to(cplx p) const;
    // For closed paths; throws when the path passes through p.
    int winding_number(cplx p) const;

    nlohmann::json to_json() const;
    static Path from_json(const nlohmann::json& j);
};

double point_segment_distance(cplx p, cplx a, cplx b);

}  // namespace monodromy::continuation
