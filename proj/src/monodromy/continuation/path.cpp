#include "monodromy/continuation/path.hpp"

#include <algorithm>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::continuation {

Path Path::segment(cplx a, cplx b) { return Path{{a, b}}; }

Path Path::arc(cplx center, cplx start, double angle, double max_chord_deg) {
    if (!(max_chord_deg > 0)) throw Error(ErrorCode::InvalidArgument, "chord angle must be positive");
    cplx r = start - center;
    int n = std::max(1, int(std::ceil(std::abs(angle) * 180.0 / pi / max_chord_deg)));
    Path p;
    p.vertices.reserve(n + 1);
    p.vertices.push_back(start);
    for (int i = 1; i < n; ++i) p.vertices.push_back(center + r * std::polar(1.0, angle * i / n));
    p.vertices.push_back(start == center ? start : center + r * std::polar(1.0, angle));
    return p;
}

Path Path::loop(cplx alpha, cplx base, int turns, double max_chord_deg) {
    if (base == alpha) throw Error(ErrorCode::InvalidArgument, "loop base coincides with its center");
    if (turns == 0) return Path{{base}};
    Path p = arc(alpha, base, 2.0 * pi * turns, max_chord_deg);
    p.vertices.back() = base;
    return p;
}

Path Path::then(const Path& next) const {
    Path p = *this;
    auto it = next.vertices.begin();
    if (!p.vertices.empty() && it != next.vertices.end() && *it == p.vertices.back()) ++it;
    p.vertices.insert(p.vertices.end(), it, next.vertices.end());
    return p;
}

double Path::length() const {
    double s = 0;
    for (size_t i = 1; i < vertices.size(); ++i) s += std::abs(vertices[i] - vertices[i - 1]);
    return s;
}

double point_segment_distance(cplx p, cplx a, cplx b) {
    cplx d = b - a;
    double l2 = std::norm(d);
    if (l2 == 0) return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(d)).real() / l2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

double Path::distance_to(cplx p) const {
    if (vertices.size() == 1) return std::abs(p - vertices[0]);
    double d = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < vertices.size(); ++i)
        d = std::min(d, point_segment_distance(p, vertices[i - 1], vertices[i]));
    return d;
}

int Path::winding_number(cplx p) const {
    double total = 0;
    for (size_t i = 1; i < vertices.size(); ++i) {
        cplx a = vertices[i - 1] - p, b = vertices[i] - p;
        if (a == 0.0 || b == 0.0 || point_segment_distance(p, vertices[i - 1], vertices[i]) == 0.0)
            throw Error(ErrorCode::PathTooClose, "path passes through the winding point");
        total += std::arg(b / a);
    }
    return int(std::lround(total / (2.0 * pi)));
}

nlohmann::json Path::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (auto v : vertices) j.push_back({v.real(), v.imag()});
    return j;
}

Path Path::from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorCode::Parse, "path must be a non-empty array");
    Path p;
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw Error(ErrorCode::Parse, "path vertex must be [re, im]");
        p.vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return p;
}

}  // namespace monodromy::continuation
