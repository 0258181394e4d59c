#pragma once

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace monodromy {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx two_pi_i{0.0, 2.0 * std::numbers::pi};

// A point carried as anchor + offset so that the distance to the anchor
// keeps full relative precision when the offset is tiny.
struct Point {
    cplx anchor{};
    cplx offset{};

    Point() = default;
    Point(cplx z) : anchor(z) {}  // NOLINT: implicit on purpose
    Point(cplx a, cplx off) : anchor(a), offset(off) {}

    cplx z() const { return anchor + offset; }
};

// z - s, exact in the offset when s is the anchor.
inline cplx diff(const Point& p, cplx s) {
    if (p.anchor == s) return p.offset;
    return (p.anchor - s) + p.offset;
}

inline double dist_to(const Point& p, const std::vector<cplx>& pts) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& s : pts) d = std::min(d, std::abs(diff(p, s)));
    return d;
}

}  // namespace monodromy
