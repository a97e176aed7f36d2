#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace banach {

// Certified enclosure [lo, hi] of a nonnegative quantity (a norm, an inf
// of norms, ...). Every numeric claim the library makes travels as one of
// these; width 0 means the value is computed by exact formula.
struct NormBound {
    double lo = 0.0;
    double hi = 0.0;

    NormBound() = default;
    NormBound(double l, double h) : lo(l), hi(h) {
        if (std::isnan(l) || std::isnan(h) || l > h || l < 0.0)
            throw std::invalid_argument("NormBound requires 0 <= lo <= hi");
    }

    static NormBound exact(double v) { return NormBound(v, v); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool is_zero() const { return hi == 0.0; }

    // Enclosure of s*value for a known nonnegative scalar s.
    NormBound scaled(double s) const { return NormBound(lo * s, hi * s); }
};

// Distance between the two enclosures as sets; 0 when they overlap.
inline double gap(const NormBound& x, const NormBound& y) {
    return std::max({0.0, x.lo - y.hi, y.lo - x.hi});
}

inline bool overlap(const NormBound& x, const NormBound& y) {
    return gap(x, y) == 0.0;
}

}  // namespace banach
