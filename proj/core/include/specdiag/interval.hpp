#pragma once

#include <cmath>
#include <limits>

namespace specdiag {

// Closed interval; lo/hi may be +-infinity.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool finite() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }
    double length() const noexcept { return hi - lo; }
    bool contains(double t) const noexcept { return t >= lo && t <= hi; }

    static Interval real_line() noexcept {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
    static Interval half_line() noexcept {
        return {0.0, std::numeric_limits<double>::infinity()};
    }
};

}  // namespace specdiag
