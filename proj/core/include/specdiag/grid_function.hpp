#pragma once

#include <vector>

#include "specdiag/basis.hpp"

namespace specdiag {

// Samples of a function on an explicit grid, carrying the family/domain
// the samples were produced under.
struct GridFunction {
    std::vector<double> grid;
    std::vector<Complex> values;
    FamilyKind family = FamilyKind::Torus;
    Interval domain = {0.0, 0.0};
};

}  // namespace specdiag
