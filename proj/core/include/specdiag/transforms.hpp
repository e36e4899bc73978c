#pragma once

#include <array>
#include <functional>
#include <span>

#include "specdiag/grid_function.hpp"

namespace specdiag {

// A smooth test function given by a pointwise evaluator. For the Laguerre
// family the evaluator may hold only the smooth part g of f = t^{alpha/2} g
// (laguerre_smooth_part = true); everything downstream fuses the t^{alpha/2}
// factor analytically.
struct SmoothFunction {
    std::function<Complex(double)> eval;
    Interval domain = {0.0, 0.0};
    bool laguerre_smooth_part = false;
};

// Value of the actual function f(t); applies the t^{alpha/2} factor for
// flagged Laguerre inputs.
Complex eval_function(const SmoothFunction& f, const BasisFamily& b, double t);

// Forward transform: c(n) = <f, conj(b_n)>_w at truncation degree N, using a
// Gauss rule of margin N+16 (torus: 2N+17 equispaced points) with one
// consistency refinement; refines further if coefficients move more than
// 1e-10 relative to the largest one.
CoefficientSequence analyze(const SmoothFunction& f, const BasisFamily& b,
                            int N);

// Partial sum sum_n c(n) b_n(t) over the stored indices.
GridFunction synthesize(const CoefficientSequence& c, const BasisFamily& b,
                        std::span<const double> grid);
Complex synthesize_at(const CoefficientSequence& c, const BasisFamily& b,
                      double t);

// Rapid-decrease evidence for a coefficient sequence: polynomial-weighted
// suprema and fitted decay slopes over the largest decade of indices.
struct DecayReport {
    static constexpr std::array<int, 4> kWeights = {1, 2, 4, 8};
    std::array<double, 4> weighted_sup = {0, 0, 0, 0};  // sup (1+|n|)^k |c(n)|
    double algebraic_exponent = 0.0;   // -slope of log|c| vs log(1+|n|)
    double geometric_log_slope = 0.0;  // slope of log|c| vs |n|
    bool slope_applicable = false;     // false when fewer than 2 fit points
};

DecayReport decay_report(const CoefficientSequence& c);

}  // namespace specdiag
