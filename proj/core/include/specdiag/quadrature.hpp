#pragma once

#include <span>
#include <vector>

#include "specdiag/weights.hpp"

namespace specdiag {

// Nodes/weights with a declared polynomial exactness degree against the
// weight the rule was built for.
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // positive
    int exactness_degree = -1;
};

// Three-term recurrence of the orthonormal polynomials for a weight:
//   p_{k+1} = ((t - a_k) p_k - sqrt(b_k) p_{k-1}) / sqrt(b_{k+1}),
// with b_0 = mu0 the total mass.
struct RecurrenceCoefficients {
    std::vector<double> a;
    std::vector<double> b;  // b[0] = mu0
};

RecurrenceCoefficients recurrence_coefficients(const WeightSpec& w, int m);

// Gauss rule with m nodes (Golub-Welsch); exactness 2m-1. For the torus
// weight this is the m-point equispaced rule with weights 1/m, exact for
// trigonometric polynomials of degree < m up to aliasing.
QuadratureRule gauss_rule(const WeightSpec& w, int m);

// Same rule plus log(weights), needed where raw weights underflow
// (large Gauss-Hermite/Laguerre rules).
struct GaussRuleData {
    QuadratureRule rule;
    std::vector<double> log_weights;
};
GaussRuleData gauss_rule_extended(const WeightSpec& w, int m);

// Piecewise Gauss-Legendre with uniform panels over a finite interval.
QuadratureRule composite_rule(Interval domain, int panels, int order);

// Piecewise Gauss-Legendre over explicit panel breakpoints (ascending).
QuadratureRule composite_rule_breakpoints(std::span<const double> breakpoints,
                                          int order);

// Panel breakpoints for [lo, hi] with `uniform` equal panels, optionally
// preceded/followed by `graded` geometrically shrinking panels toward an
// endpoint (for integrable singularities).
std::vector<double> graded_breakpoints(double lo, double hi, int uniform,
                                       int graded_lo, int graded_hi,
                                       double ratio = 0.5);

}  // namespace specdiag
