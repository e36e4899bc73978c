#pragma once

#include <limits>

#include "specdiag/transforms.hpp"

namespace specdiag {

// L^p norm carried in log form so iterate norms never overflow; -inf
// encodes the zero function.
struct LogNorm {
    double log_value = -std::numeric_limits<double>::infinity();

    double value() const { return std::exp(log_value); }
    bool is_zero() const { return std::isinf(log_value) && log_value < 0; }

    static LogNorm zero() { return {}; }
    static LogNorm from_value(double v) {
        if (v < 0.0 || !std::isfinite(v))
            throw NumericError("LogNorm: norm value must be finite and >= 0");
        return {v == 0.0 ? -std::numeric_limits<double>::infinity()
                         : std::log(v)};
    }
};

struct NormOptions {
    int max_refinements = 6;
    double rel_tol = 1e-12;      // p < inf: quadrature doubling target
    double sup_rel_tol = 1e-8;   // p = inf: sampled-max doubling target
    int oscillation_hint = 64;   // largest active mode index
    bool force_quadrature = false;  // bypass the p=2 Parseval shortcut
};

// Admissibility of (alpha, p) for the Laguerre family: always for alpha >= 0,
// and 2/(alpha+2) < p < -2/alpha for -1 < alpha < 0.
bool laguerre_condition(double alpha, double p);

// log ||.||_2 from coefficients by Parseval.
double parseval_log_norm(const CoefficientSequence& c);

// L^p norm of a pointwise-evaluated function against a measure weight.
// p < inf: composite quadrature with refinement doubling; p = inf: sampled
// max on family-appropriate grids, doubled until stable.
LogNorm lp_norm(const SmoothFunction& f, double p, const WeightSpec& w,
                const NormOptions& opts = {});

// L^p norm of the synthesis of c in family b (p = 2 via Parseval unless
// force_quadrature). Scale is factored out first, so arbitrarily large
// coefficient magnitudes are safe.
LogNorm lp_norm(const CoefficientSequence& c, const BasisFamily& b, double p,
                const NormOptions& opts = {});

// Discrete norm of samples against an explicit rule (p < inf), or the
// sampled max (p = inf; the rule's weights are ignored).
LogNorm lp_norm(const GridFunction& g, double p, const QuadratureRule& rule);

}  // namespace specdiag
