#include "specdiag/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace specdiag {

namespace {

constexpr double kLogDoubleMax = 709.0;  // just under log(DBL_MAX)

std::string short_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// eig^n * c without intermediate overflow: magnitude in log space,
// phase accumulated separately.
Complex scaled_power(Complex c, Complex eig, int n) {
    if (c == Complex(0.0, 0.0)) return c;
    if (n == 0) return c;
    if (eig == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    const double log_mag = static_cast<double>(n) * std::log(std::abs(eig)) +
                           std::log(std::abs(c));
    if (log_mag > kLogDoubleMax) {
        throw OverflowError("apply_power: |eig|^n |c| exceeds representable range");
    }
    const double phase = std::arg(c) + static_cast<double>(n) * std::arg(eig);
    return std::polar(std::exp(log_mag), phase);
}

}  // namespace

SupportSet support(const CoefficientSequence& c, double rel_threshold) {
    if (rel_threshold < 0.0)
        throw ConfigError("support: rel_threshold must be >= 0");
    SupportSet s;
    s.threshold_used = rel_threshold;
    const double cutoff = rel_threshold * c.max_abs();
    const IndexSet& idx = c.index_set();
    for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
        if (std::abs(c[n]) > cutoff) {
            s.indices.push_back(n);
            if (idx.near_edge(n)) s.tail_flag = true;
        }
    }
    return s;
}

CoefficientSequence apply_power(const CoefficientSequence& c,
                                const EigenvalueMap& e, int n) {
    if (n < 0) throw ConfigError("apply_power: power must be >= 0");
    if (n == 0) return c;
    CoefficientSequence out(c.index_set());
    const IndexSet& idx = c.index_set();
    for (int k = idx.min_index(); k <= idx.max_index(); ++k) {
        const Complex v = c[k];
        if (v == Complex(0.0, 0.0)) continue;
        out.set(k, scaled_power(v, e(k), n));
    }
    return out;
}

CoefficientSequence resolvent_coeffs(const CoefficientSequence& c,
                                     const EigenvalueMap& e, Complex z,
                                     double rel_threshold) {
    const SupportSet supp = support(c, rel_threshold);
    const double floor = resolvent_singular_floor(z);
    CoefficientSequence out(c.index_set());
    for (int k : supp.indices) {
        const Complex denom = e(k) - z;
        if (std::abs(denom) < floor) {
            throw SingularResolventError(
                "resolvent_coeffs: z within " + short_double(floor) +
                    " of eigenvalue at index " + std::to_string(k),
                k);
        }
        out.set(k, c[k] / denom);
    }
    return out;
}

CoefficientSequence resolvent_derivative_coeffs(const CoefficientSequence& c,
                                                const EigenvalueMap& e,
                                                Complex z,
                                                double rel_threshold) {
    const SupportSet supp = support(c, rel_threshold);
    const double floor = resolvent_singular_floor(z);
    CoefficientSequence out(c.index_set());
    for (int k : supp.indices) {
        const Complex denom = e(k) - z;
        if (std::abs(denom) < floor) {
            throw SingularResolventError(
                "resolvent_derivative_coeffs: z within " + short_double(floor) +
                    " of eigenvalue at index " + std::to_string(k),
                k);
        }
        out.set(k, c[k] / (denom * denom));
    }
    return out;
}

CoefficientSequence neumann_partial_sum(const CoefficientSequence& c,
                                        const EigenvalueMap& e, Complex z,
                                        int n_terms) {
    if (n_terms < 1) throw ConfigError("neumann_partial_sum: n_terms must be >= 1");
    if (z == Complex(0.0, 0.0))
        throw ConfigError("neumann_partial_sum: z must be nonzero");
    CoefficientSequence out(c.index_set());
    const IndexSet& idx = c.index_set();
    for (int k = idx.min_index(); k <= idx.max_index(); ++k) {
        const Complex v = c[k];
        if (v == Complex(0.0, 0.0)) continue;
        // -c(k)/z * sum_{j<n} (eig(k)/z)^j, evaluated by Horner.
        const Complex r = e(k) / z;
        Complex geo(0.0, 0.0);
        for (int j = 0; j < n_terms; ++j) geo = geo * r + Complex(1.0, 0.0);
        const Complex val = -v / z * geo;
        if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
            throw OverflowError(
                "neumann_partial_sum: partial sum left the representable range "
                "at index " + std::to_string(k));
        out.set(k, val);
    }
    return out;
}

}  // namespace specdiag
