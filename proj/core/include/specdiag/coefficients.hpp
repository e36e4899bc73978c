#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "specdiag/index_set.hpp"

namespace specdiag {

using Complex = std::complex<double>;

// Library-wide defaults.
inline constexpr int kDefaultTruncationDegree = 256;
inline constexpr double kDefaultSupportThreshold = 1e-12;

// Absolute floor below which |eig(n) - z| counts as a singular resolvent.
inline double resolvent_singular_floor(Complex z) {
    return 1e-10 * (1.0 + std::abs(z));
}

// Truncated transform coefficients, stored densely over the index set.
class CoefficientSequence {
public:
    explicit CoefficientSequence(IndexSet idx)
        : idx_(idx), values_(idx.size(), Complex(0.0, 0.0)) {}

    const IndexSet& index_set() const noexcept { return idx_; }

    Complex operator[](int n) const { return values_[idx_.offset(n)]; }

    void set(int n, Complex v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericError("CoefficientSequence: non-finite value at index " +
                               std::to_string(n));
        values_[idx_.offset(n)] = v;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    // Dense view in index order (min_index .. max_index).
    const std::vector<Complex>& values() const noexcept { return values_; }

private:
    IndexSet idx_;
    std::vector<Complex> values_;
};

// Index -> eigenvalue, as produced by a diagonalizing family.
struct EigenvalueMap {
    std::string family_name;
    std::function<Complex(int)> eval;

    Complex operator()(int n) const { return eval(n); }
};

// Above-threshold indices of a coefficient sequence.
struct SupportSet {
    std::vector<int> indices;    // sorted ascending
    double threshold_used = 0.0;
    bool tail_flag = false;

    bool empty() const noexcept { return indices.empty(); }
};

// Indices n with |c(n)| > rel_threshold * max |c|; empty for the zero sequence.
SupportSet support(const CoefficientSequence& c, double rel_threshold);

// Diagonal action iterated n times: out(k) = eig(k)^n * c(k).
// Magnitudes are accumulated in log space; overflow raises OverflowError.
CoefficientSequence apply_power(const CoefficientSequence& c,
                                const EigenvalueMap& e, int n);

// out(k) = c(k) / (eig(k) - z) on the support, 0 elsewhere.
CoefficientSequence resolvent_coeffs(const CoefficientSequence& c,
                                     const EigenvalueMap& e, Complex z,
                                     double rel_threshold = kDefaultSupportThreshold);

// out(k) = c(k) / (eig(k) - z)^2 on the support, 0 elsewhere.
CoefficientSequence resolvent_derivative_coeffs(
    const CoefficientSequence& c, const EigenvalueMap& e, Complex z,
    double rel_threshold = kDefaultSupportThreshold);

// Partial sum of -sum_{j<n_terms} eig(k)^j c(k) / z^(j+1), per coefficient.
CoefficientSequence neumann_partial_sum(const CoefficientSequence& c,
                                        const EigenvalueMap& e, Complex z,
                                        int n_terms);

}  // namespace specdiag
