#pragma once

#include <cstdint>
#include <utility>

#include "specdiag/norms.hpp"
#include "specdiag/operator_oracle.hpp"

namespace specdiag {

// Iterate-norm record: a_n = ||T^n f||_p^(1/n), the p = 2 consecutive norm
// ratios, and the extrapolated limit (two-point linear extrapolation of
// log a_n in 1/n, which removes the constant-factor bias exactly).
struct IterateRecord {
    std::vector<double> log_norms;  // log ||T^n f||_p, n = 1..n_max
    std::vector<double> a;          // a[n-1] = exp(log_norms[n-1] / n)
    std::vector<double> ratio;      // p = 2 only: ||T^{n+1}f|| / ||T^n f||
    double log_norm_f = 0.0;        // n = 0
    double limit_extrapolated = 0.0;
    double convergence_indicator = 0.0;  // |a_{n_max} - a_{n_max/2}|
};

struct LocalSpectrum {
    std::vector<Complex> points;  // sorted by (re, im), deduplicated
    bool tail_flag = false;
};

struct SpectralChecks {
    bool liminf_bound = false;
    bool limsup_bound = false;
    bool formula = false;
};

struct SpectralReport {
    std::string family;
    double p = 2.0;
    std::vector<Complex> spectrum_points;
    double radius_support = 0.0;
    IterateRecord iterates;
    double limit_estimate = 0.0;
    double residual = 0.0;
    bool tail_flag = false;
    SpectralChecks checks;
};

struct Tolerances {
    double support_threshold = kDefaultSupportThreshold;
    double liminf_tol = 1e-9;
    double limsup_tol = 1e-9;
    double formula_tol = 1e-6;  // widened to 1e-4 automatically at p = inf
};

// Eigenvalues over the detected support of the transform of f.
LocalSpectrum local_spectrum(const SmoothFunction& f, const BasisFamily& b,
                             int N, double threshold);

// sup |z| over the local spectrum; 0 for empty support.
double radius_via_support(const SmoothFunction& f, const BasisFamily& b,
                          int N, double threshold);

// Iterate norms computed entirely in coefficient/log space. Coefficients
// below the support threshold are masked out first, so the same SupportSet
// drives the spectrum and the iterates.
IterateRecord radius_via_iterates(const SmoothFunction& f,
                                  const BasisFamily& b, double p, int n_max,
                                  int N,
                                  double threshold = kDefaultSupportThreshold);
IterateRecord radius_via_iterates_from_coeffs(
    const CoefficientSequence& c, const BasisFamily& b, double p, int n_max,
    double threshold = kDefaultSupportThreshold);

// Both sides of the local spectral radius formula plus the one-sided bound
// checks, assembled into one report.
SpectralReport verify_lsrf(const SmoothFunction& f, const BasisFamily& b,
                           double p, int n_max, int N,
                           const Tolerances& tol = {});

struct ResolventReport {
    double residual = 0.0;  // ||(T-z)phi_z - f||_inf / ||f||_inf on the grid
    std::vector<std::pair<double, double>> analyticity;  // (h, sup mismatch)
};

// Builds phi_z from resolvent coefficients, applies the differential
// operator on the grid, and checks the derivative of z -> psi_z against the
// squared-resolvent coefficients.
ResolventReport verify_resolvent(const SmoothFunction& f, const BasisFamily& b,
                                 Complex z, int N,
                                 std::span<const double> grid);

struct SvepReport {
    double max_surviving = 0.0;
    std::vector<int> surviving_indices;
    int trials = 0;
};

// Probe of the uniqueness mechanism: (eig(k) - z) s(k) = 0 enforced at every
// z in z_grid kills s(k) unless eig(k) equals all of them.
SvepReport svep_probe(const BasisFamily& b, std::span<const Complex> z_grid,
                      int N, std::uint64_t seed, int trials = 8);

}  // namespace specdiag
