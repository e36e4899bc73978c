#pragma once

#include <span>

#include "specdiag/grid_function.hpp"
#include "specdiag/transforms.hpp"

namespace specdiag {

// Central finite-difference stencil: weights for derivatives 0..max_derivative
// on offsets -half_width..half_width, exact on polynomials up to the
// accuracy order.
struct FiniteDifferenceStencil {
    int order = 8;
    double spacing = 0.0;
    std::vector<std::vector<double>> coefficients;  // [derivative][offset]

    static FiniteDifferenceStencil make(int max_derivative, int order,
                                        double spacing);
    int half_width() const {
        return static_cast<int>(coefficients.empty()
                                    ? 0
                                    : (coefficients[0].size() - 1) / 2);
    }
};

struct StencilOptions {
    int order = 8;
    double spacing = 0.0;  // 0 = family-appropriate default
};

// The family's differential operator applied to f at one point via central
// finite differences (torus: P(d/dt); Jacobi, Hermite, Laguerre operators
// composed from their coefficient functions).
Complex apply_operator_at(const BasisFamily& b, const SmoothFunction& f,
                          double t, const StencilOptions& opts = {});

GridFunction apply_operator_grid(const BasisFamily& b, const SmoothFunction& f,
                                 std::span<const double> grid,
                                 const StencilOptions& opts = {});

// sup |T b_n - eig(n) b_n| / sup |b_n| over the grid.
double crosscheck_eigenrelation(const BasisFamily& b, int n,
                                std::span<const double> grid,
                                const StencilOptions& opts = {});

// Exact spectral differentiation of the trigonometric interpolant of
// equispaced samples; the sharper torus oracle for band-limited data.
std::vector<Complex> torus_spectral_apply(const std::vector<Complex>& poly,
                                          std::span<const Complex> samples);

}  // namespace specdiag
