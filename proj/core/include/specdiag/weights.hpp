#pragma once

#include <cmath>

#include "specdiag/errors.hpp"
#include "specdiag/interval.hpp"

namespace specdiag {

// The weights the toolkit integrates against. TorusUniform, JacobiBeta,
// HermiteGaussian and LaguerreGamma admit Gauss rules; Lebesgue is the flat
// measure used for the Hermite/Laguerre L^p spaces.
enum class WeightKind {
    TorusUniform,     // dt/2pi on [0, 2pi]
    JacobiBeta,       // (1-t)^alpha (1+t)^beta on (-1, 1)
    HermiteGaussian,  // exp(-t^2) on R
    LaguerreGamma,    // t^alpha exp(-t) on (0, inf)
    Lebesgue,         // 1 on a given interval
};

struct WeightSpec {
    WeightKind kind = WeightKind::Lebesgue;
    double alpha = 0.0;
    double beta = 0.0;
    Interval interval = {0.0, 0.0};  // only consulted for Lebesgue

    Interval domain() const {
        switch (kind) {
            case WeightKind::TorusUniform: return {0.0, 2.0 * M_PI};
            case WeightKind::JacobiBeta: return {-1.0, 1.0};
            case WeightKind::HermiteGaussian: return Interval::real_line();
            case WeightKind::LaguerreGamma: return Interval::half_line();
            case WeightKind::Lebesgue: return interval;
        }
        return interval;
    }

    double density(double t) const {
        switch (kind) {
            case WeightKind::TorusUniform: return 1.0 / (2.0 * M_PI);
            case WeightKind::JacobiBeta:
                return std::pow(1.0 - t, alpha) * std::pow(1.0 + t, beta);
            case WeightKind::HermiteGaussian: return std::exp(-t * t);
            case WeightKind::LaguerreGamma:
                return std::pow(t, alpha) * std::exp(-t);
            case WeightKind::Lebesgue: return 1.0;
        }
        return 1.0;
    }

    // Integral of the density over the domain.
    double total_mass() const {
        switch (kind) {
            case WeightKind::TorusUniform: return 1.0;
            case WeightKind::JacobiBeta:
                return std::exp((alpha + beta + 1.0) * std::log(2.0) +
                                std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                                std::lgamma(alpha + beta + 2.0));
            case WeightKind::HermiteGaussian: return std::sqrt(M_PI);
            case WeightKind::LaguerreGamma: return std::exp(std::lgamma(alpha + 1.0));
            case WeightKind::Lebesgue:
                return interval.finite()
                           ? interval.length()
                           : std::numeric_limits<double>::infinity();
        }
        return 0.0;
    }

    static WeightSpec torus() { return {WeightKind::TorusUniform}; }
    static WeightSpec jacobi(double a, double b) {
        if (a <= -1.0 || b <= -1.0)
            throw ParameterError("jacobi weight: alpha, beta must be > -1");
        return {WeightKind::JacobiBeta, a, b};
    }
    static WeightSpec hermite() { return {WeightKind::HermiteGaussian}; }
    static WeightSpec laguerre(double a) {
        if (a <= -1.0)
            throw ParameterError("laguerre weight: alpha must be > -1");
        return {WeightKind::LaguerreGamma, a};
    }
    static WeightSpec lebesgue(Interval iv) {
        return {WeightKind::Lebesgue, 0.0, 0.0, iv};
    }
};

}  // namespace specdiag
