#include "specdiag/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace specdiag;

namespace {

// Independent moment oracle: int t^k w dt = mu0 * (J^k)_{00} with J the
// recurrence tridiagonal. Signed walk sums, no cancellation blowup.
double moment_via_jacobi_matrix(const WeightSpec& w, int k) {
    const int m = k / 2 + 2;
    const RecurrenceCoefficients rc = recurrence_coefficients(w, m);
    std::vector<double> v(m, 0.0), u(m, 0.0);
    v[0] = 1.0;
    for (int step = 0; step < k; ++step) {
        for (int i = 0; i < m; ++i) {
            double x = rc.a[i] * v[i];
            if (i > 0) x += std::sqrt(rc.b[i]) * v[i - 1];
            if (i + 1 < m) x += std::sqrt(rc.b[i + 1]) * v[i + 1];
            u[i] = x;
        }
        std::swap(u, v);
    }
    return rc.b[0] * v[0];
}

double quad_moment(const QuadratureRule& r, int k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * std::pow(r.nodes[i], k);
    return acc;
}

double abs_moment(const QuadratureRule& r, int k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * std::pow(std::abs(r.nodes[i]), k);
    return acc;
}

}  // namespace

TEST(GaussRule, LegendreTwoPoint) {
    const QuadratureRule r = gauss_rule(WeightSpec::jacobi(0.0, 0.0), 2);
    EXPECT_NEAR(r.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r.weights[0], 1.0, 1e-14);
    EXPECT_NEAR(r.weights[1], 1.0, 1e-14);
    EXPECT_EQ(r.exactness_degree, 3);
}

TEST(GaussRule, HermiteOnePoint) {
    const QuadratureRule r = gauss_rule(WeightSpec::hermite(), 1);
    EXPECT_NEAR(r.nodes[0], 0.0, 1e-15);
    EXPECT_NEAR(r.weights[0], std::sqrt(M_PI), 1e-14);
}

TEST(GaussRule, ExactnessAgainstMomentOracles) {
    const std::vector<WeightSpec> weights = {
        WeightSpec::jacobi(0.0, 0.0),   WeightSpec::jacobi(-0.5, 0.5),
        WeightSpec::jacobi(1.0, 0.25),  WeightSpec::hermite(),
        WeightSpec::laguerre(0.0),      WeightSpec::laguerre(-0.5),
        WeightSpec::laguerre(1.5),
    };
    for (const auto& w : weights) {
        for (int m = 1; m <= 20; ++m) {
            const QuadratureRule r = gauss_rule(w, m);
            for (int k = 0; k <= 2 * m - 1; ++k) {
                double expect;
                if (w.kind == WeightKind::HermiteGaussian) {
                    // Closed form: 0 for odd k, Gamma((k+1)/2) for even k.
                    expect = k % 2 ? 0.0 : std::tgamma((k + 1) / 2.0);
                } else if (w.kind == WeightKind::LaguerreGamma) {
                    expect = std::exp(std::lgamma(w.alpha + k + 1.0) -
                                      std::lgamma(w.alpha + 1.0)) *
                             w.total_mass();
                } else {
                    expect = moment_via_jacobi_matrix(w, k);
                }
                const double got = quad_moment(r, k);
                const double scale = abs_moment(r, k) + std::abs(expect) + 1e-300;
                EXPECT_LT(std::abs(got - expect) / scale, 1e-12)
                    << "m=" << m << " k=" << k;
            }
        }
    }
}

TEST(GaussRule, NodesInterlace) {
    for (const auto& w : {WeightSpec::jacobi(0.5, -0.25),
                          WeightSpec::hermite(), WeightSpec::laguerre(0.5)}) {
        for (int m = 2; m <= 15; ++m) {
            const QuadratureRule lo = gauss_rule(w, m);
            const QuadratureRule hi = gauss_rule(w, m + 1);
            for (int i = 0; i < m; ++i) {
                EXPECT_LT(hi.nodes[i], lo.nodes[i]);
                EXPECT_LT(lo.nodes[i], hi.nodes[i + 1]);
            }
        }
    }
}

TEST(GaussRule, WeightsPositiveAndMassCorrect) {
    for (const auto& w : {WeightSpec::jacobi(-0.5, -0.5),
                          WeightSpec::jacobi(1.0, 1.0), WeightSpec::hermite(),
                          WeightSpec::laguerre(-0.5),
                          WeightSpec::laguerre(2.0)}) {
        for (int m : {1, 5, 40, 200}) {
            const QuadratureRule r = gauss_rule(w, m);
            double mass = 0.0;
            for (double wi : r.weights) {
                EXPECT_GT(wi, 0.0);
                mass += wi;
            }
            EXPECT_LT(std::abs(mass - w.total_mass()) / w.total_mass(), 1e-12);
            for (std::size_t i = 1; i < r.nodes.size(); ++i)
                EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
        }
    }
}

TEST(GaussRule, TorusIsEquispacedUnitMass) {
    const QuadratureRule r = gauss_rule(WeightSpec::torus(), 8);
    ASSERT_EQ(r.nodes.size(), 8u);
    double mass = 0.0;
    for (int j = 0; j < 8; ++j) {
        EXPECT_NEAR(r.nodes[j], 2.0 * M_PI * j / 8, 1e-15);
        mass += r.weights[j];
    }
    EXPECT_NEAR(mass, 1.0, 1e-15);
}

TEST(GaussRule, LogWeightsMatch) {
    const GaussRuleData d = gauss_rule_extended(WeightSpec::hermite(), 60);
    for (std::size_t i = 0; i < d.rule.weights.size(); ++i)
        EXPECT_NEAR(std::exp(d.log_weights[i]), d.rule.weights[i],
                    1e-12 * d.rule.weights[i]);
}

TEST(CompositeRule, SinSquaredOverTorus) {
    const QuadratureRule r = composite_rule({0.0, 2.0 * M_PI}, 8, 8);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * std::sin(r.nodes[i]) * std::sin(r.nodes[i]);
    EXPECT_NEAR(acc / (2.0 * M_PI), 0.5, 1e-12);
}

TEST(CompositeRule, QuadraticOnSymmetricInterval) {
    const QuadratureRule r = composite_rule({-1.0, 1.0}, 4, 6);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * r.nodes[i] * r.nodes[i];
    EXPECT_NEAR(acc, 2.0 / 3.0, 1e-14);
}

TEST(CompositeRule, TruncatedExponentialTail) {
    // int_0^inf e^-t dt = 1; the tail beyond T = 40 is ~4e-18.
    const QuadratureRule r = composite_rule({0.0, 40.0}, 40, 8);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * std::exp(-r.nodes[i]);
    EXPECT_NEAR(acc, 1.0, 1e-10);
}

TEST(CompositeRule, GradedBreakpointsResolveSqrtSingularity) {
    const std::vector<double> bp = graded_breakpoints(0.0, 1.0, 8, 80, 0);
    const QuadratureRule r = composite_rule_breakpoints(bp, 8);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] / std::sqrt(r.nodes[i]);
    EXPECT_NEAR(acc, 2.0, 1e-11);
}

TEST(CompositeRule, RejectsBadInput) {
    EXPECT_THROW(composite_rule({0.0, 1.0}, 0, 8), ConfigError);
    EXPECT_THROW(composite_rule(Interval::half_line(), 4, 8), ConfigError);
    EXPECT_THROW(gauss_rule(WeightSpec::jacobi(0.0, 0.0), 0), ConfigError);
}
