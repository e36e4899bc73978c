#include "specdiag/basis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mpfr_series_oracle.hpp"
#include "specdiag/norms.hpp"

using namespace specdiag;
using namespace specdiag_test;

TEST(TorusBasis, ConstantAndUnitModulus) {
    const auto b = BasisFamily::torus({{1.0, 0.0}});
    EXPECT_EQ(eval_basis(b, 0, 1.234), Complex(1.0, 0.0));
    for (int n : {-5, 1, 7})
        EXPECT_NEAR(std::abs(eval_basis(b, n, 0.77)), 1.0, 1e-15);
}

TEST(JacobiBasis, LegendreNormalizationAtDegreeZero) {
    const auto b = BasisFamily::jacobi(0.0, 0.0);
    EXPECT_NEAR(eval_basis(b, 0, 0.3).real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(JacobiBasis, StandardizationAtOne) {
    // P_n^(a,b)(1) = binom(n+a, n).
    for (double a : {-0.5, 0.0, 0.5, 1.0, 2.25}) {
        for (double be : {-0.5, 0.0, 1.5}) {
            for (int n : {0, 1, 2, 5, 13}) {
                const double expect =
                    std::exp(std::lgamma(n + a + 1.0) - std::lgamma(a + 1.0) -
                             std::lgamma(n + 1.0));
                EXPECT_NEAR(jacobi_poly_unnormalized(n, a, be, 1.0), expect,
                            1e-12 * std::abs(expect))
                    << "n=" << n << " a=" << a << " b=" << be;
            }
        }
    }
}

TEST(JacobiBasis, RecurrenceMatchesExplicitNormalization) {
    // The orthonormal recurrence and the closed-form normalization of the
    // standardized polynomial must produce the same function.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(-0.999, 0.999);
    for (double a : {-0.5, 0.0, 0.7}) {
        for (double be : {-0.5, 0.25, 2.0}) {
            for (int trial = 0; trial < 5; ++trial) {
                const double t = unif(rng);
                std::vector<double> vals(13);
                jacobi_normalized_all(12, a, be, t, vals);
                for (int n : {0, 1, 4, 12}) {
                    const double expect =
                        jacobi_normalization(n, a, be) *
                        jacobi_poly_unnormalized(n, a, be, t);
                    EXPECT_NEAR(vals[n], expect,
                                1e-12 * (std::abs(expect) + 1.0));
                }
            }
        }
    }
}

TEST(JacobiBasis, SupBound) {
    EXPECT_NEAR(jacobi_sup_bound(7, 0.0, 0.0), 1.0, 1e-14);
    EXPECT_NEAR(jacobi_sup_bound(0, 0.8, -0.3), 1.0, 1e-14);
    EXPECT_NEAR(jacobi_sup_bound(3, 1.0, 0.0), 4.0, 1e-12);
    EXPECT_THROW(jacobi_sup_bound(3, -0.8, -0.9), ParameterError);
}

TEST(JacobiBasis, BoundHoldsOnDenseGrid) {
    // |normalized p_n| <= normalization * binom(n + max(a,b), n) on [-1,1].
    for (double a : {-0.5, 0.0, 0.5, 1.0}) {
        for (double be : {-0.5, 0.0, 0.5, 1.0}) {
            for (int n : {3, 25, 100}) {
                const double bound = jacobi_normalization(n, a, be) *
                                     jacobi_sup_bound(n, a, be) *
                                     (1.0 + 1e-12);
                std::vector<double> vals(n + 1);
                double worst = 0.0;
                for (int i = 0; i <= 10000; ++i) {
                    const double t = -1.0 + 2.0 * i / 10000.0;
                    jacobi_normalized_all(n, a, be, t, vals);
                    worst = std::max(worst, std::abs(vals[n]));
                }
                EXPECT_LE(worst, bound) << "n=" << n << " a=" << a
                                        << " b=" << be;
            }
        }
    }
}

TEST(HermiteBasis, GroundState) {
    const auto b = BasisFamily::hermite();
    EXPECT_NEAR(eval_basis(b, 0, 0.0).real(), std::pow(M_PI, -0.25), 1e-15);
    // h_1(t) = sqrt(2) t h_0(t)
    EXPECT_NEAR(eval_basis(b, 1, 0.9).real(),
                std::sqrt(2.0) * 0.9 * std::pow(M_PI, -0.25) *
                    std::exp(-0.5 * 0.81),
                1e-14);
}

TEST(EigMap, TorusPolynomialSubstitution) {
    // P = X^2 gives P(3i) = -9.
    const auto b = BasisFamily::torus({{0, 0}, {0, 0}, {1, 0}});
    const EigenvalueMap e = eig_map(b);
    EXPECT_NEAR(e(3).real(), -9.0, 1e-14);
    EXPECT_NEAR(e(3).imag(), 0.0, 1e-14);
}

TEST(EigMap, FamilyFormulas) {
    const EigenvalueMap ej = eig_map(BasisFamily::jacobi(0.0, 0.0));
    EXPECT_EQ(ej(2), Complex(-6.0, 0.0));
    const EigenvalueMap eh = eig_map(BasisFamily::hermite());
    EXPECT_EQ(eh(0), Complex(-1.0, 0.0));
    EXPECT_EQ(eh(4), Complex(-9.0, 0.0));
    const EigenvalueMap el = eig_map(BasisFamily::laguerre(1.0));
    EXPECT_EQ(el(0), Complex(0.0, 0.0));
    EXPECT_EQ(el(6), Complex(-6.0, 0.0));
}

TEST(Orthonormality, GramIsIdentity) {
    // 33x33 Gram built with a Gauss rule of exactness >= 2N.
    struct Case {
        BasisFamily b;
        double tol;
    };
    std::vector<Case> cases;
    for (double a : {-0.5, 0.0, 0.5, 1.0})
        for (double be : {-0.5, 0.0, 0.5, 1.0})
            cases.push_back({BasisFamily::jacobi(a, be), 1e-10});
    cases.push_back({BasisFamily::hermite(), 1e-8});
    for (double a : {-0.5, 0.0, 1.0})
        cases.push_back({BasisFamily::laguerre(a), 1e-8});

    const int N = 32;
    for (const auto& [b, tol] : cases) {
        GaussRuleData d;
        switch (b.kind()) {
            case FamilyKind::Jacobi:
                d = gauss_rule_extended(WeightSpec::jacobi(b.alpha(), b.beta()),
                                        N + 4);
                break;
            case FamilyKind::Hermite:
                d = gauss_rule_extended(WeightSpec::hermite(), N + 4);
                break;
            default:
                d = gauss_rule_extended(WeightSpec::laguerre(b.alpha()), N + 4);
                break;
        }
        std::vector<std::vector<double>> vals(d.rule.nodes.size());
        std::vector<double> modw(d.rule.nodes.size());
        for (std::size_t i = 0; i < d.rule.nodes.size(); ++i) {
            vals[i].resize(N + 1);
            const double x = d.rule.nodes[i];
            switch (b.kind()) {
                case FamilyKind::Jacobi:
                    jacobi_normalized_all(N, b.alpha(), b.beta(), x, vals[i]);
                    modw[i] = d.rule.weights[i];
                    break;
                case FamilyKind::Hermite:
                    hermite_function_all(N, x, vals[i]);
                    modw[i] = std::exp(d.log_weights[i] + x * x);
                    break;
                default:
                    laguerre_function_all(N, b.alpha(), x, vals[i]);
                    modw[i] = std::exp(d.log_weights[i] + x -
                                       b.alpha() * std::log(x));
                    break;
            }
        }
        double worst = 0.0;
        for (int m = 0; m <= N; ++m) {
            for (int n = m; n <= N; ++n) {
                double g = 0.0;
                for (std::size_t i = 0; i < vals.size(); ++i)
                    g += modw[i] * vals[i][m] * vals[i][n];
                worst = std::max(worst, std::abs(g - (m == n ? 1.0 : 0.0)));
            }
        }
        EXPECT_LT(worst, tol) << b.name() << " a=" << b.alpha()
                              << " b=" << b.beta();
    }
}

TEST(Orthonormality, TorusDiscrete) {
    const auto b = BasisFamily::torus({{0, 0}, {1, 0}});
    const int N = 32;
    const int m = 2 * N + 1;
    double worst = 0.0;
    for (int j = -N; j <= N; ++j) {
        for (int k = j; k <= N; ++k) {
            Complex g(0.0, 0.0);
            for (int i = 0; i < m; ++i) {
                const double t = 2.0 * M_PI * i / m;
                g += eval_basis(b, j, t) * std::conj(eval_basis(b, k, t));
            }
            g /= static_cast<double>(m);
            worst = std::max(worst, std::abs(g - (j == k ? 1.0 : 0.0)));
        }
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(RecurrenceStability, MatchesSeriesSummationAtDegree200) {
    std::mt19937_64 rng(2025);
    std::uniform_real_distribution<double> interior(-0.95, 0.95);
    // Jacobi at n = 200 against the 1024-bit series oracle.
    for (int trial = 0; trial < 5; ++trial) {
        const double t = interior(rng);
        std::vector<double> vals(201);
        jacobi_normalized_all(200, 0.5, -0.25, t, vals);
        const double oracle = mpfr_jacobi_normalized(200, 0.5, -0.25, t);
        EXPECT_NEAR(vals[200], oracle, 1e-8 * (std::abs(oracle) + 0.1))
            << "t=" << t;
    }
    // Hermite function at n = 200 inside the oscillatory region.
    std::uniform_real_distribution<double> hreg(-5.0, 5.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double t = hreg(rng);
        std::vector<double> vals(201);
        hermite_function_all(200, t, vals);
        const double oracle = mpfr_hermite_function(200, t);
        EXPECT_NEAR(vals[200], oracle, 1e-6 * (std::abs(oracle) + 0.1))
            << "t=" << t;
    }
    // Laguerre function at n = 200.
    std::uniform_real_distribution<double> lreg(0.5, 30.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double t = lreg(rng);
        std::vector<double> vals(201);
        laguerre_function_all(200, 0.5, t, vals);
        const double oracle = mpfr_laguerre_function(200, 0.5, t);
        EXPECT_NEAR(vals[200], oracle, 1e-6 * (std::abs(oracle) + 0.1))
            << "t=" << t;
    }
}

TEST(LaguerrePolyPart, ConsistentWithFunction) {
    // l_n(t) = polypart_n(t) * exp(-t/2) t^{alpha/2}.
    std::vector<double> f(9), p(9);
    const double alpha = 0.75, t = 2.3;
    laguerre_function_all(8, alpha, t, f);
    laguerre_polypart_all(8, alpha, t, p);
    for (int n = 0; n <= 8; ++n)
        EXPECT_NEAR(f[n],
                    p[n] * std::exp(-0.5 * t) * std::pow(t, 0.5 * alpha),
                    1e-13 * (std::abs(f[n]) + 1.0));
}

TEST(DomainChecks, OutsideDomainIsAnError) {
    EXPECT_THROW(eval_basis(BasisFamily::jacobi(0.0, 0.0), 2, 1.5),
                 DomainError);
    EXPECT_THROW(eval_basis(BasisFamily::laguerre(0.5), 2, -0.1), DomainError);
    EXPECT_THROW(eval_basis(BasisFamily::laguerre(-0.5), 2, 0.0), DomainError);
    EXPECT_NO_THROW(eval_basis(BasisFamily::laguerre(0.5), 2, 0.0));
}

TEST(SlowGrowth, LogLogSlopeBelowTwo) {
    // Fitted slope of log ||b_n||_p vs log(1+n) over n in [50, 200].
    struct Case {
        BasisFamily b;
        double p;
    };
    std::vector<Case> cases = {
        {BasisFamily::jacobi(0.5, 0.5), 1.0},
        {BasisFamily::jacobi(0.0, 0.0),
         std::numeric_limits<double>::infinity()},
        {BasisFamily::hermite(), 4.0},
        {BasisFamily::laguerre(0.0), 2.0},
    };
    for (const auto& [b, p] : cases) {
        std::vector<double> ns, logn, lognorm;
        for (int n = 50; n <= 200; n += 30) {
            CoefficientSequence d{IndexSet(IndexKind::Naturals, n)};
            d.set(n, Complex(1.0, 0.0));
            const double v = lp_norm(d, b, p).value();
            logn.push_back(std::log(1.0 + n));
            lognorm.push_back(std::log(v));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(logn.size());
        for (std::size_t i = 0; i < logn.size(); ++i) {
            sx += logn[i];
            sy += lognorm[i];
            sxx += logn[i] * logn[i];
            sxy += logn[i] * lognorm[i];
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        EXPECT_LT(std::abs(slope), 2.0) << b.name() << " p=" << p;
    }
}
