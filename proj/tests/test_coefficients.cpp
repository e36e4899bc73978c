#include "specdiag/coefficients.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace specdiag;

namespace {

EigenvalueMap linear_eig() {
    return {"test", [](int n) { return Complex(n, 0.0); }};
}

CoefficientSequence delta(IndexSet idx, int k, Complex v = {1.0, 0.0}) {
    CoefficientSequence c(idx);
    c.set(k, v);
    return c;
}

}  // namespace

TEST(Support, ZeroSequenceIsEmpty) {
    CoefficientSequence c(IndexSet(IndexKind::Integers, 8));
    const SupportSet s = support(c, 1e-12);
    EXPECT_TRUE(s.indices.empty());
    EXPECT_FALSE(s.tail_flag);
}

TEST(Support, FourierCosineModes) {
    // cos 3t has coefficients 1/2 at +-3.
    CoefficientSequence c(IndexSet(IndexKind::Integers, 8));
    c.set(3, {0.5, 0.0});
    c.set(-3, {0.5, 0.0});
    c.set(1, {1e-15, 0.0});
    const SupportSet s = support(c, 1e-12);
    EXPECT_EQ(s.indices, (std::vector<int>{-3, 3}));
}

TEST(Support, ThresholdZeroKeepsAllNonzero) {
    IndexSet idx(IndexKind::Integers, 10);
    CoefficientSequence c(idx);
    for (int n = -10; n <= 10; ++n) c.set(n, {std::pow(2.0, -std::abs(n)), 0.0});
    const SupportSet s = support(c, 0.0);
    EXPECT_EQ(s.indices.size(), 21u);
    EXPECT_TRUE(s.tail_flag);  // support touches the truncation edge
}

TEST(Support, ScaleInvariance) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    IndexSet idx(IndexKind::Naturals, 30);
    CoefficientSequence c(idx);
    for (int n = 0; n <= 30; ++n)
        if (n % 3 == 0) c.set(n, {g(rng), g(rng)});
    const SupportSet s1 = support(c, 1e-6);
    CoefficientSequence scaled(idx);
    for (int n = 0; n <= 30; ++n) scaled.set(n, c[n] * 1e-7);
    const SupportSet s2 = support(scaled, 1e-6);
    EXPECT_EQ(s1.indices, s2.indices);
}

TEST(ApplyPower, SingleMode) {
    IndexSet idx(IndexKind::Naturals, 6);
    auto c = delta(idx, 2, {3.0, 0.0});
    EigenvalueMap e{"t", [](int n) { return Complex(0.0, n); }};
    const auto out = apply_power(c, e, 3);
    // (2i)^3 * 3 = -24i
    EXPECT_NEAR(out[2].real(), 0.0, 1e-12);
    EXPECT_NEAR(out[2].imag(), -24.0, 1e-12);
    EXPECT_EQ(out[4], Complex(0.0, 0.0));
}

TEST(ApplyPower, PowerZeroIsIdentity) {
    IndexSet idx(IndexKind::Naturals, 4);
    auto c = delta(idx, 1, {2.5, -1.0});
    const auto out = apply_power(c, linear_eig(), 0);
    EXPECT_EQ(out[1], c[1]);
}

TEST(ApplyPower, HermiteModeOneFourthPower) {
    // Eigenvalue -(2n+1) at n = 1 is -3; (-3)^4 = 81.
    IndexSet idx(IndexKind::Naturals, 4);
    auto c = delta(idx, 1);
    EigenvalueMap e{"hermite", [](int n) { return Complex(-(2.0 * n + 1.0), 0.0); }};
    const auto out = apply_power(c, e, 4);
    EXPECT_NEAR(out[1].real(), 81.0, 81.0 * 1e-12);
    EXPECT_NEAR(out[1].imag(), 0.0, 81.0 * 1e-12);
}

TEST(ApplyPower, CompositionLaw) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    IndexSet idx(IndexKind::Integers, 12);
    CoefficientSequence c(idx);
    for (int n = -12; n <= 12; ++n) c.set(n, {g(rng), g(rng)});
    EigenvalueMap e{"t", [](int n) { return Complex(0.3 * n, -0.1 * n); }};
    const auto lhs = apply_power(apply_power(c, e, 3), e, 4);
    const auto rhs = apply_power(c, e, 7);
    for (int n = -12; n <= 12; ++n) {
        const double scale = std::max(std::abs(rhs[n]), 1e-300);
        EXPECT_LT(std::abs(lhs[n] - rhs[n]) / scale, 1e-12) << "n=" << n;
    }
}

TEST(ApplyPower, OverflowIsAnError) {
    IndexSet idx(IndexKind::Naturals, 2);
    auto c = delta(idx, 1, {1.0, 0.0});
    EigenvalueMap e{"t", [](int) { return Complex(1e10, 0.0); }};
    EXPECT_THROW(apply_power(c, e, 40), OverflowError);
}

TEST(Resolvent, SingleMode) {
    IndexSet idx(IndexKind::Naturals, 6);
    auto c = delta(idx, 3);
    // e(3) - z = 2
    EigenvalueMap e{"t", [](int n) { return Complex(n, 0.0); }};
    const auto out = resolvent_coeffs(c, e, Complex(1.0, 0.0));
    EXPECT_NEAR(out[3].real(), 0.5, 1e-15);
}

TEST(Resolvent, JacobiModeThreeAtZero) {
    // -n(n+alpha+beta+1) at n = 3, alpha = beta = 0 is -12.
    IndexSet idx(IndexKind::Naturals, 6);
    auto c = delta(idx, 3);
    EigenvalueMap e{"jacobi",
                    [](int n) { return Complex(-n * (n + 1.0), 0.0); }};
    const auto out = resolvent_coeffs(c, e, Complex(0.0, 0.0));
    EXPECT_NEAR(out[3].real(), -1.0 / 12.0, 1e-15);
}

TEST(Resolvent, PointwiseIdentityOnSupport) {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    IndexSet idx(IndexKind::Integers, 16);
    CoefficientSequence c(idx);
    for (int n = -16; n <= 16; n += 2) c.set(n, {g(rng), g(rng)});
    EigenvalueMap e{"t", [](int n) { return Complex(0.0, n); }};
    const Complex z(0.7, 0.3);
    const auto psi = resolvent_coeffs(c, e, z);
    for (int n : support(c, kDefaultSupportThreshold).indices) {
        const Complex back = (e(n) - z) * psi[n];
        EXPECT_LT(std::abs(back - c[n]) / std::abs(c[n]), 1e-14);
    }
}

TEST(Resolvent, SingularZIsAnError) {
    IndexSet idx(IndexKind::Naturals, 4);
    auto c = delta(idx, 2);
    try {
        resolvent_coeffs(c, linear_eig(), Complex(2.0, 0.0));
        FAIL() << "expected SingularResolventError";
    } catch (const SingularResolventError& e) {
        EXPECT_EQ(e.index(), 2);
    }
}

TEST(ResolventDerivative, SingleModeSquare) {
    IndexSet idx(IndexKind::Naturals, 6);
    auto c = delta(idx, 3);
    EigenvalueMap e{"t", [](int n) { return Complex(n, 0.0); }};
    const auto out = resolvent_derivative_coeffs(c, e, Complex(1.0, 0.0));
    EXPECT_NEAR(out[3].real(), 0.25, 1e-15);
}

TEST(ResolventDerivative, MatchesFiniteDifferences) {
    // (psi_{z+h} - psi_z)/h converges to chi_z at first order.
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    IndexSet idx(IndexKind::Naturals, 10);
    CoefficientSequence c(idx);
    for (int n = 0; n <= 10; ++n) c.set(n, {g(rng), g(rng)});
    EigenvalueMap e{"t", [](int n) { return Complex(-n * 1.0, 0.0); }};
    const Complex z(2.0, 1.0);
    const auto psi = resolvent_coeffs(c, e, z);
    const auto chi = resolvent_derivative_coeffs(c, e, z);
    double prev_err = 0.0;
    for (double h : {1e-6, 1e-7}) {
        const auto psih = resolvent_coeffs(c, e, z + Complex(h, 0.0));
        double err = 0.0;
        for (int n = 0; n <= 10; ++n)
            err = std::max(err, std::abs((psih[n] - psi[n]) / h - chi[n]));
        if (prev_err > 0.0) {
            // First-order convergence: the mismatch shrinks ~10x.
            EXPECT_GT(prev_err / err, 5.0);
            EXPECT_LT(prev_err / err, 20.0);
        }
        prev_err = err;
    }
}

TEST(Neumann, GeometricSeriesConverges) {
    IndexSet idx(IndexKind::Naturals, 4);
    auto c = delta(idx, 2);
    EigenvalueMap e{"t", [](int n) { return Complex(n, 0.0); }};  // a = 2
    const Complex z(5.0, 0.0);
    const auto s60 = neumann_partial_sum(c, e, z, 60);
    // limit 1/(a - z) = -1/3
    EXPECT_NEAR(s60[2].real(), -1.0 / 3.0, 1e-12);
}

TEST(Neumann, MatchesResolventAtTwiceRadius) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    IndexSet idx(IndexKind::Integers, 8);
    CoefficientSequence c(idx);
    for (int n = -8; n <= 8; ++n) c.set(n, {g(rng), g(rng)});
    EigenvalueMap e{"t", [](int n) { return Complex(0.0, n); }};
    const Complex z(0.0, 16.0);  // |z| = 2 max|e|
    const auto direct = resolvent_coeffs(c, e, z);
    const auto part = neumann_partial_sum(c, e, z, 60);
    for (int n = -8; n <= 8; ++n)
        EXPECT_LT(std::abs(direct[n] - part[n]), 1e-10);
}

TEST(Neumann, ErrorHalvesPerTermAtRatioHalf) {
    IndexSet idx(IndexKind::Naturals, 2);
    auto c = delta(idx, 1);
    EigenvalueMap e{"t", [](int) { return Complex(1.0, 0.0); }};
    const Complex z(2.0, 0.0);  // ratio 1/2
    const auto exact = resolvent_coeffs(c, e, z);
    double prev = 0.0;
    for (int terms = 10; terms <= 13; ++terms) {
        const auto part = neumann_partial_sum(c, e, z, terms);
        const double err = std::abs(part[1] - exact[1]);
        if (prev > 0.0) EXPECT_NEAR(prev / err, 2.0, 1e-6);
        prev = err;
    }
}

TEST(Neumann, DivergesInsideRadius) {
    IndexSet idx(IndexKind::Naturals, 2);
    auto c = delta(idx, 1);
    EigenvalueMap e{"t", [](int) { return Complex(4.0, 0.0); }};
    const Complex z(2.0, 0.0);  // ratio 2 > 1
    const auto s20 = neumann_partial_sum(c, e, z, 20);
    const auto s40 = neumann_partial_sum(c, e, z, 40);
    EXPECT_GT(std::abs(s40[1]), 1e3 * std::abs(s20[1]));
}

TEST(Neumann, ZeroZIsAnError) {
    IndexSet idx(IndexKind::Naturals, 2);
    auto c = delta(idx, 0);
    EXPECT_THROW(neumann_partial_sum(c, linear_eig(), Complex(0.0, 0.0), 5),
                 ConfigError);
}

TEST(IndexSet, OffsetsAndEdges) {
    IndexSet z(IndexKind::Integers, 5);
    EXPECT_EQ(z.size(), 11u);
    EXPECT_EQ(z.offset(-5), 0u);
    EXPECT_EQ(z.offset(5), 10u);
    EXPECT_TRUE(z.near_edge(4));
    EXPECT_TRUE(z.near_edge(-3));
    EXPECT_FALSE(z.near_edge(2));
    IndexSet n(IndexKind::Naturals, 5);
    EXPECT_EQ(n.size(), 6u);
    EXPECT_FALSE(n.contains(-1));
}

TEST(CoefficientSequence, RejectsNonFinite) {
    CoefficientSequence c(IndexSet(IndexKind::Naturals, 2));
    EXPECT_THROW(c.set(0, Complex(std::nan(""), 0.0)), NumericError);
}
