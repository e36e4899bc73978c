#include "specdiag/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specdiag {

namespace {

constexpr double kCoeffRelTol = 1e-10;  // refinement trigger between m and 2m
constexpr int kMaxRefinements = 6;

CoefficientSequence analyze_with_nodes(const SmoothFunction& f,
                                       const BasisFamily& b, int N, int m) {
    const IndexSet idx(b.index_kind(), N);
    CoefficientSequence c(idx);
    std::vector<Complex> acc(idx.size(), Complex(0.0, 0.0));

    switch (b.kind()) {
        case FamilyKind::Torus: {
            for (int j = 0; j < m; ++j) {
                const double t = 2.0 * M_PI * j / m;
                const Complex fj = f.eval(t) / static_cast<double>(m);
                for (int n = -N; n <= N; ++n)
                    acc[idx.offset(n)] += fj * std::polar(1.0, -n * t);
            }
            break;
        }
        case FamilyKind::Jacobi: {
            const QuadratureRule rule =
                gauss_rule(WeightSpec::jacobi(b.alpha(), b.beta()), m);
            std::vector<double> vals(N + 1);
            for (int i = 0; i < m; ++i) {
                const double x = rule.nodes[i];
                const Complex fx = f.eval(x) * rule.weights[i];
                jacobi_normalized_all(N, b.alpha(), b.beta(), x, vals);
                for (int n = 0; n <= N; ++n) acc[n] += fx * vals[n];
            }
            break;
        }
        case FamilyKind::Hermite: {
            const GaussRuleData data =
                gauss_rule_extended(WeightSpec::hermite(), m);
            std::vector<double> vals(N + 1);
            for (int i = 0; i < m; ++i) {
                const double x = data.rule.nodes[i];
                // Gaussian removed from the weight in log space.
                const double w = std::exp(data.log_weights[i] + x * x);
                const Complex fx = f.eval(x) * w;
                hermite_function_all(N, x, vals);
                for (int n = 0; n <= N; ++n) acc[n] += fx * vals[n];
            }
            break;
        }
        case FamilyKind::Laguerre: {
            const double al = b.alpha();
            const GaussRuleData data =
                gauss_rule_extended(WeightSpec::laguerre(al), m);
            std::vector<double> vals(N + 1);
            for (int i = 0; i < m; ++i) {
                const double x = data.rule.nodes[i];
                // Modified weight; the t^{alpha/2} factor of the input is
                // fused here when the evaluator holds the smooth part.
                const double lg = std::log(x);
                const double w =
                    f.laguerre_smooth_part
                        ? std::exp(data.log_weights[i] + x - 0.5 * al * lg)
                        : std::exp(data.log_weights[i] + x - al * lg);
                const Complex fx = f.eval(x) * w;
                laguerre_function_all(N, al, x, vals);
                for (int n = 0; n <= N; ++n) acc[n] += fx * vals[n];
            }
            break;
        }
        case FamilyKind::Custom: {
            const QuadratureRule& rule = b.custom_handles().analysis_rule;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double x = rule.nodes[i];
                const Complex fx = f.eval(x) * rule.weights[i];
                const std::vector<Complex> vals = eval_basis_all(b, N, x);
                for (std::size_t k = 0; k < vals.size(); ++k)
                    acc[k] += fx * std::conj(vals[k]);
            }
            break;
        }
    }

    for (std::size_t k = 0; k < acc.size(); ++k) c.set(idx.index_at(k), acc[k]);
    return c;
}

double max_difference(const CoefficientSequence& a,
                      const CoefficientSequence& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.values().size(); ++k)
        d = std::max(d, std::abs(a.values()[k] - b.values()[k]));
    return d;
}

}  // namespace

Complex eval_function(const SmoothFunction& f, const BasisFamily& b, double t) {
    if (!f.laguerre_smooth_part) return f.eval(t);
    if (b.kind() != FamilyKind::Laguerre)
        throw ConfigError("eval_function: smooth-part input outside the "
                          "Laguerre family");
    if (t < 0.0) throw DomainError("eval_function: t must be >= 0");
    if (t == 0.0) {
        if (b.alpha() > 0.0) return Complex(0.0, 0.0);
        if (b.alpha() == 0.0) return f.eval(t);
        throw DomainError("eval_function: t = 0 is singular for alpha < 0");
    }
    return f.eval(t) * std::exp(0.5 * b.alpha() * std::log(t));
}

CoefficientSequence analyze(const SmoothFunction& f, const BasisFamily& b,
                            int N) {
    if (N < 0) throw ConfigError("analyze: N must be >= 0");
    if (f.laguerre_smooth_part && b.kind() != FamilyKind::Laguerre)
        throw ConfigError("analyze: smooth-part input outside the Laguerre "
                          "family");
    if (b.kind() == FamilyKind::Jacobi &&
        (b.alpha() < -0.5 || b.beta() < -0.5))
        throw ParameterError(
            "analyze: the Jacobi transform isomorphism requires "
            "alpha, beta >= -1/2");
    if (b.domain().finite() && f.domain.finite() &&
        (f.domain.lo > b.domain().lo + 1e-12 ||
         f.domain.hi < b.domain().hi - 1e-12))
        throw ConfigError("analyze: function domain does not cover the "
                          "family domain");

    if (b.kind() == FamilyKind::Custom)
        return analyze_with_nodes(f, b, N, 0);  // fixed user-provided rule

    int m = b.kind() == FamilyKind::Torus ? 2 * N + 17 : N + 16;
    CoefficientSequence coarse = analyze_with_nodes(f, b, N, m);
    for (int r = 0; r < kMaxRefinements; ++r) {
        CoefficientSequence fine = analyze_with_nodes(f, b, N, 2 * m);
        const double delta = max_difference(coarse, fine);
        const double scale = std::max(fine.max_abs(),
                                      std::numeric_limits<double>::min());
        if (delta <= kCoeffRelTol * scale) return fine;
        coarse = std::move(fine);
        m *= 2;
    }
    throw QuadratureError(
        "analyze: coefficients did not stabilize after " +
        std::to_string(kMaxRefinements) + " quadrature refinements");
}

Complex synthesize_at(const CoefficientSequence& c, const BasisFamily& b,
                      double t) {
    const IndexSet& idx = c.index_set();
    int max_active = 0;
    for (int n = idx.min_index(); n <= idx.max_index(); ++n)
        if (c[n] != Complex(0.0, 0.0)) max_active = std::max(max_active, std::abs(n));
    const std::vector<Complex> vals = eval_basis_all(b, max_active, t);
    const IndexSet active(b.index_kind(), max_active);
    Complex acc(0.0, 0.0);
    for (int n = active.min_index(); n <= active.max_index(); ++n) {
        const Complex cn = c[n];
        if (cn != Complex(0.0, 0.0)) acc += cn * vals[active.offset(n)];
    }
    return acc;
}

GridFunction synthesize(const CoefficientSequence& c, const BasisFamily& b,
                        std::span<const double> grid) {
    GridFunction g;
    g.family = b.kind();
    g.domain = b.domain();
    g.grid.assign(grid.begin(), grid.end());
    g.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        g.values[i] = synthesize_at(c, b, grid[i]);
    return g;
}

DecayReport decay_report(const CoefficientSequence& c) {
    const double cmax = c.max_abs();
    if (cmax == 0.0) throw ConfigError("decay_report: zero sequence");
    const IndexSet& idx = c.index_set();

    DecayReport rep;
    for (std::size_t k = 0; k < DecayReport::kWeights.size(); ++k) {
        double sup = 0.0;
        for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
            const double base = 1.0 + std::abs(n);
            sup = std::max(sup, std::pow(base, DecayReport::kWeights[k]) *
                                    std::abs(c[n]));
        }
        rep.weighted_sup[k] = sup;
    }

    // Fit over the largest decade of indices carrying signal.
    std::vector<std::pair<double, double>> pts;  // (|n|, log|c|)
    int max_n = 0;
    for (int n = idx.min_index(); n <= idx.max_index(); ++n)
        if (std::abs(c[n]) > 1e-13 * cmax) max_n = std::max(max_n, std::abs(n));
    const int lo = std::max(1, max_n / 10);
    for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
        const int an = std::abs(n);
        if (an < lo || an > max_n) continue;
        if (std::abs(c[n]) > 1e-13 * cmax)
            pts.emplace_back(static_cast<double>(an), std::log(std::abs(c[n])));
    }
    // Need two distinct |n| values for a slope.
    double first = pts.empty() ? 0.0 : pts.front().first;
    bool distinct = false;
    for (const auto& [x, y] : pts)
        if (x != first) distinct = true;
    if (!distinct) {
        rep.slope_applicable = false;
        rep.algebraic_exponent = std::numeric_limits<double>::quiet_NaN();
        rep.geometric_log_slope = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }

    auto fit_slope = [](const std::vector<std::pair<double, double>>& xy) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [x, y] : xy) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(xy.size());
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };

    rep.slope_applicable = true;
    rep.geometric_log_slope = fit_slope(pts);
    std::vector<std::pair<double, double>> logpts;
    logpts.reserve(pts.size());
    for (const auto& [x, y] : pts) logpts.emplace_back(std::log(1.0 + x), y);
    rep.algebraic_exponent = -fit_slope(logpts);
    return rep;
}

}  // namespace specdiag
