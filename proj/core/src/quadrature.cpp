#include "specdiag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace specdiag {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, accumulating the
// first row of the eigenvector matrix in z. d: diagonal (in/out, becomes
// eigenvalues), e: off-diagonal e[0..n-2].
void tridiag_ql_first_row(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.resize(n, 0.0);  // sentinel
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw QuadratureError(
                        "gauss_rule: tridiagonal eigensolver failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;

                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

GaussRuleData golub_welsch(const WeightSpec& w, int m) {
    const RecurrenceCoefficients rc = recurrence_coefficients(w, m);
    std::vector<double> d(rc.a.begin(), rc.a.begin() + m);
    std::vector<double> e(m > 1 ? m - 1 : 0);
    for (int k = 1; k < m; ++k) e[k - 1] = std::sqrt(rc.b[k]);
    std::vector<double> z(m, 0.0);
    z[0] = 1.0;

    tridiag_ql_first_row(d, e, z);

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return d[i] < d[j]; });

    const double log_mu0 = std::log(rc.b[0]);
    GaussRuleData out;
    out.rule.nodes.resize(m);
    out.rule.weights.resize(m);
    out.log_weights.resize(m);
    for (int i = 0; i < m; ++i) {
        const int j = order[i];
        out.rule.nodes[i] = d[j];
        out.log_weights[i] = log_mu0 + 2.0 * std::log(std::abs(z[j]));
        out.rule.weights[i] = rc.b[0] * z[j] * z[j];
    }
    out.rule.exactness_degree = 2 * m - 1;
    return out;
}

}  // namespace

RecurrenceCoefficients recurrence_coefficients(const WeightSpec& w, int m) {
    if (m < 1) throw ConfigError("recurrence_coefficients: m must be >= 1");
    RecurrenceCoefficients rc;
    rc.a.resize(m, 0.0);
    rc.b.resize(m, 0.0);
    switch (w.kind) {
        case WeightKind::JacobiBeta: {
            const double al = w.alpha, be = w.beta, s = al + be;
            rc.b[0] = w.total_mass();
            rc.a[0] = (be - al) / (s + 2.0);
            for (int k = 1; k < m; ++k) {
                const double t = 2.0 * k + s;
                rc.a[k] = (be * be - al * al) / (t * (t + 2.0));
                if (k == 1)
                    rc.b[k] = 4.0 * (al + 1.0) * (be + 1.0) /
                              ((s + 2.0) * (s + 2.0) * (s + 3.0));
                else
                    rc.b[k] = 4.0 * k * (k + al) * (k + be) * (k + s) /
                              (t * t * (t + 1.0) * (t - 1.0));
            }
            break;
        }
        case WeightKind::HermiteGaussian: {
            rc.b[0] = std::sqrt(M_PI);
            for (int k = 1; k < m; ++k) rc.b[k] = 0.5 * k;
            break;
        }
        case WeightKind::LaguerreGamma: {
            rc.b[0] = w.total_mass();
            for (int k = 0; k < m; ++k) rc.a[k] = 2.0 * k + w.alpha + 1.0;
            for (int k = 1; k < m; ++k) rc.b[k] = k * (k + w.alpha);
            break;
        }
        case WeightKind::Lebesgue: {
            if (!w.domain().finite())
                throw ConfigError(
                    "recurrence_coefficients: Lebesgue weight needs a finite "
                    "interval");
            // Legendre on [-1,1], affine-mapped.
            const double mid = 0.5 * (w.domain().lo + w.domain().hi);
            const double half = 0.5 * w.domain().length();
            rc.b[0] = w.domain().length();
            for (int k = 0; k < m; ++k) rc.a[k] = mid;
            for (int k = 1; k < m; ++k) {
                const double kk = static_cast<double>(k);
                rc.b[k] = half * half * kk * kk /
                          ((2.0 * kk - 1.0) * (2.0 * kk + 1.0));
            }
            break;
        }
        case WeightKind::TorusUniform:
            throw ConfigError(
                "recurrence_coefficients: the torus rule is equispaced, not "
                "Gaussian");
    }
    return rc;
}

GaussRuleData gauss_rule_extended(const WeightSpec& w, int m) {
    if (m < 1) throw ConfigError("gauss_rule: m must be >= 1");
    if (w.kind == WeightKind::TorusUniform) {
        GaussRuleData out;
        out.rule.nodes.resize(m);
        out.rule.weights.assign(m, 1.0 / m);
        out.log_weights.assign(m, -std::log(static_cast<double>(m)));
        for (int j = 0; j < m; ++j) out.rule.nodes[j] = 2.0 * M_PI * j / m;
        out.rule.exactness_degree = m - 1;  // trig degree, up to aliasing
        return out;
    }
    return golub_welsch(w, m);
}

QuadratureRule gauss_rule(const WeightSpec& w, int m) {
    return gauss_rule_extended(w, m).rule;
}

QuadratureRule composite_rule_breakpoints(std::span<const double> breakpoints,
                                          int order) {
    if (order < 1) throw ConfigError("composite_rule: order must be >= 1");
    if (breakpoints.size() < 2)
        throw ConfigError("composite_rule: need at least one panel");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i] > breakpoints[i - 1]) ||
            !std::isfinite(breakpoints[i - 1]) || !std::isfinite(breakpoints[i]))
            throw ConfigError("composite_rule: breakpoints must be finite and "
                              "strictly increasing");

    const QuadratureRule gl =
        gauss_rule(WeightSpec::lebesgue({-1.0, 1.0}), order);
    QuadratureRule out;
    out.exactness_degree = 2 * order - 1;
    const std::size_t panels = breakpoints.size() - 1;
    out.nodes.reserve(panels * order);
    out.weights.reserve(panels * order);
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = breakpoints[p], hi = breakpoints[p + 1];
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < order; ++i) {
            out.nodes.push_back(mid + half * gl.nodes[i]);
            out.weights.push_back(half * gl.weights[i]);
        }
    }
    return out;
}

QuadratureRule composite_rule(Interval domain, int panels, int order) {
    if (!domain.finite() || !(domain.hi > domain.lo))
        throw ConfigError("composite_rule: domain must be a finite interval");
    if (panels < 1) throw ConfigError("composite_rule: panels must be >= 1");
    std::vector<double> bp(panels + 1);
    for (int p = 0; p <= panels; ++p)
        bp[p] = domain.lo + domain.length() * p / panels;
    bp.back() = domain.hi;
    return composite_rule_breakpoints(bp, order);
}

std::vector<double> graded_breakpoints(double lo, double hi, int uniform,
                                       int graded_lo, int graded_hi,
                                       double ratio) {
    if (!(hi > lo)) throw ConfigError("graded_breakpoints: empty interval");
    if (uniform < 1) throw ConfigError("graded_breakpoints: uniform panels >= 1");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw ConfigError("graded_breakpoints: ratio must be in (0,1)");
    const double h = (hi - lo) / uniform;
    std::vector<double> bp;
    bp.push_back(lo);
    // Geometric subdivision of the first panel toward lo.
    for (int k = graded_lo; k >= 1; --k) bp.push_back(lo + h * std::pow(ratio, k));
    for (int p = 1; p < uniform; ++p) bp.push_back(lo + h * p);
    // Geometric subdivision of the last panel toward hi.
    for (int k = 1; k <= graded_hi; ++k) bp.push_back(hi - h * std::pow(ratio, k));
    bp.push_back(hi);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

}  // namespace specdiag
