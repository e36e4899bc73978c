#include "specdiag/operator_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace specdiag {

namespace {

// Fornberg's algorithm: weights of derivatives 0..m at z on the given nodes.
// Result is indexed [derivative][node].
std::vector<std::vector<double>> fornberg(double z, std::span<const double> x,
                                          int m) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<std::vector<double>> out(m + 1, std::vector<double>(n));
    for (int d = 0; d <= m; ++d)
        for (int j = 0; j < n; ++j) out[d][j] = c[j][d];
    return out;
}

int max_derivative(const BasisFamily& b) {
    switch (b.kind()) {
        case FamilyKind::Torus:
            return static_cast<int>(b.poly().size()) - 1;
        case FamilyKind::Jacobi:
        case FamilyKind::Hermite:
        case FamilyKind::Laguerre:
            return 2;
        case FamilyKind::Custom:
            throw ConfigError(
                "oracle: only the four concrete families have an operator");
    }
    return 0;
}

double default_spacing(const BasisFamily& b) {
    switch (b.kind()) {
        case FamilyKind::Torus: return 2.0 * M_PI / 1024.0;
        case FamilyKind::Jacobi: return 2.0e-3;
        default: return 1.0e-2;
    }
}

// Derivatives f^(0..d) at t from one stencil application.
std::vector<Complex> derivatives_at(const SmoothFunction& f,
                                    const FiniteDifferenceStencil& st,
                                    double t, int d) {
    const int hw = st.half_width();
    std::vector<Complex> fv(2 * hw + 1);
    for (int j = -hw; j <= hw; ++j) fv[j + hw] = f.eval(t + j * st.spacing);
    std::vector<Complex> out(d + 1, Complex(0.0, 0.0));
    double hp = 1.0;
    for (int k = 0; k <= d; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < static_cast<int>(fv.size()); ++j)
            acc += st.coefficients[k][j] * fv[j];
        out[k] = acc / hp;
        hp *= st.spacing;
    }
    return out;
}

}  // namespace

FiniteDifferenceStencil FiniteDifferenceStencil::make(int max_derivative,
                                                      int order,
                                                      double spacing) {
    if (max_derivative < 0 || order < 2 || order % 2 != 0)
        throw ConfigError("stencil: need max_derivative >= 0 and even order");
    if (!(spacing > 0.0)) throw ConfigError("stencil: spacing must be > 0");
    const int npoints = order + 2 * ((max_derivative + 1) / 2) - 1;
    const int hw = (npoints - 1) / 2;
    std::vector<double> offsets(2 * hw + 1);
    for (int j = -hw; j <= hw; ++j) offsets[j + hw] = static_cast<double>(j);
    FiniteDifferenceStencil st;
    st.order = order;
    st.spacing = spacing;
    st.coefficients = fornberg(0.0, offsets, max_derivative);
    return st;
}

Complex apply_operator_at(const BasisFamily& b, const SmoothFunction& f,
                          double t, const StencilOptions& opts) {
    const int d = max_derivative(b);
    double h = opts.spacing > 0.0 ? opts.spacing : default_spacing(b);

    switch (b.kind()) {
        case FamilyKind::Torus: {
            const FiniteDifferenceStencil st =
                FiniteDifferenceStencil::make(d, opts.order, h);
            const std::vector<Complex> der = derivatives_at(f, st, t, d);
            Complex acc(0.0, 0.0);
            for (int k = 0; k <= d; ++k) acc += b.poly()[k] * der[k];
            return acc;
        }
        case FamilyKind::Jacobi: {
            // Shrink the spacing toward the endpoints; the stencil must stay
            // inside [-1, 1].
            const int hw_probe = (opts.order + 1) / 2 + 1;
            if (opts.spacing <= 0.0)
                h = std::min(h, (1.0 - std::abs(t)) / (hw_probe + 1.0));
            if (h < 1e-9)
                throw DomainError(
                    "oracle: grid point violates the stencil margin near the "
                    "Jacobi endpoints");
            const FiniteDifferenceStencil st =
                FiniteDifferenceStencil::make(2, opts.order, h);
            if (std::abs(t) + st.half_width() * h > 1.0)
                throw DomainError("oracle: stencil margin violation in [-1, 1]");
            const std::vector<Complex> der = derivatives_at(f, st, t, 2);
            const double al = b.alpha(), be = b.beta();
            return (1.0 - t * t) * der[2] +
                   (be - al - (al + be + 2.0) * t) * der[1];
        }
        case FamilyKind::Hermite: {
            const FiniteDifferenceStencil st =
                FiniteDifferenceStencil::make(2, opts.order, h);
            const std::vector<Complex> der = derivatives_at(f, st, t, 2);
            return der[2] - t * t * der[0];
        }
        case FamilyKind::Laguerre: {
            // Interior points only: the operator has a genuine 1/t
            // coefficient.
            if (opts.spacing <= 0.0) h = std::min(h, 0.1 * t);
            if (!(t > 0.0) || t < 10.0 * h)
                throw DomainError(
                    "oracle: Laguerre grid points must satisfy t >= 10 h");
            const FiniteDifferenceStencil st =
                FiniteDifferenceStencil::make(2, opts.order, h);
            const std::vector<Complex> der = derivatives_at(f, st, t, 2);
            const double al = b.alpha();
            return t * der[2] + der[1] +
                   (-0.25 * t - 0.25 * al * al / t + 0.5 * (al + 1.0)) * der[0];
        }
        case FamilyKind::Custom:
            throw ConfigError(
                "oracle: only the four concrete families have an operator");
    }
    return Complex(0.0, 0.0);
}

GridFunction apply_operator_grid(const BasisFamily& b, const SmoothFunction& f,
                                 std::span<const double> grid,
                                 const StencilOptions& opts) {
    GridFunction g;
    g.family = b.kind();
    g.domain = b.domain();
    g.grid.assign(grid.begin(), grid.end());
    g.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        g.values[i] = apply_operator_at(b, f, grid[i], opts);
    return g;
}

double crosscheck_eigenrelation(const BasisFamily& b, int n,
                                std::span<const double> grid,
                                const StencilOptions& opts) {
    const Complex eig = eig_map(b)(n);
    SmoothFunction bn;
    bn.domain = b.domain();
    bn.eval = [&b, n](double t) { return eval_basis(b, n, t); };

    double num = 0.0, den = 0.0;
    for (double t : grid) {
        const Complex tv = apply_operator_at(b, bn, t, opts);
        const Complex bv = eval_basis(b, n, t);
        num = std::max(num, std::abs(tv - eig * bv));
        den = std::max(den, std::abs(bv));
    }
    if (den == 0.0)
        throw NumericError("crosscheck_eigenrelation: basis vanishes on grid");
    return num / den;
}

std::vector<Complex> torus_spectral_apply(const std::vector<Complex>& poly,
                                          std::span<const Complex> samples) {
    const int m = static_cast<int>(samples.size());
    if (m < 1) throw ConfigError("torus_spectral_apply: empty sample set");
    const int kmax = (m - 1) / 2;
    // Forward coefficients of the interpolating trigonometric polynomial.
    std::vector<Complex> coeff(2 * kmax + 1);
    for (int k = -kmax; k <= kmax; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < m; ++j)
            acc += samples[j] * std::polar(1.0, -k * (2.0 * M_PI * j / m));
        coeff[k + kmax] = acc / static_cast<double>(m);
    }
    // Multiply by P(ik) and resum.
    std::vector<Complex> out(m, Complex(0.0, 0.0));
    for (int k = -kmax; k <= kmax; ++k) {
        Complex pik(0.0, 0.0);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            pik = pik * Complex(0.0, k) + *it;
        const Complex ck = coeff[k + kmax] * pik;
        for (int j = 0; j < m; ++j)
            out[j] += ck * std::polar(1.0, k * (2.0 * M_PI * j / m));
    }
    return out;
}

}  // namespace specdiag
