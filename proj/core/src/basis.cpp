#include "specdiag/basis.hpp"

#include <cmath>

namespace specdiag {

BasisFamily BasisFamily::torus(std::vector<Complex> poly) {
    if (poly.empty()) throw ConfigError("torus family: P must have coefficients");
    BasisFamily b;
    b.kind_ = FamilyKind::Torus;
    b.name_ = "torus";
    b.poly_ = std::move(poly);
    return b;
}

BasisFamily BasisFamily::jacobi(double alpha, double beta) {
    if (alpha <= -1.0 || beta <= -1.0)
        throw ParameterError("jacobi family: alpha, beta must be > -1");
    BasisFamily b;
    b.kind_ = FamilyKind::Jacobi;
    b.name_ = "jacobi";
    b.alpha_ = alpha;
    b.beta_ = beta;
    return b;
}

BasisFamily BasisFamily::hermite() {
    BasisFamily b;
    b.kind_ = FamilyKind::Hermite;
    b.name_ = "hermite";
    return b;
}

BasisFamily BasisFamily::laguerre(double alpha) {
    if (alpha <= -1.0)
        throw ParameterError("laguerre family: alpha must be > -1");
    BasisFamily b;
    b.kind_ = FamilyKind::Laguerre;
    b.name_ = "laguerre";
    b.alpha_ = alpha;
    return b;
}

BasisFamily BasisFamily::custom(CustomBasis handles) {
    if (!handles.eval || !handles.eigenvalue)
        throw ConfigError("custom family: evaluator and eigenvalue map required");
    BasisFamily b;
    b.kind_ = FamilyKind::Custom;
    b.name_ = handles.name;
    b.custom_ = std::move(handles);
    return b;
}

Interval BasisFamily::domain() const {
    switch (kind_) {
        case FamilyKind::Torus: return {0.0, 2.0 * M_PI};
        case FamilyKind::Jacobi: return {-1.0, 1.0};
        case FamilyKind::Hermite: return Interval::real_line();
        case FamilyKind::Laguerre: return Interval::half_line();
        case FamilyKind::Custom: return custom_.measure.domain();
    }
    return {0.0, 0.0};
}

WeightSpec BasisFamily::measure() const {
    switch (kind_) {
        case FamilyKind::Torus: return WeightSpec::torus();
        case FamilyKind::Jacobi: return WeightSpec::jacobi(alpha_, beta_);
        case FamilyKind::Hermite:
            return WeightSpec::lebesgue(Interval::real_line());
        case FamilyKind::Laguerre:
            return WeightSpec::lebesgue(Interval::half_line());
        case FamilyKind::Custom: return custom_.measure;
    }
    return WeightSpec::lebesgue({0.0, 0.0});
}

double jacobi_normalization(int n, double alpha, double beta) {
    if (n < 0) throw ConfigError("jacobi_normalization: n must be >= 0");
    const double s = alpha + beta;
    // (2n+s+1) Gamma(n+s+1) = Gamma(n+s+2) (2n+s+1)/(n+s+1); the ratio is 1
    // at n = 0, removing the Gamma pole at s = -1.
    const double ratio =
        n == 0 ? 1.0 : (2.0 * n + s + 1.0) / (n + s + 1.0);
    const double log_sq = std::lgamma(n + s + 2.0) + std::lgamma(n + 1.0) -
                          (s + 1.0) * std::log(2.0) -
                          std::lgamma(n + alpha + 1.0) -
                          std::lgamma(n + beta + 1.0);
    return std::sqrt(ratio * std::exp(log_sq));
}

double jacobi_sup_bound(int n, double alpha, double beta) {
    if (n < 0) throw ConfigError("jacobi_sup_bound: n must be >= 0");
    if (alpha <= -1.0 || beta <= -1.0)
        throw ParameterError("jacobi_sup_bound: alpha, beta must be > -1");
    const double q = std::max(alpha, beta);
    if (q < -0.5)
        throw ParameterError("jacobi_sup_bound: requires max(alpha, beta) >= -1/2");
    // binom(n + q, n) via log-Gamma.
    return std::exp(std::lgamma(n + q + 1.0) - std::lgamma(q + 1.0) -
                    std::lgamma(n + 1.0));
}

double jacobi_poly_unnormalized(int n, double alpha, double beta, double t) {
    if (n < 0) throw ConfigError("jacobi polynomial: n must be >= 0");
    if (n == 0) return 1.0;
    const double s = alpha + beta;
    double pm1 = 1.0;
    double p = 0.5 * (s + 2.0) * t + 0.5 * (alpha - beta);
    for (int k = 2; k <= n; ++k) {
        const double c = 2.0 * k + s;
        const double a1 = 2.0 * k * (k + s) * (c - 2.0);
        const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (c - 1.0) * c * (c - 2.0);
        const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
        const double next = ((a2 + a3 * t) * p - a4 * pm1) / a1;
        pm1 = p;
        p = next;
    }
    return p;
}

void jacobi_normalized_all(int N, double alpha, double beta, double t,
                           std::span<double> out) {
    const RecurrenceCoefficients rc =
        recurrence_coefficients(WeightSpec::jacobi(alpha, beta), N + 2);
    double pm1 = 0.0;
    double p = 1.0 / std::sqrt(rc.b[0]);
    out[0] = p;
    for (int k = 0; k < N; ++k) {
        const double next =
            ((t - rc.a[k]) * p - (k > 0 ? std::sqrt(rc.b[k]) : 0.0) * pm1) /
            std::sqrt(rc.b[k + 1]);
        pm1 = p;
        p = next;
        out[k + 1] = p;
    }
}

void hermite_function_all(int N, double t, std::span<double> out) {
    // h_{n+1} = t sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1},
    // seeded by h_0 = pi^{-1/4} exp(-t^2/2).
    double pm1 = 0.0;
    double p = std::pow(M_PI, -0.25) * std::exp(-0.5 * t * t);
    out[0] = p;
    for (int n = 0; n < N; ++n) {
        const double next = t * std::sqrt(2.0 / (n + 1.0)) * p -
                            std::sqrt(n / (n + 1.0)) * pm1;
        pm1 = p;
        p = next;
        out[n + 1] = p;
    }
}

void laguerre_function_all(int N, double alpha, double t,
                           std::span<double> out) {
    if (t < 0.0) throw DomainError("laguerre function: t must be >= 0");
    if (t == 0.0 && alpha < 0.0)
        throw DomainError("laguerre function: t = 0 is singular for alpha < 0");
    // l_0 = exp(-t/2 + (alpha/2) log t - lgamma(alpha+1)/2).
    double p;
    if (t == 0.0) {
        p = alpha == 0.0 ? std::exp(-0.5 * std::lgamma(alpha + 1.0)) : 0.0;
    } else {
        p = std::exp(-0.5 * t + 0.5 * alpha * std::log(t) -
                     0.5 * std::lgamma(alpha + 1.0));
    }
    double pm1 = 0.0;
    out[0] = p;
    for (int n = 0; n < N; ++n) {
        const double denom = std::sqrt((n + 1.0) * (n + alpha + 1.0));
        const double next =
            ((2.0 * n + alpha + 1.0 - t) * p -
             std::sqrt(n * (n + alpha)) * pm1) /
            denom;
        pm1 = p;
        p = next;
        out[n + 1] = p;
    }
}

void laguerre_polypart_all(int N, double alpha, double t,
                           std::span<double> out) {
    double p = std::exp(-0.5 * std::lgamma(alpha + 1.0));
    double pm1 = 0.0;
    out[0] = p;
    for (int n = 0; n < N; ++n) {
        const double denom = std::sqrt((n + 1.0) * (n + alpha + 1.0));
        const double next =
            ((2.0 * n + alpha + 1.0 - t) * p -
             std::sqrt(n * (n + alpha)) * pm1) /
            denom;
        pm1 = p;
        p = next;
        out[n + 1] = p;
    }
}

namespace {

Complex torus_poly_eval(const std::vector<Complex>& poly, Complex x) {
    Complex acc(0.0, 0.0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void check_domain(const BasisFamily& b, double t) {
    switch (b.kind()) {
        case FamilyKind::Torus:
            if (!std::isfinite(t)) throw DomainError("torus basis: t must be finite");
            break;
        case FamilyKind::Jacobi:
            if (!(t >= -1.0 && t <= 1.0))
                throw DomainError("jacobi basis: t must lie in [-1, 1]");
            break;
        case FamilyKind::Hermite:
            if (!std::isfinite(t)) throw DomainError("hermite basis: t must be finite");
            break;
        case FamilyKind::Laguerre:
            if (!(t >= 0.0) || !std::isfinite(t))
                throw DomainError("laguerre basis: t must lie in [0, inf)");
            if (t == 0.0 && b.alpha() < 0.0)
                throw DomainError("laguerre basis: t = 0 is singular for alpha < 0");
            break;
        case FamilyKind::Custom:
            break;
    }
}

}  // namespace

Complex eval_basis(const BasisFamily& b, int n, double t) {
    check_domain(b, t);
    switch (b.kind()) {
        case FamilyKind::Torus:
            return std::polar(1.0, n * t);
        case FamilyKind::Jacobi: {
            if (n < 0) throw ConfigError("jacobi basis: n must be >= 0");
            std::vector<double> vals(n + 1);
            jacobi_normalized_all(n, b.alpha(), b.beta(), t, vals);
            return Complex(vals[n], 0.0);
        }
        case FamilyKind::Hermite: {
            if (n < 0) throw ConfigError("hermite basis: n must be >= 0");
            std::vector<double> vals(n + 1);
            hermite_function_all(n, t, vals);
            return Complex(vals[n], 0.0);
        }
        case FamilyKind::Laguerre: {
            if (n < 0) throw ConfigError("laguerre basis: n must be >= 0");
            std::vector<double> vals(n + 1);
            laguerre_function_all(n, b.alpha(), t, vals);
            return Complex(vals[n], 0.0);
        }
        case FamilyKind::Custom:
            return b.custom_handles().eval(n, t);
    }
    return Complex(0.0, 0.0);
}

std::vector<Complex> eval_basis_all(const BasisFamily& b, int N, double t) {
    check_domain(b, t);
    const IndexSet idx(b.index_kind(), N);
    std::vector<Complex> out(idx.size());
    switch (b.kind()) {
        case FamilyKind::Torus:
            for (int n = -N; n <= N; ++n)
                out[idx.offset(n)] = std::polar(1.0, n * t);
            break;
        case FamilyKind::Jacobi: {
            std::vector<double> vals(N + 1);
            jacobi_normalized_all(N, b.alpha(), b.beta(), t, vals);
            for (int n = 0; n <= N; ++n) out[n] = Complex(vals[n], 0.0);
            break;
        }
        case FamilyKind::Hermite: {
            std::vector<double> vals(N + 1);
            hermite_function_all(N, t, vals);
            for (int n = 0; n <= N; ++n) out[n] = Complex(vals[n], 0.0);
            break;
        }
        case FamilyKind::Laguerre: {
            std::vector<double> vals(N + 1);
            laguerre_function_all(N, b.alpha(), t, vals);
            for (int n = 0; n <= N; ++n) out[n] = Complex(vals[n], 0.0);
            break;
        }
        case FamilyKind::Custom:
            for (int n = idx.min_index(); n <= idx.max_index(); ++n)
                out[idx.offset(n)] = b.custom_handles().eval(n, t);
            break;
    }
    return out;
}

EigenvalueMap eig_map(const BasisFamily& b) {
    switch (b.kind()) {
        case FamilyKind::Torus: {
            auto poly = b.poly();
            return {b.name(), [poly](int n) {
                        return torus_poly_eval(poly, Complex(0.0, n));
                    }};
        }
        case FamilyKind::Jacobi: {
            const double s = b.alpha() + b.beta();
            return {b.name(), [s](int n) {
                        return Complex(-static_cast<double>(n) * (n + s + 1.0), 0.0);
                    }};
        }
        case FamilyKind::Hermite:
            return {b.name(),
                    [](int n) { return Complex(-(2.0 * n + 1.0), 0.0); }};
        case FamilyKind::Laguerre:
            return {b.name(),
                    [](int n) { return Complex(-static_cast<double>(n), 0.0); }};
        case FamilyKind::Custom:
            return {b.name(), b.custom_handles().eigenvalue};
    }
    return {b.name(), [](int) { return Complex(0.0, 0.0); }};
}

}  // namespace specdiag
