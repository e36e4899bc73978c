#include "specdiag/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace specdiag {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Mode {
    int index;
    double log_c;
    double arg_c;
    double log_e;
    double arg_e;
};

std::vector<Mode> active_modes(const CoefficientSequence& c,
                               const EigenvalueMap& e) {
    std::vector<Mode> modes;
    const IndexSet& idx = c.index_set();
    for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
        const Complex v = c[n];
        if (v == Complex(0.0, 0.0)) continue;
        const Complex ev = e(n);
        modes.push_back({n, std::log(std::abs(v)), std::arg(v),
                         ev == Complex(0.0, 0.0) ? -kInf
                                                 : std::log(std::abs(ev)),
                         std::arg(ev)});
    }
    return modes;
}

// log ||T^n f||_2 by Parseval over the active modes.
double parseval_iterate_log_norm(const std::vector<Mode>& modes, int n) {
    double mx = -kInf;
    for (const Mode& m : modes) {
        const double t = n * m.log_e + m.log_c;
        mx = std::max(mx, t);
    }
    if (std::isinf(mx) && mx < 0) return -kInf;
    double acc = 0.0;
    for (const Mode& m : modes) {
        const double t = n * m.log_e + m.log_c;
        if (std::isinf(t) && t < 0) continue;
        acc += std::exp(2.0 * (t - mx));
    }
    return mx + 0.5 * std::log(acc);
}

// log ||T^n f||_p for general p: synthesize the scale-factored iterate.
double quadrature_iterate_log_norm(const std::vector<Mode>& modes,
                                   const IndexSet& idx, const BasisFamily& b,
                                   double p, int n) {
    double mx = -kInf;
    for (const Mode& m : modes) mx = std::max(mx, n * m.log_e + m.log_c);
    if (std::isinf(mx) && mx < 0) return -kInf;

    CoefficientSequence scaled(idx);
    for (const Mode& m : modes) {
        const double t = n * m.log_e + m.log_c;
        if (std::isinf(t) && t < 0) continue;
        scaled.set(m.index,
                   std::polar(std::exp(t - mx), m.arg_c + n * m.arg_e));
    }
    const LogNorm ln = lp_norm(scaled, b, p);
    if (ln.is_zero()) return -kInf;
    return mx + ln.log_value;
}

double extrapolate_limit(const std::vector<double>& log_norms, int n_max) {
    if (log_norms.empty()) return 0.0;
    const double ln_n = log_norms[n_max - 1];
    if (std::isinf(ln_n) && ln_n < 0) return 0.0;
    const double log_a_n = ln_n / n_max;
    if (n_max == 1) return std::exp(log_a_n);
    const int n_half = std::max(1, n_max / 2);
    const double ln_h = log_norms[n_half - 1];
    if (std::isinf(ln_h) && ln_h < 0) return std::exp(log_a_n);
    const double log_a_h = ln_h / n_half;
    // Linear extrapolation of log a(x) in x = 1/n to x = 0.
    const double xn = 1.0 / n_max, xh = 1.0 / n_half;
    const double log_limit = log_a_n - xn * (log_a_h - log_a_n) / (xh - xn);
    return std::exp(log_limit);
}

}  // namespace

LocalSpectrum local_spectrum(const SmoothFunction& f, const BasisFamily& b,
                             int N, double threshold) {
    const CoefficientSequence c = analyze(f, b, N);
    const SupportSet supp = support(c, threshold);
    const EigenvalueMap e = eig_map(b);
    LocalSpectrum ls;
    ls.tail_flag = supp.tail_flag;
    ls.points.reserve(supp.indices.size());
    for (int n : supp.indices) ls.points.push_back(e(n));
    std::sort(ls.points.begin(), ls.points.end(), [](Complex a, Complex bb) {
        return a.real() != bb.real() ? a.real() < bb.real()
                                     : a.imag() < bb.imag();
    });
    ls.points.erase(std::unique(ls.points.begin(), ls.points.end()),
                    ls.points.end());
    return ls;
}

double radius_via_support(const SmoothFunction& f, const BasisFamily& b,
                          int N, double threshold) {
    const LocalSpectrum ls = local_spectrum(f, b, N, threshold);
    double r = 0.0;
    for (const Complex& z : ls.points) r = std::max(r, std::abs(z));
    return r;
}

IterateRecord radius_via_iterates_from_coeffs(const CoefficientSequence& c,
                                              const BasisFamily& b, double p,
                                              int n_max, double threshold) {
    if (n_max < 1) throw ConfigError("radius_via_iterates: n_max must be >= 1");
    if (b.kind() == FamilyKind::Laguerre && !laguerre_condition(b.alpha(), p))
        throw ParameterError(
            "radius_via_iterates: (alpha, p) outside the Laguerre "
            "admissibility region");

    // Same threshold that defines the local spectrum; anything below it is
    // quadrature noise whose eigenvalues must not steer the iterates.
    const SupportSet supp = support(c, threshold);
    CoefficientSequence masked(c.index_set());
    for (int n : supp.indices) masked.set(n, c[n]);

    const EigenvalueMap e = eig_map(b);
    const std::vector<Mode> modes = active_modes(masked, e);

    IterateRecord rec;
    rec.log_norms.resize(n_max);
    rec.a.resize(n_max);

    rec.log_norm_f =
        p == 2.0 ? parseval_log_norm(masked) : lp_norm(masked, b, p).log_value;

    for (int n = 1; n <= n_max; ++n) {
        const double ln =
            p == 2.0
                ? parseval_iterate_log_norm(modes, n)
                : quadrature_iterate_log_norm(modes, c.index_set(), b, p, n);
        rec.log_norms[n - 1] = ln;
        rec.a[n - 1] = (std::isinf(ln) && ln < 0) ? 0.0 : std::exp(ln / n);
    }

    if (p == 2.0) {
        rec.ratio.resize(n_max > 1 ? n_max - 1 : 0);
        for (int n = 1; n < n_max; ++n) {
            const double lo = rec.log_norms[n - 1], hi = rec.log_norms[n];
            rec.ratio[n - 1] =
                (std::isinf(lo) && lo < 0) ? 0.0 : std::exp(hi - lo);
        }
    }

    rec.limit_extrapolated = extrapolate_limit(rec.log_norms, n_max);
    const int n_half = std::max(1, n_max / 2);
    rec.convergence_indicator = std::abs(rec.a[n_max - 1] - rec.a[n_half - 1]);
    return rec;
}

IterateRecord radius_via_iterates(const SmoothFunction& f,
                                  const BasisFamily& b, double p, int n_max,
                                  int N, double threshold) {
    return radius_via_iterates_from_coeffs(analyze(f, b, N), b, p, n_max,
                                           threshold);
}

SpectralReport verify_lsrf(const SmoothFunction& f, const BasisFamily& b,
                           double p, int n_max, int N, const Tolerances& tol) {
    const CoefficientSequence c = analyze(f, b, N);
    const SupportSet supp = support(c, tol.support_threshold);
    const EigenvalueMap e = eig_map(b);

    SpectralReport rep;
    rep.family = b.name();
    rep.p = p;
    rep.tail_flag = supp.tail_flag;

    for (int n : supp.indices) rep.spectrum_points.push_back(e(n));
    std::sort(rep.spectrum_points.begin(), rep.spectrum_points.end(),
              [](Complex a, Complex bb) {
                  return a.real() != bb.real() ? a.real() < bb.real()
                                               : a.imag() < bb.imag();
              });
    rep.spectrum_points.erase(
        std::unique(rep.spectrum_points.begin(), rep.spectrum_points.end()),
        rep.spectrum_points.end());

    rep.radius_support = 0.0;
    for (const Complex& z : rep.spectrum_points)
        rep.radius_support = std::max(rep.radius_support, std::abs(z));

    rep.iterates = radius_via_iterates_from_coeffs(c, b, p, n_max,
                                                   tol.support_threshold);

    // p = 2 keys off the consecutive-norm ratio (geometric convergence for
    // finitely supported coefficients); otherwise the extrapolated limit.
    if (p == 2.0 && !rep.iterates.ratio.empty())
        rep.limit_estimate = rep.iterates.ratio.back();
    else
        rep.limit_estimate = rep.iterates.limit_extrapolated;
    rep.residual = std::abs(rep.limit_estimate - rep.radius_support);

    // Every |eig| on the support stays below the iterate roots eventually.
    // At finite n_max, a_n = R C^{1/n} can sit below R when the norm
    // constant C is < 1; allow that headroom.
    const double max_a =
        *std::max_element(rep.iterates.a.begin(), rep.iterates.a.end());
    const double liminf_margin =
        tol.liminf_tol * std::max(1.0, rep.radius_support) +
        rep.radius_support * std::expm1(2.0 / n_max);
    bool liminf_ok = true;
    for (int n : supp.indices)
        if (std::abs(e(n)) > max_a + liminf_margin) liminf_ok = false;
    rep.checks.liminf_bound = liminf_ok;

    // Normalized iterate roots (||T^n f|| / ||f||)^{1/n} never exceed the
    // support radius (weighted power-mean bound at p = 2; bounded by the
    // synthesis constant otherwise, absorbed in limsup_tol).
    bool limsup_ok = true;
    if (!(std::isinf(rep.iterates.log_norm_f) && rep.iterates.log_norm_f < 0)) {
        for (int n = 1; n <= n_max; ++n) {
            const double ln = rep.iterates.log_norms[n - 1];
            const double an_tilde =
                (std::isinf(ln) && ln < 0)
                    ? 0.0
                    : std::exp((ln - rep.iterates.log_norm_f) / n);
            // At p = 2 the normalized roots are weighted power means and
            // never exceed the support radius; for other p the synthesis
            // constant decays like exp(K/n).
            const double bound =
                p == 2.0 ? rep.radius_support * (1.0 + tol.limsup_tol) +
                               tol.limsup_tol
                         : rep.radius_support * std::exp(2.0 / n) +
                               tol.limsup_tol;
            if (an_tilde > bound) limsup_ok = false;
        }
    }
    rep.checks.limsup_bound = limsup_ok;

    const double formula_tol =
        std::isinf(p) ? std::max(tol.formula_tol, 1e-4) : tol.formula_tol;
    rep.checks.formula = rep.residual <= formula_tol;
    return rep;
}

ResolventReport verify_resolvent(const SmoothFunction& f, const BasisFamily& b,
                                 Complex z, int N,
                                 std::span<const double> grid) {
    const CoefficientSequence c = analyze(f, b, N);
    const EigenvalueMap e = eig_map(b);
    const CoefficientSequence psi = resolvent_coeffs(c, e, z);
    const CoefficientSequence chi = resolvent_derivative_coeffs(c, e, z);

    SmoothFunction phi;
    phi.domain = b.domain();
    phi.eval = [&psi, &b](double t) { return synthesize_at(psi, b, t); };

    const GridFunction tphi = apply_operator_grid(b, phi, grid);

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Complex fv = eval_function(f, b, grid[i]);
        const Complex pv = synthesize_at(psi, b, grid[i]);
        num = std::max(num, std::abs(tphi.values[i] - z * pv - fv));
        den = std::max(den, std::abs(fv));
    }
    if (den == 0.0)
        throw NumericError("verify_resolvent: f vanishes on the whole grid");

    ResolventReport rep;
    rep.residual = num / den;

    const IndexSet& idx = c.index_set();
    for (double h : {1e-5, 1e-6}) {
        const CoefficientSequence psi_h =
            resolvent_coeffs(c, e, z + Complex(h, 0.0));
        double mismatch = 0.0;
        for (int n = idx.min_index(); n <= idx.max_index(); ++n)
            mismatch = std::max(
                mismatch, std::abs((psi_h[n] - psi[n]) / h - chi[n]));
        rep.analyticity.emplace_back(h, mismatch);
    }
    return rep;
}

SvepReport svep_probe(const BasisFamily& b, std::span<const Complex> z_grid,
                      int N, std::uint64_t seed, int trials) {
    if (z_grid.empty()) throw ConfigError("svep_probe: need at least one z");
    const EigenvalueMap e = eig_map(b);
    const IndexSet idx(b.index_kind(), N);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    SvepReport rep;
    rep.trials = trials;
    std::vector<bool> survives(idx.size(), false);

    for (int trial = 0; trial < trials; ++trial) {
        for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
            const Complex s(gauss(rng), gauss(rng));
            // (eig(n) - z) s = 0 must hold at every z; any z different from
            // eig(n) forces s(n) = 0.
            bool killed = false;
            for (const Complex& z : z_grid) {
                if (std::abs(e(n) - z) > 1e-14 * (1.0 + std::abs(z))) {
                    killed = true;
                    break;
                }
            }
            if (!killed) {
                survives[idx.offset(n)] = true;
                rep.max_surviving = std::max(rep.max_surviving, std::abs(s));
            }
        }
    }
    for (std::size_t k = 0; k < survives.size(); ++k)
        if (survives[k]) rep.surviving_indices.push_back(idx.index_at(k));
    return rep;
}

}  // namespace specdiag
