#include "specdiag/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specdiag {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_even_integer(double p) {
    return std::isfinite(p) && p == std::floor(p) &&
           std::fmod(p, 2.0) == 0.0;
}

// |f|^p has kinks at real zeros of f unless p is an even integer. Those
// panels are repaired by geometric splitting toward the zero, so the
// doubling target only needs a little slack.
double effective_rel_tol(double p, const NormOptions& opts) {
    if (is_even_integer(p)) return opts.rel_tol;
    return std::max(opts.rel_tol, 1e-10);
}

using Integrand = std::function<double(double)>;
using Breakpoints = std::function<std::vector<double>(int)>;

double golden_min(const Integrand& g, double a, double b) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = g(c), fd = g(d);
    for (int it = 0; it < 60 && (b - a) > 1e-13 * (std::abs(a) + std::abs(b) + 1.0);
         ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = g(d);
        }
    }
    return 0.5 * (a + b);
}

// Integral of g over [lo, hi] with panels graded geometrically toward an
// interior near-zero of g; removes the kink of |f|^p at simple zeros.
double integrate_split_panel(const Integrand& g, const QuadratureRule& gl,
                             double lo, double hi) {
    const double tstar = golden_min(g, lo, hi);
    std::vector<double> bp;
    bp.push_back(lo);
    for (int side = 0; side < 2; ++side) {
        const double from = side == 0 ? lo : tstar;
        const double to = side == 0 ? tstar : hi;
        const double w = to - from;
        if (w > 1e-13 * (hi - lo)) {
            for (int k = 1; k <= 30; ++k) {
                const double off = w * std::pow(0.5, side == 0 ? k : 31 - k);
                bp.push_back(side == 0 ? to - off : from + off);
            }
        }
        bp.push_back(to);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    double acc = 0.0;
    for (std::size_t pnl = 0; pnl + 1 < bp.size(); ++pnl) {
        const double mid = 0.5 * (bp[pnl] + bp[pnl + 1]);
        const double half = 0.5 * (bp[pnl + 1] - bp[pnl]);
        for (std::size_t i = 0; i < gl.nodes.size(); ++i)
            acc += half * gl.weights[i] * g(mid + half * gl.nodes[i]);
    }
    return acc;
}

double log_integral_refined(const Integrand& g, const Breakpoints& bp,
                            const NormOptions& opts, double rel_tol,
                            bool kink_repair, const char* what) {
    const QuadratureRule gl = gauss_rule(WeightSpec::lebesgue({-1.0, 1.0}), 8);
    double prev = kInf;
    double last = kInf;
    for (int r = 0; r <= opts.max_refinements; ++r) {
        const std::vector<double> points = bp(r);
        const int order = static_cast<int>(gl.nodes.size());
        double acc = 0.0;
        double global_max = 0.0;
        std::vector<double> panel_val(points.size() - 1);
        std::vector<double> panel_min(points.size() - 1);
        std::vector<double> panel_max(points.size() - 1);
        for (std::size_t pnl = 0; pnl + 1 < points.size(); ++pnl) {
            const double mid = 0.5 * (points[pnl] + points[pnl + 1]);
            const double half = 0.5 * (points[pnl + 1] - points[pnl]);
            double v = 0.0, mn = kInf, mx = 0.0;
            for (int i = 0; i < order; ++i) {
                const double gv = g(mid + half * gl.nodes[i]);
                v += half * gl.weights[i] * gv;
                mn = std::min(mn, gv);
                mx = std::max(mx, gv);
            }
            panel_val[pnl] = v;
            panel_min[pnl] = mn;
            panel_max[pnl] = mx;
            global_max = std::max(global_max, mx);
            acc += v;
        }
        if (kink_repair && global_max > 0.0) {
            for (std::size_t pnl = 0; pnl + 1 < points.size(); ++pnl) {
                if (panel_max[pnl] <= 0.0) continue;
                if (panel_min[pnl] > 0.25 * panel_max[pnl]) continue;
                if (panel_max[pnl] < 1e-6 * global_max) continue;
                acc -= panel_val[pnl];
                acc += integrate_split_panel(g, gl, points[pnl], points[pnl + 1]);
            }
        }
        if (r > 0) {
            if (acc == 0.0 && last == 0.0) return -kInf;
            if (std::abs(acc - last) <=
                rel_tol * std::max(std::abs(acc),
                                   std::numeric_limits<double>::min()))
                return acc == 0.0 ? -kInf : std::log(acc);
        }
        prev = last;
        last = acc;
    }
    throw AccuracyError(std::string(what) +
                            ": integral did not stabilize under refinement",
                        prev, last);
}

// Parabolic ascent on |f| from a discrete argmax; every probe is still a
// sample, so the result never exceeds the true sup.
double polish_max(const Integrand& absf, double t0, double dt, double lo,
                  double hi, double current) {
    double t = t0;
    double best = current;
    double step = dt;
    for (int it = 0; it < 60 && step > 1e-14 * (std::abs(t) + 1.0); ++it) {
        const double tl = std::max(lo, t - step);
        const double tr = std::min(hi, t + step);
        const double fl = absf(tl), fc = absf(t), fr = absf(tr);
        best = std::max({best, fl, fc, fr});
        const double denom = fl - 2.0 * fc + fr;
        double tn = t;
        if (denom < 0.0 && std::isfinite(denom)) {
            tn = t + 0.5 * step * (fl - fr) / denom;
            tn = std::clamp(tn, tl, tr);
        }
        t = tn;
        step *= 0.5;
    }
    best = std::max(best, absf(t));
    return best;
}

struct SupGrid {
    std::vector<double> points;
    double lo, hi;
};

double log_sup_refined(const Integrand& absf,
                       const std::function<SupGrid(int)>& grid_fn,
                       const NormOptions& opts) {
    double prev = -1.0;
    double last = -1.0;
    for (int r = 0; r <= opts.max_refinements; ++r) {
        const SupGrid g = grid_fn(r);
        std::vector<double> vals(g.points.size());
        double m = 0.0;
        for (std::size_t i = 0; i < g.points.size(); ++i) {
            vals[i] = absf(g.points[i]);
            m = std::max(m, vals[i]);
        }
        // Polish the local maxima near the global one.
        for (std::size_t i = 0; i < g.points.size(); ++i) {
            const bool local_max =
                (i == 0 || vals[i] >= vals[i - 1]) &&
                (i + 1 == g.points.size() || vals[i] >= vals[i + 1]);
            if (!local_max || vals[i] < 0.5 * m) continue;
            const double dt = i + 1 < g.points.size()
                                  ? g.points[i + 1] - g.points[i]
                                  : g.points[i] - g.points[i - 1];
            m = std::max(m, polish_max(absf, g.points[i], dt, g.lo, g.hi, m));
        }
        last = m;
        if (r > 0) {
            if (last == 0.0 && prev == 0.0) return -kInf;
            if (std::abs(last - prev) <=
                opts.sup_rel_tol * std::max(last,
                                            std::numeric_limits<double>::min()))
                return last == 0.0 ? -kInf : std::log(last);
        }
        prev = last;
    }
    throw AccuracyError("lp_norm: sampled sup did not stabilize", prev, last);
}

double laguerre_truncation(double hint, double p) {
    const double pp = std::isfinite(p) ? std::max(p, 1.0) : 1.0;
    return 4.0 * hint + 80.0 / pp + 24.0;
}

double hermite_truncation(double hint) {
    return std::sqrt(2.0 * hint + 1.0) + 10.0;
}

// log of (integral)^{1/p}, i.e. log-norm from log-integral.
double log_norm_from_log_integral(double log_int, double p) {
    if (std::isinf(log_int) && log_int < 0) return -kInf;
    return log_int / p;
}

double lp_norm_log(const std::function<Complex(double)>& f, double p,
                   const WeightSpec& w, const NormOptions& opts) {
    if (!(p >= 1.0))
        throw ParameterError("lp_norm: p must lie in [1, inf]");
    const int hint = std::max(0, opts.oscillation_hint);
    const auto absf = [&f](double t) { return std::abs(f(t)); };

    if (std::isinf(p)) {
        std::function<SupGrid(int)> grid_fn;
        switch (w.kind) {
            case WeightKind::TorusUniform:
                grid_fn = [hint](int r) {
                    const int k = (4 * (hint + 1)) << r;
                    SupGrid g{{}, 0.0, 2.0 * M_PI};
                    g.points.resize(k);
                    for (int j = 0; j < k; ++j)
                        g.points[j] = 2.0 * M_PI * j / k;
                    return g;
                };
                break;
            case WeightKind::JacobiBeta:
                grid_fn = [hint](int r) {
                    const int k = (4 * (hint + 1)) << r;
                    SupGrid g{{}, -1.0, 1.0};
                    g.points.resize(k + 1);
                    for (int j = 0; j <= k; ++j)
                        g.points[j] = -std::cos(M_PI * j / k);
                    return g;
                };
                break;
            case WeightKind::Lebesgue: {
                const Interval dom = w.domain();
                if (dom.finite()) {
                    grid_fn = [hint, dom](int r) {
                        const int k = (4 * (hint + 1)) << r;
                        SupGrid g{{}, dom.lo, dom.hi};
                        g.points.resize(k + 1);
                        for (int j = 0; j <= k; ++j)
                            g.points[j] = dom.lo + dom.length() * j / k;
                        return g;
                    };
                } else if (std::isinf(dom.lo)) {
                    // Hermite-type envelope on the real line.
                    const double T = hermite_truncation(hint);
                    grid_fn = [hint, T](int r) {
                        const int k =
                            std::max((4 * (hint + 1)) << r, (4 * static_cast<int>(T)) << r);
                        SupGrid g{{}, -T, T};
                        g.points.resize(k + 1);
                        for (int j = 0; j <= k; ++j)
                            g.points[j] = -T + 2.0 * T * j / k;
                        return g;
                    };
                } else {
                    // Laguerre-type envelope on the half line. t = 0 is
                    // included; singular evaluators are inadmissible at
                    // p = inf anyway.
                    const double T = laguerre_truncation(hint, p);
                    grid_fn = [hint, T](int r) {
                        const int k =
                            std::max((4 * (hint + 1)) << r, (4 * static_cast<int>(T)) << r);
                        SupGrid g{{}, 0.0, T};
                        g.points.resize(k + 1);
                        for (int j = 0; j <= k; ++j) g.points[j] = T * j / k;
                        return g;
                    };
                }
                break;
            }
            default:
                throw ConfigError("lp_norm: unsupported weight for p = inf");
        }
        return log_sup_refined(absf, grid_fn, opts);
    }

    const double rel_tol = effective_rel_tol(p, opts);
    const bool repair = !is_even_integer(p);
    switch (w.kind) {
        case WeightKind::TorusUniform: {
            const Integrand g = [&](double t) {
                return std::pow(absf(t), p) / (2.0 * M_PI);
            };
            const Breakpoints bp = [hint](int r) {
                const int panels = std::max(24, 3 * hint + 8) << r;
                std::vector<double> v(panels + 1);
                for (int i = 0; i <= panels; ++i)
                    v[i] = 2.0 * M_PI * i / panels;
                return v;
            };
            return log_norm_from_log_integral(
                log_integral_refined(g, bp, opts, rel_tol, repair,
                                     "lp_norm[torus]"), p);
        }
        case WeightKind::JacobiBeta: {
            const double al = w.alpha, be = w.beta;
            // t = cos(theta); 1 -+ cos expressed through half-angle sines to
            // stay accurate at the endpoints.
            const Integrand g = [&, al, be](double th) {
                const double s = std::sin(0.5 * th), c = std::cos(0.5 * th);
                const double wdens = std::pow(2.0 * s * s, al) *
                                     std::pow(2.0 * c * c, be) * std::sin(th);
                return std::pow(absf(std::cos(th)), p) * wdens;
            };
            const Breakpoints bp = [hint, al, be](int r) {
                const int panels = std::max(24, 3 * hint + 8) << r;
                // theta = 0 is t = 1 (the alpha end), theta = pi is t = -1.
                return graded_breakpoints(0.0, M_PI, panels,
                                          al < 0.0 ? 40 : 0,
                                          be < 0.0 ? 40 : 0);
            };
            return log_norm_from_log_integral(
                log_integral_refined(g, bp, opts, rel_tol, repair,
                                     "lp_norm[jacobi]"),
                p);
        }
        case WeightKind::Lebesgue: {
            const Interval dom = w.domain();
            const Integrand g = [&](double t) { return std::pow(absf(t), p); };
            if (dom.finite()) {
                const Breakpoints bp = [hint, dom](int r) {
                    const int panels = std::max(24, 2 * hint + 8) << r;
                    std::vector<double> v(panels + 1);
                    for (int i = 0; i <= panels; ++i)
                        v[i] = dom.lo + dom.length() * i / panels;
                    return v;
                };
                return log_norm_from_log_integral(
                    log_integral_refined(g, bp, opts, rel_tol, repair,
                                         "lp_norm[interval]"),
                    p);
            }
            if (std::isinf(dom.lo)) {
                const double T0 = hermite_truncation(hint);
                const double dens = std::sqrt(2.0 * hint + 1.0);
                const Breakpoints bp = [T0, dens](int r) {
                    // Extending T certifies the tail; capped so refinements
                    // keep halving the panel width.
                    const double T = T0 + 6.0 * std::min(r, 2);
                    const int panels =
                        std::max(32,
                                 3 * static_cast<int>(
                                         std::ceil(2.0 * T * dens / M_PI)) +
                                     8)
                        << r;
                    std::vector<double> v(panels + 1);
                    for (int i = 0; i <= panels; ++i)
                        v[i] = -T + 2.0 * T * i / panels;
                    return v;
                };
                return log_norm_from_log_integral(
                    log_integral_refined(g, bp, opts, rel_tol, repair,
                                         "lp_norm[real-line]"),
                    p);
            }
            {
                const double T0 = laguerre_truncation(hint, p);
                const Breakpoints bp = [T0, hint](int r) {
                    const double T = T0 * (1.0 + 0.25 * std::min(r, 2));
                    const int panels = std::max(32, 3 * hint + 8) << r;
                    return graded_breakpoints(0.0, T, panels, 80, 0);
                };
                return log_norm_from_log_integral(
                    log_integral_refined(g, bp, opts, rel_tol, repair,
                                         "lp_norm[half-line]"),
                    p);
            }
        }
        default:
            throw ConfigError("lp_norm: unsupported weight kind");
    }
}

}  // namespace

bool laguerre_condition(double alpha, double p) {
    if (alpha <= -1.0)
        throw ParameterError("laguerre_condition: alpha must be > -1");
    if (!(p >= 1.0))
        throw ParameterError("laguerre_condition: p must lie in [1, inf]");
    if (alpha >= 0.0) return true;
    return p > 2.0 / (alpha + 2.0) && p < -2.0 / alpha;
}

double parseval_log_norm(const CoefficientSequence& c) {
    const double cmax = c.max_abs();
    if (cmax == 0.0) return -kInf;
    double acc = 0.0;
    for (const Complex& v : c.values()) {
        const double r = std::abs(v) / cmax;
        acc += r * r;
    }
    return std::log(cmax) + 0.5 * std::log(acc);
}

LogNorm lp_norm(const SmoothFunction& f, double p, const WeightSpec& w,
                const NormOptions& opts) {
    if (f.laguerre_smooth_part)
        throw ConfigError(
            "lp_norm: pass the full function, not the Laguerre smooth part");
    return {lp_norm_log(f.eval, p, w, opts)};
}

LogNorm lp_norm(const CoefficientSequence& c, const BasisFamily& b, double p,
                const NormOptions& opts) {
    if (!(p >= 1.0))
        throw ParameterError("lp_norm: p must lie in [1, inf]");
    if (p == 2.0 && !opts.force_quadrature) return {parseval_log_norm(c)};

    const double cmax = c.max_abs();
    if (cmax == 0.0) return LogNorm::zero();

    // Factor the scale out so |f|^p stays representable for any iterate.
    CoefficientSequence scaled(c.index_set());
    const IndexSet& idx = c.index_set();
    int hint = 0;
    for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
        const Complex v = c[n];
        if (v == Complex(0.0, 0.0)) continue;
        scaled.set(n, v / cmax);
        if (std::abs(v) > 1e-13 * cmax) hint = std::max(hint, std::abs(n));
    }

    NormOptions o = opts;
    o.oscillation_hint = hint;
    const auto eval = [&scaled, &b](double t) {
        return synthesize_at(scaled, b, t);
    };
    const double log_scaled = lp_norm_log(eval, p, b.measure(), o);
    if (std::isinf(log_scaled) && log_scaled < 0) return LogNorm::zero();
    return {std::log(cmax) + log_scaled};
}

LogNorm lp_norm(const GridFunction& g, double p, const QuadratureRule& rule) {
    if (!(p >= 1.0))
        throw ParameterError("lp_norm: p must lie in [1, inf]");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const Complex& v : g.values) m = std::max(m, std::abs(v));
        return LogNorm::from_value(m);
    }
    if (g.values.size() != rule.nodes.size())
        throw ConfigError("lp_norm: grid/rule size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        acc += rule.weights[i] * std::pow(std::abs(g.values[i]), p);
    if (acc == 0.0) return LogNorm::zero();
    return {std::log(acc) / p};
}

std::vector<double> basis_norm_sequence(const BasisFamily& b, double p, int N) {
    if (N < 0) throw ConfigError("basis_norm_sequence: N must be >= 0");
    if (!(p >= 1.0))
        throw ParameterError("basis_norm_sequence: p must lie in [1, inf]");
    if (b.kind() == FamilyKind::Laguerre && !laguerre_condition(b.alpha(), p))
        throw ParameterError(
            "basis_norm_sequence: (alpha, p) outside the Laguerre "
            "admissibility region");

    std::vector<double> out(N + 1);
    if (b.kind() == FamilyKind::Torus) {
        // |e_n| == 1 pointwise, so every L^p norm is exactly 1.
        std::fill(out.begin(), out.end(), 1.0);
        return out;
    }
    for (int n = 0; n <= N; ++n) {
        CoefficientSequence delta{IndexSet(b.index_kind(), n)};
        delta.set(n, Complex(1.0, 0.0));
        out[n] = lp_norm(delta, b, p, NormOptions{.force_quadrature = true})
                     .value();
    }
    return out;
}

}  // namespace specdiag
