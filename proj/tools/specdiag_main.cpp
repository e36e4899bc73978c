// specdiag: local spectra, local resolvents and iterate-norm radii for the
// four diagonalizable operator families, from the command line.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "specdiag/report_json.hpp"

using namespace specdiag;

namespace {

Complex parse_complex(std::string tok) {
    // Accepts "a", "bi", "a+bi", "a-bi".
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw ConfigError("empty complex literal");
    if (tok.back() != 'i') {
        std::size_t pos = 0;
        const double re = std::stod(tok, &pos);
        if (pos != tok.size())
            throw ConfigError("bad complex literal: " + tok);
        return {re, 0.0};
    }
    tok.pop_back();  // drop 'i'
    if (tok.empty() || tok == "+") return {0.0, 1.0};
    if (tok == "-") return {0.0, -1.0};
    // Split at the last +/- that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = tok.size(); i-- > 1;) {
        if ((tok[i] == '+' || tok[i] == '-') &&
            tok[i - 1] != 'e' && tok[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        std::size_t pos = 0;
        const double im = std::stod(tok, &pos);
        if (pos != tok.size()) throw ConfigError("bad complex literal");
        return {0.0, im};
    }
    const double re = std::stod(tok.substr(0, split));
    std::string imtok = tok.substr(split);
    if (imtok == "+") imtok = "1";
    if (imtok == "-") imtok = "-1";
    return {re, std::stod(imtok)};
}

std::vector<Complex> parse_poly(const std::string& s) {
    std::vector<Complex> poly;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) poly.push_back(parse_complex(tok));
    if (poly.empty()) throw ConfigError("--poly: no coefficients");
    return poly;
}

double parse_p(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF")
        return std::numeric_limits<double>::infinity();
    const double p = std::stod(s);
    if (!(p >= 1.0)) throw ConfigError("--p must lie in [1, inf]");
    return p;
}

struct Config {
    std::string family;
    double alpha = 0.0;
    double beta = 0.0;
    std::string poly = "0,1";  // P = X
    std::string func;
    std::string p = "2";
    int N = kDefaultTruncationDegree;
    int nmax = 60;
    double threshold = kDefaultSupportThreshold;
    std::string z = "1";
    std::string out = "-";
};

BasisFamily build_family(const Config& cfg) {
    if (cfg.family == "torus") return BasisFamily::torus(parse_poly(cfg.poly));
    if (cfg.family == "jacobi") {
        if (cfg.alpha < -0.5 || cfg.beta < -0.5)
            throw ConfigError(
                "jacobi: alpha and beta must be >= -1/2 for the transform "
                "regime");
        return BasisFamily::jacobi(cfg.alpha, cfg.beta);
    }
    if (cfg.family == "hermite") return BasisFamily::hermite();
    if (cfg.family == "laguerre") return BasisFamily::laguerre(cfg.alpha);
    throw ConfigError("unknown family: " + cfg.family +
                      " (expected torus|jacobi|hermite|laguerre)");
}

struct ModeSum {
    std::vector<std::pair<int, Complex>> modes;
};

bool looks_like_mode_sum(const std::string& s) {
    return s.find(',') != std::string::npos &&
           s.find(':') == std::string::npos && s.rfind("cos", 0) != 0;
}

ModeSum parse_mode_sum(const std::string& s) {
    ModeSum ms;
    std::stringstream ss(s);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw ConfigError("--func mode-sum: expected k,c pairs");
        ms.modes.emplace_back(std::stoi(pair.substr(0, comma)),
                              parse_complex(pair.substr(comma + 1)));
    }
    if (ms.modes.empty()) throw ConfigError("--func mode-sum: empty");
    return ms;
}

SmoothFunction mode_sum_function(const ModeSum& ms, const BasisFamily& b) {
    for (const auto& [k, c] : ms.modes) {
        if (b.index_kind() == IndexKind::Naturals && k < 0)
            throw ConfigError("--func: negative mode for a Naturals-indexed "
                              "family");
    }
    SmoothFunction f;
    f.domain = b.domain();
    if (b.kind() == FamilyKind::Laguerre) {
        // Assemble the smooth part so the t^{alpha/2} factor never gets
        // evaluated pointwise.
        const double alpha = b.alpha();
        int kmax = 0;
        for (const auto& [k, c] : ms.modes) kmax = std::max(kmax, k);
        auto modes = ms.modes;
        f.laguerre_smooth_part = true;
        f.eval = [modes, alpha, kmax](double t) {
            std::vector<double> vals(kmax + 1);
            laguerre_polypart_all(kmax, alpha, t, vals);
            Complex acc(0.0, 0.0);
            for (const auto& [k, c] : modes) acc += c * vals[k];
            return acc * std::exp(-0.5 * t);
        };
        return f;
    }
    auto modes = ms.modes;
    const BasisFamily fam = b;
    f.eval = [modes, fam](double t) {
        Complex acc(0.0, 0.0);
        for (const auto& [k, c] : modes) acc += c * eval_basis(fam, k, t);
        return acc;
    };
    return f;
}

// Builtin catalog: mode-sums "k1,c1;k2,c2;...", "cos<k>t", "geomcos"
// (1/(2-cos t)), "gausspoly:c0,c1,..." for Hermite, "mono:<j>" Laguerre
// smooth-part monomials t^j e^{-t/2}, and "zero".
SmoothFunction build_function(const std::string& spec, const BasisFamily& b) {
    if (spec.empty()) throw ConfigError("--func is required");
    SmoothFunction f;
    f.domain = b.domain();
    if (spec == "zero") {
        f.eval = [](double) { return Complex(0.0, 0.0); };
        return f;
    }
    if (spec.rfind("cos", 0) == 0 && spec.back() == 't') {
        const int k = std::stoi(spec.substr(3, spec.size() - 4));
        f.eval = [k](double t) { return Complex(std::cos(k * t), 0.0); };
        return f;
    }
    if (spec == "geomcos") {
        f.eval = [](double t) {
            return Complex(1.0 / (2.0 - std::cos(t)), 0.0);
        };
        return f;
    }
    if (spec.rfind("gausspoly:", 0) == 0) {
        std::vector<Complex> cs = parse_poly(spec.substr(10));
        f.eval = [cs](double t) {
            Complex acc(0.0, 0.0);
            for (auto it = cs.rbegin(); it != cs.rend(); ++it)
                acc = acc * t + *it;
            return acc * std::exp(-0.5 * t * t);
        };
        return f;
    }
    if (spec.rfind("mono:", 0) == 0) {
        if (b.kind() != FamilyKind::Laguerre)
            throw ConfigError("--func mono:<j> is a Laguerre smooth part");
        const int j = std::stoi(spec.substr(5));
        if (j < 0) throw ConfigError("--func mono:<j> needs j >= 0");
        f.laguerre_smooth_part = true;
        f.eval = [j](double t) {
            return Complex(std::pow(t, j) * std::exp(-0.5 * t), 0.0);
        };
        return f;
    }
    if (looks_like_mode_sum(spec))
        return mode_sum_function(parse_mode_sum(spec), b);
    throw ConfigError("--func: unrecognized function spec '" + spec + "'");
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
}

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("SPECDIAG_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 20250811ull;
}

int cmd_transform(const Config& cfg) {
    const BasisFamily b = build_family(cfg);
    const SmoothFunction f = build_function(cfg.func, b);
    const CoefficientSequence c = analyze(f, b, cfg.N);

    std::string out = "index,re,im,abs\n";
    const IndexSet& idx = c.index_set();
    for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", n,
                      c[n].real(), c[n].imag(), std::abs(c[n]));
        out += buf;
    }
    out += "\n";
    if (c.max_abs() > 0.0)
        out += to_json(decay_report(c)) + "\n";
    else
        out += "{\"decay_report\":null}\n";
    write_output(cfg.out, out);
    return 0;
}

int cmd_radius(const Config& cfg) {
    const BasisFamily b = build_family(cfg);
    const double p = parse_p(cfg.p);
    if (b.kind() == FamilyKind::Laguerre && !laguerre_condition(b.alpha(), p))
        throw ConfigError(
            "laguerre: (alpha, p) fails the admissibility condition");
    const SmoothFunction f = build_function(cfg.func, b);
    Tolerances tol;
    tol.support_threshold = cfg.threshold;
    const SpectralReport rep = verify_lsrf(f, b, p, cfg.nmax, cfg.N, tol);
    write_output(cfg.out, to_json(rep) + "\n");
    return 0;
}

std::vector<double> resolvent_grid(const BasisFamily& b, int points) {
    std::vector<double> g(points);
    switch (b.kind()) {
        case FamilyKind::Torus:
            for (int i = 0; i < points; ++i) g[i] = 2.0 * M_PI * i / points;
            break;
        case FamilyKind::Jacobi:
            for (int i = 0; i < points; ++i)
                g[i] = -0.95 + 1.9 * i / (points - 1.0);
            break;
        case FamilyKind::Hermite:
            for (int i = 0; i < points; ++i)
                g[i] = -8.0 + 16.0 * i / (points - 1.0);
            break;
        case FamilyKind::Laguerre:
            for (int i = 0; i < points; ++i)
                g[i] = 0.5 + 30.0 * i / (points - 1.0);
            break;
        default:
            throw ConfigError("resolvent: unsupported family");
    }
    return g;
}

int cmd_resolvent(const Config& cfg) {
    const BasisFamily b = build_family(cfg);
    const SmoothFunction f = build_function(cfg.func, b);
    const Complex z = parse_complex(cfg.z);
    const std::vector<double> grid = resolvent_grid(b, 1024);
    const ResolventReport rep = verify_resolvent(f, b, z, cfg.N, grid);

    std::string out = "{\"family\":\"" + b.name() + "\",\"z\":{\"re\":" +
                      json_number(z.real()) + ",\"im\":" +
                      json_number(z.imag()) + "},\"residual\":" +
                      json_number(rep.residual) + ",\"analyticity\":[";
    for (std::size_t i = 0; i < rep.analyticity.size(); ++i) {
        if (i) out += ",";
        out += "{\"h\":" + json_number(rep.analyticity[i].first) +
               ",\"mismatch\":" + json_number(rep.analyticity[i].second) + "}";
    }
    out += "]}\n";
    write_output(cfg.out, out);
    return 0;
}

struct VerifyRow {
    std::string name;
    bool pass;
    double value;
};

int cmd_verify(const Config& cfg) {
    const BasisFamily b = build_family(cfg);
    const std::uint64_t seed = seed_from_env();
    std::vector<VerifyRow> rows;
    const bool tight = b.kind() == FamilyKind::Torus ||
                       b.kind() == FamilyKind::Jacobi;

    // Orthonormality: analyze of each basis function is a delta column.
    {
        const int N = 32;
        double worst = 0.0;
        for (int k = 0; k <= N; ++k) {
            SmoothFunction bk;
            bk.domain = b.domain();
            if (b.kind() == FamilyKind::Laguerre) {
                const double al = b.alpha();
                bk.laguerre_smooth_part = true;
                bk.eval = [al, k](double t) {
                    std::vector<double> v(k + 1);
                    laguerre_polypart_all(k, al, t, v);
                    return Complex(v[k] * std::exp(-0.5 * t), 0.0);
                };
            } else {
                bk.eval = [&b, k](double t) { return eval_basis(b, k, t); };
            }
            const CoefficientSequence c = analyze(bk, b, N);
            const IndexSet& idx = c.index_set();
            for (int n = idx.min_index(); n <= idx.max_index(); ++n) {
                const double expect = n == k ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(std::abs(c[n]) - expect));
            }
        }
        rows.push_back({"orthonormality", worst < (tight ? 1e-10 : 1e-8),
                        worst});
    }

    // Eigenrelation residual via the finite-difference oracle.
    {
        double worst = 0.0;
        std::vector<double> grid;
        switch (b.kind()) {
            case FamilyKind::Torus:
                for (int i = 0; i < 64; ++i) grid.push_back(2 * M_PI * i / 64);
                break;
            case FamilyKind::Jacobi:
                for (int i = 0; i < 64; ++i)
                    grid.push_back(-0.9 + 1.8 * i / 63.0);
                break;
            case FamilyKind::Hermite:
                for (int i = 0; i < 64; ++i)
                    grid.push_back(-6.0 + 12.0 * i / 63.0);
                break;
            default:
                for (int i = 0; i < 64; ++i)
                    grid.push_back(0.5 + 20.0 * i / 63.0);
                break;
        }
        for (int n : {0, 3, 10})
            worst = std::max(worst, crosscheck_eigenrelation(b, n, grid));
        rows.push_back({"eigenrelation", worst < 1e-6, worst});
    }

    // Default two-mode input per family.
    std::string fspec;
    switch (b.kind()) {
        case FamilyKind::Torus: fspec = "2,1;5,1"; break;
        case FamilyKind::Jacobi: fspec = "3,1;7,1"; break;
        case FamilyKind::Hermite: fspec = "0,1;4,1"; break;
        default: fspec = "0,1;6,1"; break;
    }
    const SmoothFunction f = build_function(fspec, b);

    // Round trip on a sample grid.
    {
        const CoefficientSequence c = analyze(f, b, 16);
        const std::vector<double> grid = resolvent_grid(b, 64);
        double worst = 0.0;
        for (double t : grid)
            worst = std::max(worst, std::abs(synthesize_at(c, b, t) -
                                             eval_function(f, b, t)));
        rows.push_back({"round_trip", worst < 1e-10, worst});
    }

    // Parseval vs quadrature at p = 2.
    {
        const CoefficientSequence c = analyze(f, b, 16);
        const double lp = parseval_log_norm(c);
        const double lq =
            lp_norm(c, b, 2.0, NormOptions{.force_quadrature = true})
                .log_value;
        const double rel = std::abs(std::exp(lp - lq) - 1.0);
        rows.push_back({"parseval_p2", rel < 1e-9, rel});
    }

    // Diagonalization through the oracle.
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        double worst = 0.0;
        for (int trial = 0; trial < 2; ++trial) {
            ModeSum ms;
            const int kcap = b.kind() == FamilyKind::Torus ? 6 : 8;
            for (int j = 0; j < 3; ++j) {
                int k = 1 + static_cast<int>((unif(rng) + 1.0) * 0.5 * kcap);
                if (b.kind() == FamilyKind::Torus && unif(rng) < 0) k = -k;
                ms.modes.emplace_back(k, Complex(unif(rng), 0.0));
            }
            const SmoothFunction g = mode_sum_function(ms, b);
            const CoefficientSequence cg = analyze(g, b, 16);
            SmoothFunction tg;
            tg.domain = b.domain();
            tg.eval = [&b, &g](double t) {
                return apply_operator_at(b, g, t);
            };
            const CoefficientSequence ct = analyze(tg, b, 16);
            const EigenvalueMap e = eig_map(b);
            const double scale = ct.max_abs();
            for (int n = cg.index_set().min_index();
                 n <= cg.index_set().max_index(); ++n)
                worst = std::max(worst,
                                 std::abs(ct[n] - e(n) * cg[n]) /
                                     std::max(scale, 1e-30));
        }
        rows.push_back({"diagonalization", worst < 1e-6, worst});
    }

    // Neumann partial sums against the resolvent coefficients.
    {
        const CoefficientSequence c = analyze(f, b, 16);
        const EigenvalueMap e = eig_map(b);
        const SupportSet supp = support(c, cfg.threshold);
        double maxeig = 0.0;
        for (int n : supp.indices)
            maxeig = std::max(maxeig, std::abs(e(n)));
        const Complex z(0.0, 2.0 * std::max(maxeig, 1.0));
        const CoefficientSequence direct = resolvent_coeffs(c, e, z);
        const CoefficientSequence partial = neumann_partial_sum(c, e, z, 60);
        double worst = 0.0;
        for (int n : supp.indices)
            worst = std::max(worst, std::abs(direct[n] - partial[n]));
        rows.push_back({"neumann", worst < 1e-10, worst});
    }

    // Local resolvent construction.
    {
        const std::vector<double> grid = resolvent_grid(b, 512);
        const ResolventReport rr =
            verify_resolvent(f, b, Complex(1.0, 1.0), 16, grid);
        const double ratio = rr.analyticity[0].second /
                             std::max(rr.analyticity[1].second, 1e-300);
        const bool ok = rr.residual < (tight ? 1e-8 : 1e-6) && ratio > 5.0 &&
                        ratio < 20.0;
        rows.push_back({"resolvent", ok, rr.residual});
    }

    // Local spectral radius formula at p = 2.
    {
        Tolerances tol;
        tol.support_threshold = cfg.threshold;
        const SpectralReport rep = verify_lsrf(f, b, 2.0, cfg.nmax, 32, tol);
        const bool ok = rep.checks.liminf_bound && rep.checks.limsup_bound &&
                        rep.checks.formula && rep.residual < 1e-6;
        rows.push_back({"lsrf_p2", ok, rep.residual});
    }

    // Uniqueness probe.
    {
        const std::vector<Complex> zs = {Complex(0.25, 0.5),
                                         Complex(-1.5, 0.25)};
        const SvepReport sr = svep_probe(b, zs, 32, seed);
        rows.push_back({"svep", sr.max_surviving == 0.0 &&
                                    sr.surviving_indices.empty(),
                        sr.max_surviving});
    }

    bool all = true;
    std::string out;
    for (const auto& r : rows) {
        all = all && r.pass;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "[%s] %-16s %.3e\n",
                      r.pass ? " OK " : "FAIL", r.name.c_str(), r.value);
        out += buf;
    }
    out += all ? "all checks passed\n" : "some checks FAILED\n";
    write_output(cfg.out, out);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local spectra and spectral radii for diagonalizable "
                 "differential operators"};
    app.require_subcommand(1);

    Config cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--family", cfg.family,
                        "torus | jacobi | hermite | laguerre")
            ->required();
        sub->add_option("--alpha", cfg.alpha, "Jacobi/Laguerre alpha");
        sub->add_option("--beta", cfg.beta, "Jacobi beta");
        sub->add_option("--poly", cfg.poly,
                        "torus polynomial coefficients c0,c1,... (default X)");
        sub->add_option("--func", cfg.func,
                        "mode-sum k1,c1;k2,c2;... or catalog name");
        sub->add_option("--N", cfg.N, "truncation degree");
        sub->add_option("--threshold", cfg.threshold,
                        "relative support threshold");
        sub->add_option("--out", cfg.out, "output path (- for stdout)");
    };

    CLI::App* t = app.add_subcommand("transform",
                                     "forward transform to CSV + decay JSON");
    add_common(t);
    CLI::App* r = app.add_subcommand(
        "radius", "local spectral radius report (JSON)");
    add_common(r);
    r->add_option("--p", cfg.p, "Lebesgue exponent in [1, inf]");
    r->add_option("--nmax", cfg.nmax, "highest iterate power");
    CLI::App* s = app.add_subcommand("resolvent",
                                     "local resolvent residual (JSON)");
    add_common(s);
    s->add_option("--z", cfg.z, "complex spectral parameter");
    CLI::App* v = app.add_subcommand("verify",
                                     "invariant suite for one family");
    add_common(v);
    v->add_option("--nmax", cfg.nmax, "highest iterate power");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (t->parsed()) return cmd_transform(cfg);
        if (r->parsed()) return cmd_radius(cfg);
        if (s->parsed()) return cmd_resolvent(cfg);
        if (v->parsed()) return cmd_verify(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
