#include "specdiag/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace specdiag {

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const SpectralReport& r) {
    std::string s;
    s.reserve(4096);
    s += "{\"family\":\"" + r.family + "\",";
    s += "\"p\":";
    s += std::isinf(r.p) ? "\"inf\"" : json_number(r.p);
    s += ",\"spectrum\":[";
    for (std::size_t i = 0; i < r.spectrum_points.size(); ++i) {
        if (i) s += ",";
        s += "{\"re\":" + json_number(r.spectrum_points[i].real()) +
             ",\"im\":" + json_number(r.spectrum_points[i].imag()) + "}";
    }
    s += "],\"radius_support\":" + json_number(r.radius_support);
    s += ",\"iterates\":[";
    for (std::size_t i = 0; i < r.iterates.a.size(); ++i) {
        if (i) s += ",";
        s += "{\"n\":" + std::to_string(i + 1) +
             ",\"a_n\":" + json_number(r.iterates.a[i]) + ",\"ratio\":";
        s += i < r.iterates.ratio.size() ? json_number(r.iterates.ratio[i])
                                         : "null";
        s += "}";
    }
    s += "],\"limit_estimate\":" + json_number(r.limit_estimate);
    s += ",\"residual\":" + json_number(r.residual);
    s += ",\"tail_flag\":";
    s += r.tail_flag ? "true" : "false";
    s += ",\"checks\":{\"liminf_bound\":";
    s += r.checks.liminf_bound ? "true" : "false";
    s += ",\"limsup_bound\":";
    s += r.checks.limsup_bound ? "true" : "false";
    s += ",\"formula\":";
    s += r.checks.formula ? "true" : "false";
    s += "}}";
    return s;
}

std::string to_json(const DecayReport& d) {
    std::string s = "{\"weighted_sup\":{";
    for (std::size_t k = 0; k < DecayReport::kWeights.size(); ++k) {
        if (k) s += ",";
        s += "\"k" + std::to_string(DecayReport::kWeights[k]) +
             "\":" + json_number(d.weighted_sup[k]);
    }
    s += "},\"algebraic_exponent\":" + json_number(d.algebraic_exponent);
    s += ",\"geometric_log_slope\":" + json_number(d.geometric_log_slope);
    s += ",\"slope_applicable\":";
    s += d.slope_applicable ? "true" : "false";
    s += "}";
    return s;
}

}  // namespace specdiag
