#pragma once

// Check configuration, check reports, grid helpers, and a deterministic
// JSON emitter (sorted keys, %.17g floats) so identical runs produce
// byte-identical report files.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "svfcheck/set_algebra.hpp"

namespace svfcheck {

struct GridSpec {
    int nx = 33;
    int ny = 33;
    int nt = 17;
};

inline std::vector<double> lin_spaced(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("lin_spaced: n must be >= 1");
    if (n == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * (double(i) / double(n - 1));
    return out;
}

// Log-spaced grid including both endpoints; requires 0 < lo <= hi.
inline std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0) || !(hi >= lo))
        throw std::invalid_argument("log_spaced: requires 0 < lo <= hi");
    if (n < 1) throw std::invalid_argument("log_spaced: n must be >= 1");
    if (n == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(n));
    const double ratio = hi / lo;
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = lo * std::pow(ratio, double(i) / double(n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

enum class Verdict { Pass, Fail, Error };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Error: return "ERROR";
    }
    return "ERROR";
}

struct Witness {
    double x = 0;
    double y = 0;
    double t = 0;
    std::string detail;
};

struct LinkResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    double margin = 0;
    std::optional<Witness> witness;
    bool informational = false;  // excluded from aggregate verdicts
    std::string detail;
};

struct CheckStats {
    GridSpec grid;
    long evaluated = 0;  // triples with an in-domain harmonic point
    long skipped = 0;    // triples skipped because the point left the domain
    long violations = 0; // triples with margin above tol
};

struct PlotPoint {
    double x = 0;
    double y = 0;
    double margin = 0;
};

struct CheckReport {
    Verdict verdict = Verdict::Pass;
    double worst_margin = 0;
    std::optional<Witness> witness;
    std::vector<LinkResult> links;
    CheckStats stats;
    std::vector<PlotPoint> margins;  // per-(x,y) worst margin, evaluated pairs only

    bool passed() const { return verdict == Verdict::Pass; }
};

struct CheckConfig {
    double m = 1.0;
    double c = 0.0;
    std::optional<double> t_fixed;  // required by the fixed-t checks
    GridSpec grid;
    double tol = kDefaultTol;
    double eps = 0.0;
    int dyadic_depth = 8;
    std::uint64_t seed = 1;
    long sample_budget = 1000;
    std::vector<double> lambdas = {2.0, -1.0};  // scale factors probed by the closure suite
    int jobs = 1;

    void validate() const {
        if (!(m > 0 && m <= 1)) throw std::invalid_argument("config: m must be in (0, 1]");
        if (!(c >= 0)) throw std::invalid_argument("config: c must be nonnegative");
        if (t_fixed && !(*t_fixed > 0 && *t_fixed < 1))
            throw std::invalid_argument("config: t must be in (0, 1)");
        if (!(tol >= 0)) throw std::invalid_argument("config: tol must be nonnegative");
        if (!(eps >= 0)) throw std::invalid_argument("config: eps must be nonnegative");
        if (dyadic_depth < 1 || dyadic_depth > 20)
            throw std::invalid_argument("config: depth must be in [1, 20]");
        if (sample_budget < 0) throw std::invalid_argument("config: budget must be nonnegative");
        if (grid.nx < 1 || grid.ny < 1 || grid.nt < 1)
            throw std::invalid_argument("config: grid counts must be >= 1");
        if (jobs < 1) throw std::invalid_argument("config: jobs must be >= 1");
    }
};

// ---- deterministic JSON emission ----------------------------------------

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

inline std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

inline std::string witness_json(const Witness& w) {
    std::string out = "{";
    out += "\"detail\":" + json_str(w.detail);
    out += ",\"t\":" + fmt_double(w.t);
    out += ",\"x\":" + fmt_double(w.x);
    out += ",\"y\":" + fmt_double(w.y);
    out += "}";
    return out;
}

inline std::string link_json(const LinkResult& l) {
    std::string out = "{";
    out += "\"detail\":" + json_str(l.detail);
    out += ",\"informational\":" + std::string(l.informational ? "true" : "false");
    out += ",\"margin\":" + fmt_double(l.margin);
    out += ",\"name\":" + json_str(l.name);
    out += ",\"verdict\":" + json_str(to_string(l.verdict));
    if (l.witness)
        out += ",\"witness\":" + witness_json(*l.witness);
    out += "}";
    return out;
}

// Report object with sorted keys. config_echo, when nonempty, must be a
// complete JSON value and is spliced in verbatim.
inline std::string report_json(const CheckReport& r, const std::string& config_echo = "") {
    std::string out = "{";
    if (!config_echo.empty())
        out += "\"config_echo\":" + config_echo + ",";
    out += "\"links\":[";
    for (std::size_t i = 0; i < r.links.size(); ++i) {
        if (i) out += ",";
        out += link_json(r.links[i]);
    }
    out += "],\"margins\":[";
    for (std::size_t i = 0; i < r.margins.size(); ++i) {
        if (i) out += ",";
        out += "[" + fmt_double(r.margins[i].x) + "," + fmt_double(r.margins[i].y) + "," +
               fmt_double(r.margins[i].margin) + "]";
    }
    out += "],\"stats\":{";
    out += "\"evaluated\":" + std::to_string(r.stats.evaluated);
    out += ",\"grid\":[" + std::to_string(r.stats.grid.nx) + "," +
           std::to_string(r.stats.grid.ny) + "," + std::to_string(r.stats.grid.nt) + "]";
    out += ",\"skipped\":" + std::to_string(r.stats.skipped);
    out += ",\"violations\":" + std::to_string(r.stats.violations);
    out += "},\"verdict\":" + json_str(to_string(r.verdict));
    if (r.witness)
        out += ",\"witness\":" + witness_json(*r.witness);
    out += ",\"worst_margin\":" + fmt_double(r.worst_margin);
    out += "}";
    return out;
}

// Plot CSV: one row per recorded (x, y) pair.
inline std::string margins_csv(const CheckReport& r) {
    std::string out = "x,y,margin\n";
    for (const PlotPoint& p : r.margins)
        out += fmt_double(p.x) + "," + fmt_double(p.y) + "," + fmt_double(p.margin) + "\n";
    return out;
}

}  // namespace svfcheck
