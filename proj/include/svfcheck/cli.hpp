#pragma once

// Command-line front end: flag/config-file parsing with flag > file >
// default precedence, check dispatch, deterministic JSON/CSV report
// emission, the curated default suite, and report summarization.
//
// Exit codes: 0 = PASS (or falsify found nothing), 1 = FAIL (for falsify:
// a counterexample was found, which is the product of the search),
// 2 = ERROR or invalid configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "svfcheck/report.hpp"
#include "svfcheck/svf.hpp"
#include "svfcheck/verifier.hpp"

namespace svfcheck::cli {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string property;
    std::vector<std::string> svf_specs;
    std::string out;
    std::string format = "json";
    std::string report_path;
    CheckConfig cfg;
    bool has_m = false;
    bool has_t = false;
};

namespace detail {

inline GridSpec parse_grid_string(const std::string& text) {
    GridSpec g;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(text);
    if (!(in >> g.nx >> sep1 >> g.ny >> sep2 >> g.nt) || sep1 != ',' || sep2 != ',')
        throw CliError("config: bad value for 'grid' (expected \"nx,ny,nt\")");
    return g;
}

inline nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError("config: cannot open config file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        throw CliError("config: failed to parse '" + path + "': " + e.what());
    }
}

template <typename T>
std::optional<T> file_value(const nlohmann::json& file, const char* key) {
    if (!file.is_object() || !file.contains(key)) return std::nullopt;
    try {
        return file.at(key).get<T>();
    } catch (const std::exception&) {
        throw CliError(std::string("config: bad value for '") + key + "'");
    }
}

inline std::string config_echo_json(const RunConfig& rc) {
    std::string out = "{";
    out += "\"budget\":" + std::to_string(rc.cfg.sample_budget);
    out += ",\"c\":" + fmt_double(rc.cfg.c);
    out += ",\"command\":" + json_str(rc.command);
    out += ",\"depth\":" + std::to_string(rc.cfg.dyadic_depth);
    out += ",\"eps\":" + fmt_double(rc.cfg.eps);
    out += ",\"grid\":[" + std::to_string(rc.cfg.grid.nx) + "," +
           std::to_string(rc.cfg.grid.ny) + "," + std::to_string(rc.cfg.grid.nt) + "]";
    out += ",\"jobs\":" + std::to_string(rc.cfg.jobs);
    if (rc.has_m) out += ",\"m\":" + fmt_double(rc.cfg.m);
    if (!rc.property.empty()) out += ",\"property\":" + json_str(rc.property);
    out += ",\"seed\":" + std::to_string(rc.cfg.seed);
    out += ",\"svf\":[";
    for (std::size_t i = 0; i < rc.svf_specs.size(); ++i) {
        if (i) out += ",";
        out += json_str(rc.svf_specs[i]);
    }
    out += "]";
    if (rc.cfg.t_fixed) out += ",\"t\":" + fmt_double(*rc.cfg.t_fixed);
    out += ",\"tol\":" + fmt_double(rc.cfg.tol);
    out += "}";
    return out;
}

inline void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("cannot write output file '" + path + "'");
    out << content;
}

inline bool property_needs_m(Property p) { return p != Property::ScalingContinuity; }

inline void validate_run(const RunConfig& rc, Property prop) {
    const std::size_t want = prop == Property::ClosureSuite ? 2 : 1;
    if (rc.svf_specs.size() != want)
        throw CliError("config: property '" + rc.property + "' needs exactly " +
                       std::to_string(want) + " --svf argument(s), got " +
                       std::to_string(rc.svf_specs.size()));
    if (property_needs_m(prop) && !rc.has_m)
        throw CliError("config: missing required 'm' for property '" + rc.property + "'");
    if (rc.format != "json" && rc.format != "csv")
        throw CliError("config: bad value for 'format' (expected json or csv)");
}

inline int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        case Verdict::Error: return 2;
    }
    return 2;
}

inline void emit_report(const RunConfig& rc, const CheckReport& rep) {
    if (rc.format == "csv")
        write_output(rc.out, margins_csv(rep));
    else
        write_output(rc.out, report_json(rep, config_echo_json(rc)));
    std::cerr << rc.property << ": " << to_string(rep.verdict)
              << " worst_margin=" << fmt_double(rep.worst_margin)
              << " evaluated=" << rep.stats.evaluated << " skipped=" << rep.stats.skipped
              << "\n";
}

}  // namespace detail

inline int cmd_check(const RunConfig& rc) {
    const Property prop = parse_property(rc.property);
    detail::validate_run(rc, prop);
    const SetValuedFunction F = parse_svf_spec(rc.svf_specs[0]);
    std::optional<SetValuedFunction> G;
    if (rc.svf_specs.size() > 1) G = parse_svf_spec(rc.svf_specs[1]);
    const CheckReport rep = run_property(prop, F, G ? &*G : nullptr, rc.cfg);
    detail::emit_report(rc, rep);
    return detail::verdict_exit(rep.verdict);
}

inline int cmd_falsify(const RunConfig& rc) {
    const Property prop = parse_property(rc.property);
    detail::validate_run(rc, prop);
    const SetValuedFunction F = parse_svf_spec(rc.svf_specs[0]);
    const CheckReport rep = falsify(F, rc.cfg, prop);
    detail::emit_report(rc, rep);
    return detail::verdict_exit(rep.verdict);
}

// ---- suite ----------------------------------------------------------------

struct SuiteEntry {
    std::string name;
    std::string property;
    std::vector<std::string> svf;
    std::optional<double> m, c, t;
    std::optional<int> depth;
    std::string expect = "PASS";
    // link name -> expected verdict; "INFO" records without gating
    std::vector<std::pair<std::string, std::string>> expect_links;
};

// Curated battery over [0, x], {0}, and [-1/x^2, 1/x^2] on [0.5, 8] with
// m in {0.5, 1} and c in {0, 1}. Expected statuses were fixed from the
// scalar oracles (weighted HM-AM inequality and the 1/x^2 equality case).
inline std::vector<SuiteEntry> default_suite() {
    const std::string box_x = "kind=box expr=\"x\" domain=[0.5,8]";
    const std::string box_0 = "kind=box expr=\"0\" domain=[0.5,8]";
    const std::string sym = "kind=symmetric expr=\"1/x^2\" domain=[0.5,8]";
    std::vector<SuiteEntry> out;
    auto add = [&](std::string name, std::string property, std::vector<std::string> svf,
                   std::optional<double> m, std::optional<double> c, std::optional<double> t,
                   std::optional<int> depth, std::string expect,
                   std::vector<std::pair<std::string, std::string>> expect_links = {}) {
        out.push_back(SuiteEntry{std::move(name), std::move(property), std::move(svf), m, c, t,
                                 depth, std::move(expect), std::move(expect_links)});
    };

    add("m-concave box(x) m=0.5", "m-concave", {box_x}, 0.5, {}, {}, {}, "PASS");
    add("m-concave box(x) m=1", "m-concave", {box_x}, 1.0, {}, {}, {}, "PASS");
    add("m-concave box(0) m=0.5", "m-concave", {box_0}, 0.5, {}, {}, {}, "PASS");
    add("m-concave box(0) m=1", "m-concave", {box_0}, 1.0, {}, {}, {}, "PASS");
    add("m-concave symmetric(1/x^2) m=1", "m-concave", {sym}, 1.0, {}, {}, {}, "PASS");
    add("m-concave symmetric(1/x^2) m=0.5", "m-concave", {sym}, 0.5, {}, {}, {}, "FAIL");
    add("m-midconcave box(x) m=0.5", "m-midconcave", {box_x}, 0.5, {}, {}, {}, "PASS");
    add("m-midconcave symmetric(1/x^2) m=1", "m-midconcave", {sym}, 1.0, {}, {}, {}, "PASS");
    add("m-midconcave symmetric(1/x^2) m=0.5", "m-midconcave", {sym}, 0.5, {}, {}, {}, "FAIL");
    add("strong-m-concave symmetric(1/x^2) m=1 c=1", "strong-m-concave", {sym}, 1.0, 1.0, {}, {},
        "PASS");
    add("strong-m-concave symmetric(1/x^2) m=1 c=0", "strong-m-concave", {sym}, 1.0, 0.0, {}, {},
        "PASS");
    add("strong-m-concave box(x) m=0.5 c=1", "strong-m-concave", {box_x}, 0.5, 1.0, {}, {},
        "FAIL");
    add("strong-m-concave box(x) m=1 c=1", "strong-m-concave", {box_x}, 1.0, 1.0, {}, {}, "FAIL");
    add("strong-m-concave box(0) m=1 c=1", "strong-m-concave", {box_0}, 1.0, 1.0, {}, {}, "FAIL");
    add("strong-m-concave box(0) m=0.5 c=0", "strong-m-concave", {box_0}, 0.5, 0.0, {}, {},
        "PASS");
    add("strong-m-midconcave symmetric(1/x^2) m=1 c=1", "strong-m-midconcave", {sym}, 1.0, 1.0,
        {}, {}, "PASS");
    add("kuhn symmetric(1/x^2) m=1 c=1 t=0.3", "kuhn", {sym}, 1.0, 1.0, 0.3, {}, "PASS",
        {{"premise-fixed-t", "PASS"}, {"conclusion-midpoint", "PASS"}});
    add("kuhn box(x) m=0.5 c=0 t=0.3", "kuhn", {box_x}, 0.5, 0.0, 0.3, {}, "PASS",
        {{"premise-fixed-t", "PASS"}, {"conclusion-midpoint", "PASS"}});
    add("kuhn box(x) m=0.5 c=1 t=0.3 (vacuous)", "kuhn", {box_x}, 0.5, 1.0, 0.3, {}, "PASS",
        {{"premise-fixed-t", "FAIL"}});
    add("dyadic box(x) m=0.5 c=0 depth=6", "dyadic", {box_x}, 0.5, 0.0, {}, 6, "PASS");
    add("dyadic box(0) m=1 c=0 depth=4", "dyadic", {box_0}, 1.0, 0.0, {}, 4, "PASS");
    add("bd-approx box(x) m=1 c=0 t=1/3", "bd-approx", {box_x}, 1.0, 0.0, 1.0 / 3.0, 8, "PASS");
    add("chain-t-to-m box(x) m=0.5 c=0 t=0.5", "chain-t-to-m", {box_x}, 0.5, 0.0, 0.5, {}, "PASS",
        {{"L1", "PASS"},
         {"L2", "PASS"},
         {"L3", "FAIL"},
         {"L3p", "FAIL"},
         {"E", "PASS"}});
    add("chain-t-to-m box(x) m=1 c=0 t=0.5", "chain-t-to-m", {box_x}, 1.0, 0.0, 0.5, {}, "PASS",
        {{"L1", "PASS"}, {"L2", "PASS"}, {"L3", "PASS"}, {"L3p", "PASS"}, {"E", "PASS"}});
    add("closure box(x) m=0.5", "closure-suite", {box_x, box_x}, 0.5, {}, {}, {}, "PASS",
        {{"premise-F", "PASS"},
         {"premise-G", "PASS"},
         {"sum", "PASS"},
         {"scale:2", "PASS"},
         {"scale:-1", "PASS"},
         {"product", "INFO"},
         {"union", "PASS"},
         {"cross", "PASS"}});
    add("closure box(x) m=1", "closure-suite", {box_x, box_x}, 1.0, {}, {}, {}, "PASS",
        {{"premise-F", "PASS"},
         {"premise-G", "PASS"},
         {"sum", "PASS"},
         {"scale:2", "PASS"},
         {"scale:-1", "PASS"},
         {"product", "INFO"},
         {"union", "PASS"},
         {"cross", "PASS"}});
    add("scaling-continuity symmetric(1/x^2)", "scaling-continuity", {sym}, {}, {}, {}, {},
        "PASS");
    return out;
}

namespace detail {

inline std::vector<SuiteEntry> suite_from_config(const nlohmann::json& file) {
    if (!file.is_object() || !file.contains("suite")) return default_suite();
    std::vector<SuiteEntry> out;
    const auto& arr = file.at("suite");
    if (!arr.is_array()) throw CliError("config: bad value for 'suite' (expected array)");
    for (const auto& item : arr) {
        if (!item.is_object()) throw CliError("config: bad entry in 'suite'");
        SuiteEntry e;
        e.property = file_value<std::string>(item, "property").value_or("");
        if (e.property.empty()) throw CliError("config: suite entry missing 'property'");
        if (item.contains("svf")) {
            if (item.at("svf").is_array())
                e.svf = item.at("svf").get<std::vector<std::string>>();
            else
                e.svf = {item.at("svf").get<std::string>()};
        }
        if (e.svf.empty()) throw CliError("config: suite entry missing 'svf'");
        e.name = file_value<std::string>(item, "name").value_or(e.property);
        e.m = file_value<double>(item, "m");
        e.c = file_value<double>(item, "c");
        e.t = file_value<double>(item, "t");
        e.depth = file_value<int>(item, "depth");
        e.expect = file_value<std::string>(item, "expect").value_or("PASS");
        if (item.contains("expect_links")) {
            const auto& links = item.at("expect_links");
            if (!links.is_object())
                throw CliError("config: bad value for 'expect_links'");
            for (auto it = links.begin(); it != links.end(); ++it)
                e.expect_links.emplace_back(it.key(), it.value().get<std::string>());
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace detail

inline int cmd_suite(const RunConfig& base, const std::vector<SuiteEntry>& entries) {
    if (entries.empty()) {
        std::cerr << "error: suite: empty family list\n";
        return 2;
    }
    std::string out = "{\"config_echo\":" + detail::config_echo_json(base) + ",\"entries\":[";
    long matched_count = 0;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const SuiteEntry& e = entries[idx];
        RunConfig rc = base;
        rc.property = e.property;
        rc.svf_specs = e.svf;
        if (e.m) {
            rc.cfg.m = *e.m;
            rc.has_m = true;
        }
        if (e.c) rc.cfg.c = *e.c;
        if (e.t) rc.cfg.t_fixed = *e.t;
        if (e.depth) rc.cfg.dyadic_depth = *e.depth;

        const Property prop = parse_property(rc.property);
        detail::validate_run(rc, prop);
        const SetValuedFunction F = parse_svf_spec(rc.svf_specs[0]);
        std::optional<SetValuedFunction> G;
        if (rc.svf_specs.size() > 1) G = parse_svf_spec(rc.svf_specs[1]);
        const CheckReport rep = run_property(prop, F, G ? &*G : nullptr, rc.cfg);

        bool matched = std::string(to_string(rep.verdict)) == e.expect;
        std::string mismatch;
        if (!matched)
            mismatch = "verdict " + std::string(to_string(rep.verdict)) + " != expected " +
                       e.expect;
        for (const auto& [lname, lexpect] : e.expect_links) {
            if (lexpect == "INFO") continue;  // recorded, not gated
            const LinkResult* found = nullptr;
            for (const LinkResult& l : rep.links)
                if (l.name == lname) found = &l;
            if (!found) {
                matched = false;
                mismatch = "link '" + lname + "' missing";
            } else if (std::string(to_string(found->verdict)) != lexpect) {
                matched = false;
                mismatch = "link '" + lname + "' " + to_string(found->verdict) +
                           " != expected " + lexpect;
            }
        }
        if (matched) ++matched_count;

        if (idx) out += ",";
        out += "{\"expect\":" + json_str(e.expect);
        out += ",\"expect_links\":{";
        for (std::size_t i = 0; i < e.expect_links.size(); ++i) {
            if (i) out += ",";
            out += json_str(e.expect_links[i].first) + ":" + json_str(e.expect_links[i].second);
        }
        out += "},\"links\":[";
        for (std::size_t i = 0; i < rep.links.size(); ++i) {
            if (i) out += ",";
            out += link_json(rep.links[i]);
        }
        out += "],\"matched\":" + std::string(matched ? "true" : "false");
        if (!matched) out += ",\"mismatch\":" + json_str(mismatch);
        out += ",\"name\":" + json_str(e.name);
        out += ",\"property\":" + json_str(e.property);
        out += ",\"verdict\":" + json_str(to_string(rep.verdict));
        out += ",\"worst_margin\":" + fmt_double(rep.worst_margin);
        out += "}";
        std::cerr << (matched ? "[ ok ] " : "[MISS] ") << e.name << ": "
                  << to_string(rep.verdict) << " (expected " << e.expect << ")\n";
    }
    out += "],\"summary\":{\"entries\":" + std::to_string(entries.size());
    out += ",\"matched\":" + std::to_string(matched_count);
    out += ",\"mismatched\":" + std::to_string(static_cast<long>(entries.size()) - matched_count);
    out += "}}";
    detail::write_output(base.out, out);
    return matched_count == static_cast<long>(entries.size()) ? 0 : 1;
}

inline int cmd_report(const RunConfig& rc) {
    std::ifstream in(rc.report_path);
    if (!in) {
        std::cerr << "error: cannot open report file '" << rc.report_path << "'\n";
        return 2;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
        if (!j.is_object() || !j.contains("verdict") || !j.contains("worst_margin"))
            throw CliError("not a report object");
        std::ostringstream summary;
        summary << "verdict: " << j.at("verdict").get<std::string>() << "\n";
        summary << "worst_margin: " << fmt_double(j.at("worst_margin").get<double>()) << "\n";
        if (j.contains("witness")) {
            const auto& w = j.at("witness");
            summary << "witness: x=" << fmt_double(w.at("x").get<double>())
                    << " y=" << fmt_double(w.at("y").get<double>())
                    << " t=" << fmt_double(w.at("t").get<double>());
            const std::string detail = w.value("detail", std::string());
            if (!detail.empty()) summary << " (" << detail << ")";
            summary << "\n";
        }
        if (j.contains("links"))
            for (const auto& l : j.at("links"))
                summary << "link " << l.at("name").get<std::string>() << ": "
                        << l.at("verdict").get<std::string>()
                        << " margin=" << fmt_double(l.at("margin").get<double>()) << "\n";
        if (j.contains("stats")) {
            const auto& s = j.at("stats");
            summary << "stats: evaluated=" << s.value("evaluated", 0L)
                    << " skipped=" << s.value("skipped", 0L)
                    << " violations=" << s.value("violations", 0L) << "\n";
        }
        std::cerr << summary.str();

        std::string csv = "x,y,margin\n";
        if (j.contains("margins"))
            for (const auto& row : j.at("margins"))
                csv += fmt_double(row.at(0).get<double>()) + "," +
                       fmt_double(row.at(1).get<double>()) + "," +
                       fmt_double(row.at(2).get<double>()) + "\n";
        detail::write_output(rc.out, csv);
    } catch (const std::exception& e) {
        std::cerr << "error: malformed report file '" << rc.report_path << "': " << e.what()
                  << "\n";
        return 2;
    }
    return 0;
}

// Builds the effective RunConfig for one subcommand and dispatches.
// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"numerical checker for concavity-type inclusions of interval-valued "
                 "functions under harmonic m-combinations"};
    app.require_subcommand(1);

    std::optional<std::string> property, grid, out, format, config_path;
    std::vector<std::string> svf_specs;
    std::optional<double> m, c, t, tol, eps;
    std::optional<int> depth, jobs;
    std::optional<long> budget;
    std::optional<std::uint64_t> seed;
    std::string report_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--property", property, "property to check (e.g. m-concave)");
        sub->add_option("--svf", svf_specs,
                        "SVF spec, e.g. kind=box expr=\"x\" domain=[0.5,8] (repeatable)");
        sub->add_option("--m", m, "m parameter in (0, 1]");
        sub->add_option("--c", c, "strong-concavity modulus (default 0)");
        sub->add_option("--t", t, "fixed t in (0, 1) / bd-approx target");
        sub->add_option("--tol", tol, "absolute slack for inclusions (default 1e-9)");
        sub->add_option("--eps", eps, "extra relaxation for eps-inclusions (default 0)");
        sub->add_option("--depth", depth, "max dyadic depth (default 8)");
        sub->add_option("--seed", seed, "seed for randomized search (default 1)");
        sub->add_option("--budget", budget, "sample budget for falsify (default 1000)");
        sub->add_option("--grid", grid, "grid resolution \"nx,ny,nt\" (default 33,33,17)");
        sub->add_option("--jobs", jobs, "worker threads (default 1)");
        sub->add_option("--out", out, "output file (default: stdout)");
        sub->add_option("--format", format, "report format: json|csv (default json)");
        sub->add_option("--config", config_path, "JSON config file (flags take precedence)");
    };

    CLI::App* check = app.add_subcommand("check", "run one grid check");
    add_common(check);
    CLI::App* fals = app.add_subcommand("falsify", "search for a counterexample");
    add_common(fals);
    CLI::App* suite = app.add_subcommand("suite", "run a battery with expected statuses");
    add_common(suite);
    CLI::App* report = app.add_subcommand("report", "summarize a JSON report, emit plot CSV");
    report->add_option("path", report_path, "report file written by check/falsify")->required();
    report->add_option("--out", out, "CSV output file (default: stdout)");

    std::vector<const char*> argv;
    argv.push_back("svfcheck");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        nlohmann::json file;
        if (config_path) file = detail::load_config_file(*config_path);

        RunConfig rc;
        rc.property = property ? *property
                               : detail::file_value<std::string>(file, "property").value_or("");
        rc.svf_specs = svf_specs;
        if (rc.svf_specs.empty() && file.is_object() && file.contains("svf")) {
            if (file.at("svf").is_array())
                rc.svf_specs = file.at("svf").get<std::vector<std::string>>();
            else
                rc.svf_specs = {file.at("svf").get<std::string>()};
        }
        const auto fm = detail::file_value<double>(file, "m");
        if (m || fm) {
            rc.cfg.m = m ? *m : *fm;
            rc.has_m = true;
        }
        rc.cfg.c = c ? *c : detail::file_value<double>(file, "c").value_or(0.0);
        const auto ft = detail::file_value<double>(file, "t");
        if (t || ft) {
            rc.cfg.t_fixed = t ? *t : *ft;
            rc.has_t = true;
        }
        rc.cfg.tol = tol ? *tol : detail::file_value<double>(file, "tol").value_or(kDefaultTol);
        rc.cfg.eps = eps ? *eps : detail::file_value<double>(file, "eps").value_or(0.0);
        rc.cfg.dyadic_depth =
            depth ? *depth : detail::file_value<int>(file, "depth").value_or(8);
        rc.cfg.seed = seed ? *seed : detail::file_value<std::uint64_t>(file, "seed").value_or(1);
        rc.cfg.sample_budget =
            budget ? *budget : detail::file_value<long>(file, "budget").value_or(1000);
        rc.cfg.jobs = jobs ? *jobs : detail::file_value<int>(file, "jobs").value_or(1);
        if (grid) {
            rc.cfg.grid = detail::parse_grid_string(*grid);
        } else if (file.is_object() && file.contains("grid")) {
            if (file.at("grid").is_array()) {
                const auto a = file.at("grid").get<std::vector<int>>();
                if (a.size() != 3) throw CliError("config: bad value for 'grid'");
                rc.cfg.grid = GridSpec{a[0], a[1], a[2]};
            } else {
                rc.cfg.grid = detail::parse_grid_string(file.at("grid").get<std::string>());
            }
        }
        rc.out = out ? *out : detail::file_value<std::string>(file, "out").value_or("");
        rc.format =
            format ? *format : detail::file_value<std::string>(file, "format").value_or("json");
        rc.report_path = report_path;

        if (app.got_subcommand(check)) {
            rc.command = "check";
            if (rc.property.empty()) throw CliError("config: missing required 'property'");
            return cmd_check(rc);
        }
        if (app.got_subcommand(fals)) {
            rc.command = "falsify";
            if (rc.property.empty()) throw CliError("config: missing required 'property'");
            return cmd_falsify(rc);
        }
        if (app.got_subcommand(suite)) {
            rc.command = "suite";
            return cmd_suite(rc, detail::suite_from_config(file));
        }
        rc.command = "report";
        return cmd_report(rc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace svfcheck::cli
