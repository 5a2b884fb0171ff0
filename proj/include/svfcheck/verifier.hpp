#pragma once

// Grid- and search-based verification of the concavity-type inclusion
// properties of set-valued functions under harmonic m-combinations:
// plain/midpoint/strong variants, the fixed-t-to-midpoint implication,
// the dyadic extension, the epsilon-approximation bridge from dyadic to
// arbitrary parameters, scaling continuity, a seeded falsifier, and the
// closure suite for the five combinators.
//
// Every check reports a signed worst margin (FAIL iff margin > tol), a
// witness, and per-(x,y) worst margins for plotting. Grid evaluation is
// deterministic, including under --jobs parallelism: work is partitioned
// by x-row and merged in row order with lexicographic tie-breaks.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "svfcheck/harmonic.hpp"
#include "svfcheck/report.hpp"
#include "svfcheck/set_algebra.hpp"
#include "svfcheck/svf.hpp"

namespace svfcheck {

enum class Property {
    MConcave,
    MMidconcave,
    StrongMConcave,
    StrongMTConcave,
    StrongMMidconcave,
    Kuhn,
    ChainTToM,
    Dyadic,
    BdApprox,
    ScalingContinuity,
    ClosureSuite,
};

inline const char* property_name(Property p) {
    switch (p) {
        case Property::MConcave: return "m-concave";
        case Property::MMidconcave: return "m-midconcave";
        case Property::StrongMConcave: return "strong-m-concave";
        case Property::StrongMTConcave: return "strong-m-t-concave";
        case Property::StrongMMidconcave: return "strong-m-midconcave";
        case Property::Kuhn: return "kuhn";
        case Property::ChainTToM: return "chain-t-to-m";
        case Property::Dyadic: return "dyadic";
        case Property::BdApprox: return "bd-approx";
        case Property::ScalingContinuity: return "scaling-continuity";
        case Property::ClosureSuite: return "closure-suite";
    }
    return "";
}

inline Property parse_property(const std::string& name) {
    for (Property p : {Property::MConcave, Property::MMidconcave, Property::StrongMConcave,
                       Property::StrongMTConcave, Property::StrongMMidconcave, Property::Kuhn,
                       Property::ChainTToM, Property::Dyadic, Property::BdApprox,
                       Property::ScalingContinuity, Property::ClosureSuite})
        if (name == property_name(p)) return p;
    throw std::invalid_argument("unknown property '" + name + "'");
}

namespace detail {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Deterministic grid sweep. The kernel gets grid indices and returns the
// signed margin, std::nullopt to skip, or throws to abort with ERROR.
template <typename Kernel>
CheckReport sweep_grid(const std::vector<double>& xs, const std::vector<double>& ys,
                       const std::vector<double>& ts, double tol, int jobs, Kernel&& kernel) {
    struct RowResult {
        std::vector<double> pair_worst;
        double worst = kNegInf;
        int jw = -1, kw = -1;
        long evaluated = 0, skipped = 0, violations = 0;
        bool has_error = false;
        int je = 0, ke = 0;
        std::string error;
    };
    const int rows = static_cast<int>(xs.size());
    std::vector<RowResult> results(static_cast<std::size_t>(rows));

    auto run_row = [&](int i) {
        RowResult& row = results[static_cast<std::size_t>(i)];
        row.pair_worst.assign(ys.size(), kNegInf);
        for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
            for (int k = 0; k < static_cast<int>(ts.size()); ++k) {
                std::optional<double> margin;
                try {
                    margin = kernel(i, j, k);
                } catch (const std::exception& e) {
                    row.has_error = true;
                    row.je = j;
                    row.ke = k;
                    row.error = e.what();
                    return;
                }
                if (!margin) {
                    ++row.skipped;
                    continue;
                }
                ++row.evaluated;
                if (*margin > tol) ++row.violations;
                auto& pw = row.pair_worst[static_cast<std::size_t>(j)];
                pw = std::max(pw, *margin);
                if (*margin > row.worst) {
                    row.worst = *margin;
                    row.jw = j;
                    row.kw = k;
                }
            }
        }
    };

    const int workers = std::min(jobs, rows);
    if (workers <= 1) {
        for (int i = 0; i < rows; ++i) run_row(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < rows; i = next.fetch_add(1)) run_row(i);
            });
        for (auto& th : pool) th.join();
    }

    CheckReport rep;
    rep.stats.grid = GridSpec{rows, static_cast<int>(ys.size()), static_cast<int>(ts.size())};
    rep.worst_margin = kNegInf;
    int iw = -1;
    for (int i = 0; i < rows; ++i) {
        const RowResult& row = results[static_cast<std::size_t>(i)];
        rep.stats.evaluated += row.evaluated;
        rep.stats.skipped += row.skipped;
        rep.stats.violations += row.violations;
        if (row.has_error && rep.verdict != Verdict::Error) {
            rep.verdict = Verdict::Error;
            rep.witness = Witness{xs[static_cast<std::size_t>(i)],
                                  ys[static_cast<std::size_t>(row.je)],
                                  ts[static_cast<std::size_t>(row.ke)], row.error};
        }
        if (row.worst > rep.worst_margin) {
            rep.worst_margin = row.worst;
            iw = i;
        }
    }
    if (rep.verdict == Verdict::Error) return rep;
    if (rep.stats.evaluated == 0) {
        rep.verdict = Verdict::Error;
        rep.witness = Witness{0, 0, 0, "no in-domain grid samples"};
        return rep;
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
            const double pw = results[static_cast<std::size_t>(i)].pair_worst[static_cast<std::size_t>(j)];
            if (pw > kNegInf)
                rep.margins.push_back(PlotPoint{xs[static_cast<std::size_t>(i)],
                                                ys[static_cast<std::size_t>(j)], pw});
        }
    if (rep.worst_margin > tol) {
        rep.verdict = Verdict::Fail;
        const RowResult& row = results[static_cast<std::size_t>(iw)];
        rep.witness = Witness{xs[static_cast<std::size_t>(iw)],
                              ys[static_cast<std::size_t>(row.jw)],
                              ts[static_cast<std::size_t>(row.kw)], ""};
    } else {
        rep.verdict = Verdict::Pass;
    }
    return rep;
}

inline std::vector<SetValue> cache_values(const SetValuedFunction& F,
                                          const std::vector<double>& xs) {
    std::vector<SetValue> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(F.eval(x));
    return out;
}

inline double sq(double v) { return v * v; }

// Margin of F(h_m) + c*m*t*(1-t)*((x-y)/(xy))^2 * B  ⊆  t F(y) + m(1-t) F(x)
// + eps*B, with F(x), F(y) supplied by the caller; nullopt when h_m leaves
// the domain. Follows the is_subset_eps convention: margin = raw - eps.
inline std::optional<double> strong_margin(const SetValuedFunction& F, const SetValue& fx,
                                           const SetValue& fy, double x, double y, double t,
                                           double m, double c, double eps = 0.0) {
    const double h = harmonic_m_point(x, y, t, m);
    if (!F.domain_contains(h)) return std::nullopt;
    const SetValue lhs = inflate(F.eval(h), c * m * t * (1 - t) * sq((x - y) / (x * y)));
    const SetValue rhs = mink_sum(scale(t, fy), scale(m * (1 - t), fx));
    return subset_margin(lhs, rhs) - eps;
}

inline std::string inclusion_detail(const SetValuedFunction& F, double x, double y, double t,
                                    double m, double c) {
    const double h = harmonic_m_point(x, y, t, m);
    std::string out = "h=" + fmt_double(h);
    try {
        const SetValue lhs = inflate(F.eval(h), c * m * t * (1 - t) * sq((x - y) / (x * y)));
        const SetValue rhs =
            mink_sum(scale(t, F.eval(y)), scale(m * (1 - t), F.eval(x)));
        if (const auto* li = std::get_if<Interval>(&lhs))
            out += " lhs=[" + fmt_double(li->lo) + "," + fmt_double(li->hi) + "]";
        if (const auto* ri = std::get_if<Interval>(&rhs))
            out += " rhs=[" + fmt_double(ri->lo) + "," + fmt_double(ri->hi) + "]";
    } catch (const std::exception&) {
        // detail is best-effort
    }
    return out;
}

// Shared driver: sweep the inclusion margin over xs × ys × ts.
inline CheckReport inclusion_check(const SetValuedFunction& F, const CheckConfig& cfg,
                                   const std::vector<double>& ts, double c) {
    cfg.validate();
    const auto xs = log_spaced(F.domain().lo, F.domain().hi, cfg.grid.nx);
    const auto ys = log_spaced(F.domain().lo, F.domain().hi, cfg.grid.ny);
    std::vector<SetValue> fx, fy;
    try {
        fx = cache_values(F, xs);
        fy = cache_values(F, ys);
    } catch (const std::exception& e) {
        CheckReport rep;
        rep.stats.grid = cfg.grid;
        rep.verdict = Verdict::Error;
        rep.witness = Witness{0, 0, 0, std::string("evaluating F on the grid: ") + e.what()};
        return rep;
    }
    CheckReport rep = sweep_grid(xs, ys, ts, cfg.tol, cfg.jobs, [&](int i, int j, int k) {
        return strong_margin(F, fx[static_cast<std::size_t>(i)], fy[static_cast<std::size_t>(j)],
                             xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)],
                             ts[static_cast<std::size_t>(k)], cfg.m, c, cfg.eps);
    });
    if (rep.verdict == Verdict::Fail && rep.witness)
        rep.witness->detail = inclusion_detail(F, rep.witness->x, rep.witness->y, rep.witness->t,
                                               cfg.m, c);
    // Domain pre-check: skipped combinations indicate the sampled domain is
    // not harmonically m-convex. Recorded informationally.
    if (rep.stats.skipped > 0 && rep.verdict != Verdict::Error) {
        CheckReport dom = is_harmonically_m_convex_domain(PositiveDomain::closed(F.domain()),
                                                          cfg.m, cfg.grid, cfg.tol);
        LinkResult link;
        link.name = "domain-m-convex";
        link.verdict = dom.verdict;
        link.margin = dom.worst_margin;
        link.informational = true;
        link.detail = "out-of-domain combinations are skipped and counted in stats";
        rep.links.insert(rep.links.begin(), link);
    }
    return rep;
}

}  // namespace detail

inline CheckReport check_m_concave(const SetValuedFunction& F, const CheckConfig& cfg) {
    return detail::inclusion_check(F, cfg, lin_spaced(0.0, 1.0, cfg.grid.nt), 0.0);
}

inline CheckReport check_m_midconcave(const SetValuedFunction& F, const CheckConfig& cfg) {
    return detail::inclusion_check(F, cfg, {0.5}, 0.0);
}

inline CheckReport check_strong_m_t_concave(const SetValuedFunction& F, const CheckConfig& cfg) {
    if (!cfg.t_fixed)
        throw std::invalid_argument("config: t required for strong-m-t-concave");
    return detail::inclusion_check(F, cfg, {*cfg.t_fixed}, cfg.c);
}

inline CheckReport check_strong_m_concave(const SetValuedFunction& F, const CheckConfig& cfg) {
    return detail::inclusion_check(F, cfg, lin_spaced(0.0, 1.0, cfg.grid.nt), cfg.c);
}

inline CheckReport check_strong_m_midconcave(const SetValuedFunction& F, const CheckConfig& cfg) {
    return detail::inclusion_check(F, cfg, {0.5}, cfg.c);
}

// Interior dyadics k/2^n (k odd) for n = 1..depth, each value once, in
// (n, k) order; depth 1 reproduces the midpoint check bit for bit.
inline std::vector<double> interior_dyadics(int depth) {
    std::vector<double> out;
    for (int n = 1; n <= depth; ++n)
        for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); k += 2)
            out.push_back(dyadic_value(DyadicRational(k, static_cast<unsigned>(n))));
    return out;
}

inline CheckReport check_dyadic(const SetValuedFunction& F, const CheckConfig& cfg) {
    return detail::inclusion_check(F, cfg, interior_dyadics(cfg.dyadic_depth), cfg.c);
}

// Fixed-t strong concavity implies midpoint strong concavity; the premise
// failing makes the implication vacuous.
inline CheckReport check_kuhn(const SetValuedFunction& F, const CheckConfig& cfg) {
    if (!cfg.t_fixed)
        throw std::invalid_argument("config: t required for kuhn");
    CheckReport premise = check_strong_m_t_concave(F, cfg);
    CheckReport rep;
    rep.stats = premise.stats;
    LinkResult plink{"premise-fixed-t", premise.verdict, premise.worst_margin, premise.witness,
                     false, "strong m-t-concavity at t = " + fmt_double(*cfg.t_fixed)};
    rep.links.push_back(plink);
    if (premise.verdict == Verdict::Error) {
        rep.verdict = Verdict::Error;
        rep.witness = premise.witness;
        rep.worst_margin = premise.worst_margin;
        return rep;
    }
    if (premise.verdict == Verdict::Fail) {
        rep.verdict = Verdict::Pass;  // implication holds vacuously
        rep.worst_margin = 0;
        rep.witness = premise.witness;
        if (rep.witness) rep.witness->detail += " (premise fails; implication vacuous)";
        rep.margins = std::move(premise.margins);
        return rep;
    }
    CheckReport conclusion = check_strong_m_midconcave(F, cfg);
    rep.links.push_back(LinkResult{"conclusion-midpoint", conclusion.verdict,
                                   conclusion.worst_margin, conclusion.witness, false,
                                   "strong m-midconcavity"});
    rep.verdict = conclusion.verdict;
    rep.worst_margin = conclusion.worst_margin;
    rep.witness = conclusion.witness;
    rep.stats = conclusion.stats;
    rep.margins = std::move(conclusion.margins);
    return rep;
}

// The fixed-t-to-m chain, measured link by link; nothing is asserted about
// the end-to-end claim beyond what the grid shows.
//   L1 : F(h_m) + c m t(1-t) r^2 B  ⊆  F(h_1) + c t(1-t) r^2 B
//   L2 : F(h_1) + c t(1-t) r^2 B    ⊆  t F(y) + (1-t) F(x)
//   L3 : t F(y) + (1-t) F(x)        ⊆  t F(y) + m (1-t) F(x)
//   L3p: F(x)                       ⊆  m F(x)
//   E  : F(h_m) + c m t(1-t) r^2 B  ⊆  t F(y) + m (1-t) F(x)
inline CheckReport check_chain_t_to_m(const SetValuedFunction& F, const CheckConfig& cfg) {
    if (!cfg.t_fixed)
        throw std::invalid_argument("config: t required for chain-t-to-m");
    cfg.validate();
    const double t = *cfg.t_fixed;
    const double m = cfg.m;
    const double c = cfg.c;
    const Interval dom = F.domain();
    const auto xs = log_spaced(dom.lo, dom.hi, cfg.grid.nx);
    const auto ys = log_spaced(dom.lo, dom.hi, cfg.grid.ny);
    const std::vector<double> tlist = {t};
    std::vector<SetValue> fx, fy;
    CheckReport rep;
    try {
        fx = detail::cache_values(F, xs);
        fy = detail::cache_values(F, ys);
    } catch (const std::exception& e) {
        rep.stats.grid = cfg.grid;
        rep.verdict = Verdict::Error;
        rep.witness = Witness{0, 0, 0, std::string("evaluating F on the grid: ") + e.what()};
        return rep;
    }

    auto radius = [&](double x, double y) { return c * t * (1 - t) * detail::sq((x - y) / (x * y)); };
    auto sweep_link = [&](const char* name, auto&& kernel, const char* note) {
        CheckReport sub = detail::sweep_grid(xs, ys, tlist, cfg.tol, cfg.jobs, kernel);
        rep.links.push_back(LinkResult{name, sub.verdict, sub.worst_margin, sub.witness, false,
                                       note});
        return sub;
    };

    sweep_link("L1", [&](int i, int j, int) -> std::optional<double> {
        const double x = xs[static_cast<std::size_t>(i)], y = ys[static_cast<std::size_t>(j)];
        const double h_m = harmonic_m_point(x, y, t, m);
        const double h_1 = harmonic_point(x, y, t);
        if (!F.domain_contains(h_m) || !F.domain_contains(h_1)) return std::nullopt;
        const double r = radius(x, y);
        return subset_margin(inflate(F.eval(h_m), m * r), inflate(F.eval(h_1), r)) - cfg.eps;
    }, "F(h_m) + m r B in F(h_1) + r B");

    sweep_link("L2", [&](int i, int j, int) -> std::optional<double> {
        const double x = xs[static_cast<std::size_t>(i)], y = ys[static_cast<std::size_t>(j)];
        const double h_1 = harmonic_point(x, y, t);
        if (!F.domain_contains(h_1)) return std::nullopt;
        const SetValue rhs = mink_sum(scale(t, fy[static_cast<std::size_t>(j)]),
                                      scale(1 - t, fx[static_cast<std::size_t>(i)]));
        return subset_margin(inflate(F.eval(h_1), radius(x, y)), rhs) - cfg.eps;
    }, "strong t-concavity at m = 1");

    sweep_link("L3", [&](int i, int j, int) -> std::optional<double> {
        const SetValue lhs = mink_sum(scale(t, fy[static_cast<std::size_t>(j)]),
                                      scale(1 - t, fx[static_cast<std::size_t>(i)]));
        const SetValue rhs = mink_sum(scale(t, fy[static_cast<std::size_t>(j)]),
                                      scale(m * (1 - t), fx[static_cast<std::size_t>(i)]));
        return subset_margin(lhs, rhs) - cfg.eps;
    }, "reweighting the (1-t) term by m");

    {
        // L3p sweeps x only.
        CheckReport sub = detail::sweep_grid(xs, {0.0}, tlist, cfg.tol, cfg.jobs,
                                             [&](int i, int, int) -> std::optional<double> {
                                                 const auto& v = fx[static_cast<std::size_t>(i)];
                                                 return subset_margin(v, scale(m, v)) - cfg.eps;
                                             });
        if (sub.witness) sub.witness->y = 0;
        rep.links.push_back(LinkResult{"L3p", sub.verdict, sub.worst_margin, sub.witness, false,
                                       "the auxiliary claim F(x) in m F(x)"});
    }

    CheckReport end_to_end = sweep_link("E", [&](int i, int j, int) -> std::optional<double> {
        const double x = xs[static_cast<std::size_t>(i)], y = ys[static_cast<std::size_t>(j)];
        return detail::strong_margin(F, fx[static_cast<std::size_t>(i)],
                                     fy[static_cast<std::size_t>(j)], x, y, t, m, c, cfg.eps);
    }, "end to end: strong m-t-concavity");

    rep.verdict = end_to_end.verdict;
    rep.worst_margin = end_to_end.worst_margin;
    rep.witness = end_to_end.witness;
    rep.stats = end_to_end.stats;
    rep.margins = std::move(end_to_end.margins);
    for (const LinkResult& l : rep.links)
        if (l.verdict == Verdict::Error) rep.verdict = Verdict::Error;
    return rep;
}

// Nearest interior dyadic of depth n to t.
inline DyadicRational nearest_dyadic(double t, int n) {
    const double scaled = std::ldexp(t, n);
    std::uint64_t k = static_cast<std::uint64_t>(std::llround(scaled));
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    if (k < 1) k = 1;
    if (k > top) k = top;
    return DyadicRational(k, static_cast<unsigned>(n));
}

// Bernstein-Doetsch style approximation ladder: for each depth n, measure
// the smallest eps(n) for which the target strong inclusion at t_target,
// relaxed by 4 eps(n) B, follows from the dyadic inclusion at the nearest
// depth-n dyadic q via the two 2-eps proof stages
//   stage 1: F(h(t)) + c m t(1-t) r^2 B ⊆ F(h(q)) + c m q(1-q) r^2 B + 2 eps B
//   stage 3: q F(y) + m(1-q) F(x)       ⊆ t F(y) + m(1-t) F(x)       + 2 eps B
// together with the measured dyadic premise at q (recorded per depth).
inline CheckReport check_bd_approx(const SetValuedFunction& F, const CheckConfig& cfg,
                                   double t_target) {
    cfg.validate();
    if (!(t_target > 0 && t_target < 1))
        throw std::invalid_argument("config: t required in (0, 1) for bd-approx");
    const double m = cfg.m;
    const double c = cfg.c;
    const Interval dom = F.domain();
    const auto xs = log_spaced(dom.lo, dom.hi, cfg.grid.nx);
    const auto ys = log_spaced(dom.lo, dom.hi, cfg.grid.ny);
    CheckReport rep;
    rep.stats.grid = GridSpec{cfg.grid.nx, cfg.grid.ny, cfg.dyadic_depth};
    std::vector<SetValue> fx, fy;
    try {
        fx = detail::cache_values(F, xs);
        fy = detail::cache_values(F, ys);
    } catch (const std::exception& e) {
        rep.verdict = Verdict::Error;
        rep.witness = Witness{0, 0, 0, std::string("evaluating F on the grid: ") + e.what()};
        return rep;
    }

    std::vector<double> eps_seq;
    bool premises_ok = true;
    for (int n = 1; n <= cfg.dyadic_depth; ++n) {
        const DyadicRational qr = nearest_dyadic(t_target, n);
        const double q = dyadic_value(qr);
        double eps_n = 0;
        double premise_worst = detail::kNegInf;
        double stage_worst = detail::kNegInf;
        Witness stage_witness;
        long evaluated = 0, skipped = 0;
        try {
            for (std::size_t i = 0; i < xs.size(); ++i) {
                for (std::size_t j = 0; j < ys.size(); ++j) {
                    const double x = xs[i], y = ys[j];
                    const double ht = harmonic_m_point(x, y, t_target, m);
                    const double hq = harmonic_m_point(x, y, q, m);
                    if (!F.domain_contains(ht) || !F.domain_contains(hq)) {
                        ++skipped;
                        continue;
                    }
                    ++evaluated;
                    const double r2 = detail::sq((x - y) / (x * y));
                    const SetValue lhs_t = inflate(F.eval(ht), c * m * t_target * (1 - t_target) * r2);
                    const SetValue lhs_q = inflate(F.eval(hq), c * m * q * (1 - q) * r2);
                    const SetValue rhs_q = mink_sum(scale(q, fy[j]), scale(m * (1 - q), fx[i]));
                    const SetValue rhs_t =
                        mink_sum(scale(t_target, fy[j]), scale(m * (1 - t_target), fx[i]));
                    const double s1 = subset_margin(lhs_t, lhs_q) / 2;
                    const double s3 = subset_margin(rhs_q, rhs_t) / 2;
                    premise_worst =
                        std::max(premise_worst, subset_margin(lhs_q, rhs_q) - cfg.eps);
                    const double stage = std::max(s1, s3);
                    if (stage > stage_worst) {
                        stage_worst = stage;
                        stage_witness = Witness{x, y, t_target,
                                                "q=" + fmt_double(q) + " stage margin"};
                    }
                    eps_n = std::max(eps_n, stage);
                    if (n == cfg.dyadic_depth)
                        rep.margins.push_back(PlotPoint{x, y, std::max(stage, 0.0)});
                }
            }
        } catch (const std::exception& e) {
            rep.verdict = Verdict::Error;
            rep.witness = Witness{0, 0, t_target, e.what()};
            return rep;
        }
        rep.stats.evaluated += evaluated;
        rep.stats.skipped += skipped;
        const bool premise_pass = evaluated > 0 && premise_worst <= cfg.tol;
        if (!premise_pass) premises_ok = false;
        eps_n = std::max(eps_n, 0.0);
        eps_seq.push_back(eps_n);
        LinkResult link;
        link.name = "depth-" + std::to_string(n);
        link.verdict = premise_pass ? Verdict::Pass : Verdict::Fail;
        link.margin = eps_n;
        link.detail = "q=" + fmt_double(dyadic_value(qr)) + " premise_margin=" +
                      fmt_double(premise_worst) + " eps=" + fmt_double(eps_n);
        if (n == cfg.dyadic_depth) link.witness = stage_witness;
        rep.links.push_back(link);
    }

    bool non_increasing = true;
    for (std::size_t n = 1; n < eps_seq.size(); ++n)
        if (eps_seq[n] > eps_seq[n - 1] + cfg.tol) non_increasing = false;
    rep.worst_margin = eps_seq.back();
    rep.verdict = (premises_ok && non_increasing) ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Fail) {
        rep.witness = Witness{0, 0, t_target,
                              premises_ok ? "eps(n) is not non-increasing"
                                          : "dyadic premise fails at some depth"};
    }
    return rep;
}

// d_H(tA, sA) <= |t - s| * max(|A.lo|, |A.hi|) over a (t, s) grid in [-2, 2].
inline CheckReport check_scaling_continuity(const Interval& A, const GridSpec& grid,
                                            double tol = kDefaultTol) {
    CheckReport rep;
    rep.stats.grid = GridSpec{grid.nt, grid.nt, 1};
    rep.worst_margin = detail::kNegInf;
    const auto ts = lin_spaced(-2.0, 2.0, grid.nt);
    const double bound_scale = A.abs_max();
    for (double t : ts) {
        for (double s : ts) {
            const double d = hausdorff(scale(t, A), scale(s, A));
            const double margin = d - std::abs(t - s) * bound_scale;
            ++rep.stats.evaluated;
            if (margin > tol) ++rep.stats.violations;
            if (margin > rep.worst_margin) {
                rep.worst_margin = margin;
                rep.witness = Witness{t, s, 0,
                                      "d_H(tA, sA) = " + fmt_double(d) + " for A=[" +
                                          fmt_double(A.lo) + "," + fmt_double(A.hi) + "]"};
            }
            rep.margins.push_back(PlotPoint{t, s, margin});
        }
    }
    rep.verdict = rep.worst_margin <= tol ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Pass) rep.witness.reset();
    return rep;
}

// CLI lift of the scaling continuity check: applies it to A = F(x) for each
// grid x (interval-valued F only).
inline CheckReport check_scaling_continuity_svf(const SetValuedFunction& F,
                                                const CheckConfig& cfg) {
    cfg.validate();
    CheckReport rep;
    rep.stats.grid = GridSpec{cfg.grid.nx, cfg.grid.nt, cfg.grid.nt};
    rep.worst_margin = detail::kNegInf;
    const auto xs = log_spaced(F.domain().lo, F.domain().hi, cfg.grid.nx);
    for (double x : xs) {
        CheckReport sub;
        try {
            sub = check_scaling_continuity(F.eval_interval(x), cfg.grid, cfg.tol);
        } catch (const std::exception& e) {
            rep.verdict = Verdict::Error;
            rep.witness = Witness{x, 0, 0, e.what()};
            return rep;
        }
        rep.stats.evaluated += sub.stats.evaluated;
        rep.stats.violations += sub.stats.violations;
        if (sub.worst_margin > rep.worst_margin) {
            rep.worst_margin = sub.worst_margin;
            if (sub.witness) {
                rep.witness = sub.witness;
                rep.witness->detail += " at x = " + fmt_double(x);
            } else {
                rep.witness = Witness{x, 0, 0, "worst pair at x"};
            }
        }
        rep.margins.push_back(PlotPoint{x, 0, sub.worst_margin});
    }
    rep.verdict = rep.worst_margin <= cfg.tol ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Pass) rep.witness.reset();
    return rep;
}

namespace detail {

// Uniform doubles in [0, 1) from raw mt19937_64 output; avoids library
// distribution differences so seeded runs reproduce everywhere.
struct SeededUniform {
    std::mt19937_64 rng;
    explicit SeededUniform(std::uint64_t seed) : rng(seed) {}
    double next() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
    double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, next()); }
};

}  // namespace detail

// Seeded random falsification with one local refinement pass on t.
// Sampleable properties: the five pointwise inclusion checks.
inline CheckReport falsify(const SetValuedFunction& F, const CheckConfig& cfg, Property prop) {
    cfg.validate();
    double c = 0;
    std::optional<double> forced_t;
    switch (prop) {
        case Property::MConcave: break;
        case Property::MMidconcave: forced_t = 0.5; break;
        case Property::StrongMConcave: c = cfg.c; break;
        case Property::StrongMTConcave:
            if (!cfg.t_fixed)
                throw std::invalid_argument("config: t required for strong-m-t-concave");
            c = cfg.c;
            forced_t = *cfg.t_fixed;
            break;
        case Property::StrongMMidconcave:
            c = cfg.c;
            forced_t = 0.5;
            break;
        default:
            throw std::invalid_argument(std::string("falsify: property '") +
                                        property_name(prop) + "' is not samplable");
    }
    if (cfg.sample_budget <= 0)
        throw std::invalid_argument("config: budget must be positive for falsify");

    const Interval dom = F.domain();
    detail::SeededUniform rnd(cfg.seed);
    CheckReport rep;
    rep.stats.grid = cfg.grid;
    rep.worst_margin = detail::kNegInf;
    Witness best;

    auto margin_at = [&](double x, double y, double t) -> std::optional<double> {
        return detail::strong_margin(F, F.eval(x), F.eval(y), x, y, t, cfg.m, c, cfg.eps);
    };

    try {
        for (long i = 0; i < cfg.sample_budget; ++i) {
            const double x = rnd.log_uniform(dom.lo, dom.hi);
            const double y = rnd.log_uniform(dom.lo, dom.hi);
            const double t = forced_t ? *forced_t : rnd.next();
            const auto margin = margin_at(x, y, t);
            if (!margin) {
                ++rep.stats.skipped;
                continue;
            }
            ++rep.stats.evaluated;
            if (*margin > cfg.tol) ++rep.stats.violations;
            rep.margins.push_back(PlotPoint{x, y, *margin});
            if (*margin > rep.worst_margin) {
                rep.worst_margin = *margin;
                best = Witness{x, y, t, ""};
            }
        }
        // Local refinement: bisection-style shrink of a t bracket around the
        // worst sample, keeping the best margin seen.
        if (!forced_t && rep.worst_margin > detail::kNegInf) {
            double lo = std::max(0.0, best.t - 0.05);
            double hi = std::min(1.0, best.t + 0.05);
            auto value = [&](double t) {
                const auto m = margin_at(best.x, best.y, t);
                return m ? *m : detail::kNegInf;
            };
            for (int iter = 0; iter < 60; ++iter) {
                const double m1 = lo + (hi - lo) / 3;
                const double m2 = hi - (hi - lo) / 3;
                const double v1 = value(m1);
                const double v2 = value(m2);
                rep.stats.evaluated += 2;
                if (v1 > rep.worst_margin) {
                    rep.worst_margin = v1;
                    best.t = m1;
                }
                if (v2 > rep.worst_margin) {
                    rep.worst_margin = v2;
                    best.t = m2;
                }
                if (v1 < v2) lo = m1; else hi = m2;
            }
        }
    } catch (const std::exception& e) {
        rep.verdict = Verdict::Error;
        rep.witness = Witness{best.x, best.y, best.t, e.what()};
        return rep;
    }

    if (rep.stats.evaluated == 0) {
        rep.verdict = Verdict::Error;
        rep.witness = Witness{0, 0, 0, "no in-domain samples within budget"};
        return rep;
    }
    if (rep.worst_margin > cfg.tol) {
        rep.verdict = Verdict::Fail;
        best.detail = detail::inclusion_detail(F, best.x, best.y, best.t, cfg.m, c);
        rep.witness = best;
    } else {
        rep.verdict = Verdict::Pass;
        best.detail = "worst sample within budget";
        rep.witness = best;
    }
    return rep;
}

// Closure of m-concavity under the five combinators. The premise (F and G
// individually m-concave) is recorded; the product link is informational
// because elementwise interval products only realize one inclusion
// direction of the underlying set identity.
inline CheckReport closure_suite(const SetValuedFunction& F, const SetValuedFunction& G,
                                 const CheckConfig& cfg) {
    cfg.validate();
    CheckReport rep;
    rep.stats.grid = cfg.grid;
    rep.worst_margin = detail::kNegInf;

    auto add_link = [&](const std::string& name, const SetValuedFunction& H, bool informational,
                        std::string extra_detail = "") {
        CheckReport sub = check_m_concave(H, cfg);
        LinkResult link{name, sub.verdict, sub.worst_margin, sub.witness, informational,
                        std::move(extra_detail)};
        rep.links.push_back(link);
        if (!informational) {
            if (sub.verdict == Verdict::Error && rep.verdict != Verdict::Error) {
                rep.verdict = Verdict::Error;
                rep.witness = sub.witness;
            }
            if (sub.worst_margin > rep.worst_margin) {
                rep.worst_margin = sub.worst_margin;
                if (rep.verdict != Verdict::Error) rep.witness = sub.witness;
            }
            if (sub.verdict == Verdict::Fail && rep.verdict == Verdict::Pass)
                rep.verdict = Verdict::Fail;
        }
    };

    add_link("premise-F", F, false);
    add_link("premise-G", G, false);
    add_link("sum", svf_sum(F, G), false);
    for (double lambda : cfg.lambdas)
        add_link("scale:" + fmt_double(lambda), svf_scale(lambda, F), false);

    // Pairwise product precondition fraction on the grid.
    {
        const auto xs = log_spaced(F.domain().lo, F.domain().hi, cfg.grid.nx);
        const auto ys = log_spaced(F.domain().lo, F.domain().hi, cfg.grid.ny);
        long hold = 0, total = 0;
        try {
            for (double x : xs)
                for (double y : ys) {
                    ++total;
                    if (intervals_intersect(F.eval_interval(x), F.eval_interval(y)) ||
                        intervals_intersect(G.eval_interval(x), G.eval_interval(y)))
                        ++hold;
                }
        } catch (const std::exception&) {
            total = 0;
        }
        const double fraction = total > 0 ? double(hold) / double(total) : 0.0;
        add_link("product", svf_product(F, G), true,
                 "precondition_fraction=" + fmt_double(fraction));
    }

    add_link("union", svf_union(F, G), false);
    add_link("cross", svf_cross(F, G), false);

    if (rep.verdict == Verdict::Pass) rep.witness.reset();
    return rep;
}

// Dispatch used by the CLI.
inline CheckReport run_property(Property prop, const SetValuedFunction& F,
                                const SetValuedFunction* G, const CheckConfig& cfg) {
    switch (prop) {
        case Property::MConcave: return check_m_concave(F, cfg);
        case Property::MMidconcave: return check_m_midconcave(F, cfg);
        case Property::StrongMConcave: return check_strong_m_concave(F, cfg);
        case Property::StrongMTConcave: return check_strong_m_t_concave(F, cfg);
        case Property::StrongMMidconcave: return check_strong_m_midconcave(F, cfg);
        case Property::Kuhn: return check_kuhn(F, cfg);
        case Property::ChainTToM: return check_chain_t_to_m(F, cfg);
        case Property::Dyadic: return check_dyadic(F, cfg);
        case Property::BdApprox:
            if (!cfg.t_fixed)
                throw std::invalid_argument("config: t required for bd-approx");
            return check_bd_approx(F, cfg, *cfg.t_fixed);
        case Property::ScalingContinuity: return check_scaling_continuity_svf(F, cfg);
        case Property::ClosureSuite:
            if (!G)
                throw std::invalid_argument("closure-suite needs two --svf arguments");
            return closure_suite(F, *G, cfg);
    }
    throw std::logic_error("run_property: bad property");
}

}  // namespace svfcheck
