// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values come from the brute-force oracles in
// tests/oracles.hpp and are pinned here at their stated tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "svfcheck/cli.hpp"
#include "svfcheck/real_checks.hpp"
#include "svfcheck/verifier.hpp"

#include "../expr_gen.hpp"
#include "../oracles.hpp"

using namespace svfcheck;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

const Interval kDom(0.5, 8);

SetValuedFunction box_x(const Interval& dom = kDom) {
    return SetValuedFunction::box_family(parse_expr("x"), dom);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool rel_eq(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// ---- criteria -------------------------------------------------------------

// Set algebra laws on 1e4 seeded random triples, 1e-12 relative agreement.
void criterion_1() {
    test_oracle::Rng rng(101);
    for (int i = 0; i < 10000; ++i) {
        auto [al, ah] = rng.interval(-10, 10);
        auto [bl, bh] = rng.interval(-10, 10);
        auto [cl, ch] = rng.interval(-10, 10);
        const Interval a(al, ah), b(bl, bh), c(cl, ch);

        require(mink_sum(a, b) == mink_sum(b, a), "sum commutativity");
        const Interval s1 = mink_sum(mink_sum(a, b), c);
        const Interval s2 = mink_sum(a, mink_sum(b, c));
        require(rel_eq(s1.lo, s2.lo, 1e-12) && rel_eq(s1.hi, s2.hi, 1e-12),
                "sum associativity");

        const double lambda = rng.uniform(-4, 4);
        const Interval d1 = scale(lambda, mink_sum(a, b));
        const Interval d2 = mink_sum(scale(lambda, a), scale(lambda, b));
        require(rel_eq(d1.lo, d2.lo, 1e-12) && rel_eq(d1.hi, d2.hi, 1e-12),
                "scale distributivity");

        require(subset_margin(mink_product(a, mink_sum(b, c)),
                              mink_sum(mink_product(a, b), mink_product(a, c))) <= 1e-9,
                "product subdistributivity");

        const Interval aw(a.lo - rng.next(), a.hi + rng.next());
        const Interval bw(b.lo - rng.next(), b.hi + rng.next());
        require(subset_margin(mink_sum(a, b), mink_sum(aw, bw)) <= 0 &&
                    subset_margin(mink_product(a, b), mink_product(aw, bw)) <= 0,
                "inclusion monotonicity");
    }
}

// Radstrom cancellation: consistent on 1e4 random triples, no exceptions.
void criterion_2() {
    test_oracle::Rng rng(202);
    for (int i = 0; i < 10000; ++i) {
        auto [al, ah] = rng.interval(-10, 10);
        auto [bl, bh] = rng.interval(-10, 10);
        auto [cl, ch] = rng.interval(-10, 10);
        const auto r = radstrom_check(Interval(al, ah), Interval(bl, bh), Interval(cl, ch));
        require(r.consistent, "cancellation law violated");
    }
}

// Harmonic endpoints exact to 1e-12; h_m <= h_1 on a 65x65x33 grid.
void criterion_3() {
    test_oracle::Rng rng(303);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(0.1, 10);
        const double y = rng.uniform(0.1, 10);
        const double m = rng.uniform(0.05, 1.0);
        require(rel_eq(harmonic_m_point(x, y, 0, m), m * x, 1e-12), "t = 0 endpoint");
        require(rel_eq(harmonic_m_point(x, y, 1, m), y, 1e-12), "t = 1 endpoint");
    }
    const auto xs = log_spaced(0.1, 10, 65);
    const auto ts = lin_spaced(0, 1, 33);
    long violations = 0;
    for (double m : {0.1, 0.5, 0.9})
        for (double x : xs)
            for (double y : xs)
                for (double t : ts)
                    if (harmonic_m_point(x, y, t, m) >
                        harmonic_m_point(x, y, t, 1.0) + 1e-12 * (x + y))
                        ++violations;
    require(violations == 0, "h_m exceeded h_1 " + std::to_string(violations) + " times");
}

// Positive control: box(x) is m-concave for every m in {0.1, ..., 1.0}.
void criterion_4() {
    const Interval dom(0.1, 10);
    const auto F = box_x(dom);
    for (int k = 1; k <= 10; ++k) {
        const double m = k / 10.0;
        CheckConfig cfg;
        cfg.m = m;
        cfg.grid = GridSpec{50, 50, 21};
        cfg.tol = 1e-9;
        const auto rep = check_m_concave(F, cfg);
        require(rep.verdict == Verdict::Pass, "m = " + fmt_double(m) + " did not pass");
        require(rep.stats.violations == 0, "violations at m = " + fmt_double(m));

        // independent oracle route over the same grid
        const auto oracle = test_oracle::strong_inclusion_sweep(
            [](double) { return 0.0; }, [](double v) { return v; }, dom.lo, dom.hi, 50, 50,
            test_oracle::lin_grid(0, 1, 21), m, 0.0, 1e-9);
        require(oracle.violations == 0, "oracle found violations at m = " + fmt_double(m));

        // scalar confirmation
        require(real_am_convex_check(parse_expr("x"), dom, 1.0, m, cfg.grid).verdict ==
                    Verdict::Pass,
                "scalar oracle disagrees at m = " + fmt_double(m));
    }
}

// Negative control: constant [0, 1] fails at m = 0.5 and the falsifier
// finds a witness with margin >= 0.2 within 1000 samples.
void criterion_5() {
    const auto F = SetValuedFunction::box_family(parse_expr("1"), kDom);
    CheckConfig cfg;
    cfg.m = 0.5;
    require(check_m_concave(F, cfg).verdict == Verdict::Fail, "constant family passed");

    cfg.sample_budget = 1000;
    cfg.seed = 1;
    const auto found = falsify(F, cfg, Property::MConcave);
    require(found.verdict == Verdict::Fail, "falsify found nothing in budget");
    require(found.worst_margin >= 0.2, "found margin below 0.2");
    // the t = 1/2 cut alone already demands 1 <= 0.75
    const auto mid = check_m_midconcave(F, cfg);
    require(mid.worst_margin >= 0.25 - 1e-12, "midpoint margin below 0.25");
}

// Strong modulus identity family [-1/x^2, 1/x^2]: equality at c = 1,
// failure just above, monotone margins below.
void criterion_6() {
    const auto F = SetValuedFunction::symmetric_family(parse_expr("1/x^2"), kDom);
    CheckConfig cfg;
    cfg.m = 1.0;
    cfg.c = 1.0;
    const auto exact = check_strong_m_concave(F, cfg);
    require(exact.verdict == Verdict::Pass, "c = 1 did not pass");
    require(std::abs(exact.worst_margin) <= 1e-9, "c = 1 margin above 1e-9");

    cfg.c = 1.0 + 1e-3;
    require(check_strong_m_concave(F, cfg).verdict == Verdict::Fail, "c = 1.001 passed");

    double prev = -1e300;
    for (double c : {0.0, 0.25, 0.5, 1.0}) {
        cfg.c = c;
        const auto rep = check_strong_m_concave(F, cfg);
        require(rep.verdict == Verdict::Pass, "monotone sweep failed at c = " + fmt_double(c));
        require(rep.worst_margin >= prev, "margins not monotone in c");
        prev = rep.worst_margin;
    }
}

// Closure suite: gated links pass for m in {0.5, 1}; the product link is
// recorded and stable across seeds.
void criterion_7() {
    for (double m : {0.5, 1.0}) {
        CheckConfig cfg;
        cfg.m = m;
        cfg.seed = 1;
        const auto rep = closure_suite(box_x(), box_x(), cfg);
        require(rep.verdict == Verdict::Pass, "closure suite failed at m = " + fmt_double(m));
        std::string product_verdict;
        for (const auto& link : rep.links) {
            if (link.name == "product") {
                product_verdict = to_string(link.verdict);
                continue;
            }
            require(link.verdict == Verdict::Pass,
                    "link " + link.name + " failed at m = " + fmt_double(m));
            require(link.margin <= cfg.tol, "link " + link.name + " margin above tol");
        }
        require(!product_verdict.empty(), "product link missing");

        cfg.seed = 99;  // seeds must not affect the measured product verdict
        const auto rep2 = closure_suite(box_x(), box_x(), cfg);
        for (const auto& link : rep2.links)
            if (link.name == "product")
                require(to_string(link.verdict) == product_verdict,
                        "product verdict changed across seeds");
    }
}

// Dyadic lemma at depth 8 over a 50x50 grid in under 30 s, with depth-1
// margins bit-identical to the strong midpoint check.
void criterion_8() {
    const auto start = std::chrono::steady_clock::now();
    CheckConfig cfg;
    cfg.m = 0.5;
    cfg.c = 0.0;
    cfg.grid = GridSpec{50, 50, 21};
    cfg.dyadic_depth = 8;
    const auto F = box_x();
    const auto rep = check_dyadic(F, cfg);
    require(rep.verdict == Verdict::Pass, "dyadic sweep failed");
    require(rep.stats.violations == 0, "dyadic sweep had violations");
    require(rep.stats.grid.nt == 255, "expected 255 interior dyadics");

    CheckConfig d1 = cfg;
    d1.dyadic_depth = 1;
    const auto depth1 = check_dyadic(F, d1);
    const auto mid = check_strong_m_midconcave(F, d1);
    require(depth1.margins.size() == mid.margins.size(), "margin grids differ");
    for (std::size_t i = 0; i < depth1.margins.size(); ++i)
        require(std::memcmp(&depth1.margins[i], &mid.margins[i], sizeof(PlotPoint)) == 0,
                "depth-1 margins not bit-identical");
    require(std::memcmp(&depth1.worst_margin, &mid.worst_margin, sizeof(double)) == 0,
            "worst margins not bit-identical");

    const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - start);
    require(elapsed.count() < 30, "runtime exceeded 30 s");
}

// Chain instrument: the auxiliary claim fails while the end-to-end
// inclusion passes, demonstrating independent link measurement.
void criterion_9() {
    CheckConfig cfg;
    cfg.m = 0.5;
    cfg.c = 0.0;
    cfg.t_fixed = 0.5;
    const auto F = box_x();
    const auto rep = check_chain_t_to_m(F, cfg);
    const LinkResult* l3p = nullptr;
    const LinkResult* end_to_end = nullptr;
    for (const auto& link : rep.links) {
        if (link.name == "L3p") l3p = &link;
        if (link.name == "E") end_to_end = &link;
    }
    require(l3p && end_to_end, "chain links missing");
    require(l3p->verdict == Verdict::Fail, "L3p unexpectedly holds");
    require(l3p->witness.has_value(), "L3p has no witness");
    const Interval at_witness = std::get<Interval>(F.eval(l3p->witness->x));
    require(at_witness.hi > 0, "L3p witness has no positive upper bound");
    require(end_to_end->verdict == Verdict::Pass, "end-to-end link failed");
}

// Bernstein-Doetsch approximation ladder: eps(n) non-increasing with
// eps(8) < 1e-2 at t = 1/3; a dyadic target collapses at depth 1.
void criterion_10() {
    CheckConfig cfg;
    cfg.m = 1.0;
    cfg.c = 0.0;
    cfg.dyadic_depth = 8;
    const auto F = box_x();
    const auto rep = check_bd_approx(F, cfg, 1.0 / 3.0);
    require(rep.verdict == Verdict::Pass, "ladder failed");
    require(rep.links.size() == 8, "expected 8 depths");
    for (std::size_t n = 1; n < rep.links.size(); ++n)
        require(rep.links[n].margin <= rep.links[n - 1].margin + cfg.tol,
                "eps(n) increased at n = " + std::to_string(n + 1));
    require(rep.links.back().margin < 1e-2, "eps(8) not below 1e-2");

    const auto exact = check_bd_approx(F, cfg, 0.5);
    require(exact.links.front().margin <= cfg.tol, "eps(1) above tol for dyadic target");
}

// Scaling continuity: Lipschitz bound on 1e4 random triples plus the
// stated equality witness.
void criterion_11() {
    test_oracle::Rng rng(1111);
    for (int i = 0; i < 10000; ++i) {
        auto [lo, hi] = rng.interval(-10, 10);
        const Interval a(lo, hi);
        const double t = rng.uniform(-3, 3);
        const double s = rng.uniform(-3, 3);
        require(hausdorff(scale(t, a), scale(s, a)) <=
                    std::abs(t - s) * a.abs_max() + 1e-12,
                "Lipschitz bound violated");
    }
    const Interval a(-2, 3);
    const double d = hausdorff(scale(1.0, a), scale(0.5, a));
    require(d == 1.5, "equality witness is not 1.5");
    require(d == 0.5 * a.abs_max(), "witness does not achieve the bound");
}

// Suite determinism: identical config and seed give byte-identical JSON.
void criterion_12() {
    namespace fs = std::filesystem;
    const auto a = fs::temp_directory_path() / "svfcheck_acc_suite_a.json";
    const auto b = fs::temp_directory_path() / "svfcheck_acc_suite_b.json";
    {
        // keep the per-entry progress chatter out of the criterion lines
        std::ostringstream sink;
        auto* old = std::cerr.rdbuf(sink.rdbuf());
        const int ra = cli::run_cli({"suite", "--seed", "42", "--out", a.string()});
        const int rb = cli::run_cli({"suite", "--seed", "42", "--out", b.string()});
        std::cerr.rdbuf(old);
        require(ra == 0, "first suite run failed");
        require(rb == 0, "second suite run failed");
    }
    const std::string ja = slurp(a), jb = slurp(b);
    require(!ja.empty() && ja == jb, "suite reports differ");

    // the installed binary, when available, must agree byte for byte
    if (const char* bin = std::getenv("SVFCHECK_BIN")) {
        const auto c = fs::temp_directory_path() / "svfcheck_acc_suite_c.json";
        const std::string cmd = std::string("\"") + bin + "\" suite --seed 42 --out " +
                                c.string() + " 2>/dev/null";
        require(std::system(cmd.c_str()) == 0, "binary suite run failed");
        require(slurp(c) == ja, "binary output differs from in-process output");
        fs::remove(c);
    }
    fs::remove(a);
    fs::remove(b);
}

// Parser: 100 seeded random expressions round-trip and evaluate within
// 1e-12 relative; 10 malformed inputs produce positioned syntax errors.
void criterion_13() {
    test_oracle::Rng rng(1313);
    for (int i = 0; i < 100; ++i) {
        const BoundExpr e = test_expr::next_valid_expr(rng);
        const std::string printed = e.str();
        const BoundExpr back = parse_expr(printed);
        require(back.str() == printed, "print -> parse -> print not a fixed point");
        for (double x : test_expr::probe_points())
            require(rel_eq(e.eval(x), back.eval(x), 1e-12), "round-trip eval mismatch");
    }
    const char* malformed[] = {"",     "1/(x", "x +",  "(",    ")x",
                               "1.2.3", "foo(2)", "log(", "2**x", "x 2"};
    for (const char* text : malformed) {
        bool threw = false;
        try {
            parse_expr(text);
        } catch (const ParseError& e) {
            threw = true;
            require(e.pos <= std::strlen(text), "error position out of range");
        }
        require(threw, std::string("no positioned error for: ") + text);
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "set algebra laws on 1e4 random triples", criterion_1},
        {2, "Radstrom cancellation on 1e4 random triples", criterion_2},
        {3, "harmonic endpoints and h_m <= h_1 on the 65x65x33 grid", criterion_3},
        {4, "positive control: box(x) m-concave for all m in {0.1..1.0}", criterion_4},
        {5, "negative control: constant [0,1] fails and is falsified", criterion_5},
        {6, "strong modulus identity family at c = 1", criterion_6},
        {7, "closure suite links with recorded product verdict", criterion_7},
        {8, "dyadic lemma depth 8 and bit-identical depth 1", criterion_8},
        {9, "chain instrument: L3p fails while E passes", criterion_9},
        {10, "Bernstein-Doetsch approximation ladder", criterion_10},
        {11, "scaling continuity bound and equality witness", criterion_11},
        {12, "byte-identical suite reports for identical config and seed", criterion_12},
        {13, "parser round-trips and positioned syntax errors", criterion_13},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = true;
        try {
            c.run();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        if (ok) {
            std::printf("[PASS] criterion %2d: %s\n", c.id, c.what);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s -- %s\n", c.id, c.what, note.c_str());
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
