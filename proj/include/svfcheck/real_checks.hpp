#pragma once

// Real-function concavity/convexity grid checks used as scalar ground
// truth for the set-valued verifier.

#include <optional>

#include "svfcheck/expr.hpp"
#include "svfcheck/harmonic.hpp"
#include "svfcheck/report.hpp"

namespace svfcheck {

namespace detail {

template <typename Kernel>
CheckReport scalar_grid_check(const Interval& domain, const GridSpec& grid, double tol,
                              Kernel&& kernel) {
    CheckReport rep;
    rep.stats.grid = grid;
    rep.worst_margin = -std::numeric_limits<double>::infinity();
    const auto xs = log_spaced(domain.lo, domain.hi, grid.nx);
    const auto ys = log_spaced(domain.lo, domain.hi, grid.ny);
    const auto ts = lin_spaced(0.0, 1.0, grid.nt);
    for (double x : xs) {
        for (double y : ys) {
            double pair_worst = -std::numeric_limits<double>::infinity();
            for (double t : ts) {
                std::optional<double> margin;
                try {
                    margin = kernel(x, y, t);
                } catch (const std::exception& e) {
                    rep.verdict = Verdict::Error;
                    rep.witness = Witness{x, y, t, e.what()};
                    return rep;
                }
                if (!margin) {
                    ++rep.stats.skipped;
                    continue;
                }
                ++rep.stats.evaluated;
                if (*margin > tol) ++rep.stats.violations;
                pair_worst = std::max(pair_worst, *margin);
                if (*margin > rep.worst_margin) {
                    rep.worst_margin = *margin;
                    rep.witness = Witness{x, y, t, ""};
                }
            }
            if (pair_worst > -std::numeric_limits<double>::infinity())
                rep.margins.push_back(PlotPoint{x, y, pair_worst});
        }
    }
    if (rep.stats.evaluated == 0) {
        rep.verdict = Verdict::Error;
        rep.witness = Witness{0, 0, 0, "no in-domain grid samples"};
        return rep;
    }
    rep.verdict = rep.worst_margin <= tol ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Pass) rep.witness.reset();
    return rep;
}

}  // namespace detail

// f(mxy/(tmx+(1-t)y)) <= t^alpha f(y) + m (1 - t^alpha) f(x).
// Margin is lhs - rhs; combinations leaving the domain are skipped.
inline CheckReport real_am_convex_check(const BoundExpr& f, const Interval& domain, double alpha,
                                        double m, const GridSpec& grid,
                                        double tol = kDefaultTol) {
    if (!(alpha >= 0 && alpha <= 1))
        throw std::invalid_argument("real_am_convex_check: alpha must be in [0, 1]");
    if (!(m > 0 && m <= 1))
        throw std::invalid_argument("real_am_convex_check: m must be in (0, 1]");
    return detail::scalar_grid_check(
        domain, grid, tol, [&](double x, double y, double t) -> std::optional<double> {
            const double h = harmonic_m_point(x, y, t, m);
            if (!domain.contains(h)) return std::nullopt;
            const double ta = std::pow(t, alpha);
            return f.eval(h) - (ta * f.eval(y) + m * (1 - ta) * f.eval(x));
        });
}

// f(xy/(tx+(1-t)y)) <= t f(y) + (1-t) f(x) - c t (1-t) ((x-y)/(xy))^2.
inline CheckReport real_strong_convex_check(const BoundExpr& f, const Interval& domain, double c,
                                            const GridSpec& grid, double tol = kDefaultTol) {
    if (!(c >= 0))
        throw std::invalid_argument("real_strong_convex_check: c must be nonnegative");
    return detail::scalar_grid_check(
        domain, grid, tol, [&](double x, double y, double t) -> std::optional<double> {
            const double h = harmonic_point(x, y, t);
            if (!domain.contains(h)) return std::nullopt;
            const double d = (x - y) / (x * y);
            return f.eval(h) - (t * f.eval(y) + (1 - t) * f.eval(x) - c * t * (1 - t) * d * d);
        });
}

}  // namespace svfcheck
