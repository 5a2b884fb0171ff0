#pragma once

// Random expression generator for the parser round-trip tests. Produces
// ASTs through the public builders only (nonnegative literals; negation is
// an explicit node) and rejects candidates that do not evaluate to finite
// values on the probe points, so every emitted expression is usable.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "svfcheck/expr.hpp"
#include "oracles.hpp"

namespace test_expr {

inline svfcheck::BoundExpr random_expr(test_oracle::Rng& rng, int depth) {
    using svfcheck::BoundExpr;
    const double roll = rng.next();
    if (depth <= 0 || roll < 0.25) {
        if (rng.next() < 0.5) return BoundExpr::variable();
        const double pick = rng.next();
        if (pick < 0.4) return BoundExpr::number(double(1 + int(rng.next() * 9)));
        return BoundExpr::number(std::round(rng.next() * 1000) / 100.0);
    }
    if (roll < 0.40) return BoundExpr::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    if (roll < 0.55) return BoundExpr::sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    if (roll < 0.70) return BoundExpr::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    if (roll < 0.80) return BoundExpr::div(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    if (roll < 0.88) return BoundExpr::neg(random_expr(rng, depth - 1));
    if (roll < 0.94)
        return BoundExpr::pow(random_expr(rng, depth - 1),
                              BoundExpr::number(double(1 + int(rng.next() * 3))));
    if (roll < 0.97) return BoundExpr::exp(BoundExpr::mul(BoundExpr::number(std::round(rng.next() * 20) / 10.0),
                                                          BoundExpr::variable()));
    return BoundExpr::log(BoundExpr::add(BoundExpr::number(1), random_expr(rng, depth - 1)));
}

inline const std::vector<double>& probe_points() {
    static const std::vector<double> xs = {0.5, 0.9, 1.3, 2.0, 3.1};
    return xs;
}

// Next generated expression that evaluates to finite values at all probes.
inline svfcheck::BoundExpr next_valid_expr(test_oracle::Rng& rng) {
    for (;;) {
        svfcheck::BoundExpr e = random_expr(rng, 4);
        bool ok = true;
        for (double x : probe_points()) {
            try {
                const double v = e.eval(x);
                if (!std::isfinite(v) || std::abs(v) > 1e12) {
                    ok = false;
                    break;
                }
            } catch (const svfcheck::EvalError&) {
                ok = false;
                break;
            }
        }
        if (ok) return e;
    }
}

}  // namespace test_expr
