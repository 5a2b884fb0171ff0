#pragma once

// Brute-force oracles for the tests, kept independent of the library: all
// margins here are computed with plain double loops and endpoint
// arithmetic, never through the set algebra or the verifier.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace test_oracle {

inline double h_m(double x, double y, double t, double m) {
    return m * x * y / (t * m * x + (1 - t) * y);
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(n == 1 ? lo : lo * std::pow(hi / lo, double(i) / double(n - 1)));
    out.front() = lo;
    if (n > 1) out.back() = hi;
    return out;
}

inline std::vector<double> lin_grid(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1));
    return out;
}

inline double iv_margin(double al, double ah, double bl, double bh) {
    return std::max(bl - al, ah - bh);
}

struct SweepOutcome {
    double worst = -1e300;
    double x = 0, y = 0, t = 0;
    long evaluated = 0;
    long skipped = 0;
    long violations = 0;
};

// Worst margin of [lo(h), hi(h)] + r*B ⊆ t*[lo(y),hi(y)] + m(1-t)*[lo(x),hi(x)]
// over a log x/y grid and an explicit t list, r = c*m*t*(1-t)*((x-y)/(xy))^2.
template <typename LoF, typename HiF>
SweepOutcome strong_inclusion_sweep(LoF lo, HiF hi, double dlo, double dhi, int nx, int ny,
                                    const std::vector<double>& ts, double m, double c,
                                    double tol) {
    SweepOutcome out;
    const auto xs = log_grid(dlo, dhi, nx);
    const auto ys = log_grid(dlo, dhi, ny);
    for (double x : xs) {
        for (double y : ys) {
            for (double t : ts) {
                const double h = h_m(x, y, t, m);
                if (h < dlo || h > dhi) {
                    ++out.skipped;
                    continue;
                }
                ++out.evaluated;
                const double d = (x - y) / (x * y);
                const double r = c * m * t * (1 - t) * d * d;
                const double margin = iv_margin(lo(h) - r, hi(h) + r,
                                                t * lo(y) + m * (1 - t) * lo(x),
                                                t * hi(y) + m * (1 - t) * hi(x));
                if (margin > tol) ++out.violations;
                if (margin > out.worst) {
                    out.worst = margin;
                    out.x = x;
                    out.y = y;
                    out.t = t;
                }
            }
        }
    }
    return out;
}

// Deterministic uniforms built from raw mt19937_64 output.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double next() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
    // random interval with endpoints in [lo, hi]
    std::pair<double, double> interval(double lo, double hi) {
        double a = uniform(lo, hi), b = uniform(lo, hi);
        if (a > b) std::swap(a, b);
        return {a, b};
    }
};

}  // namespace test_oracle
