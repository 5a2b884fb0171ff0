#pragma once

// Harmonic m-combination geometry on the positive half-line: combination
// points, dyadic rationals, and grid checks for harmonic m-convexity and
// starshapedness of domains.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "svfcheck/report.hpp"
#include "svfcheck/set_algebra.hpp"

namespace svfcheck {

// m*x*y / (t*m*x + (1-t)*y); runs from m*x at t = 0 to y at t = 1.
inline double harmonic_m_point(double x, double y, double t, double m) {
    if (!(x > 0) || !(y > 0))
        throw std::domain_error("harmonic_m_point: x and y must be positive");
    if (!(t >= 0 && t <= 1))
        throw std::domain_error("harmonic_m_point: t must be in [0, 1]");
    if (!(m > 0 && m <= 1))
        throw std::domain_error("harmonic_m_point: m must be in (0, 1]");
    return m * x * y / (t * m * x + (1 - t) * y);
}

inline double harmonic_point(double x, double y, double t) {
    return harmonic_m_point(x, y, t, 1.0);
}

// k / 2^n with 0 <= k <= 2^n.
struct DyadicRational {
    std::uint64_t k;
    unsigned n;

    DyadicRational(std::uint64_t k_, unsigned n_) : k(k_), n(n_) {
        if (n > 62)
            throw std::invalid_argument("DyadicRational: n too large");
        if (k > (std::uint64_t{1} << n))
            throw std::invalid_argument("DyadicRational: k > 2^n");
    }
};

inline double dyadic_value(const DyadicRational& q) {
    return std::ldexp(static_cast<double>(q.k), -static_cast<int>(q.n));
}

// Positive domain with optionally open endpoints. Open endpoints are
// sampled at an inset offset but membership is tested against the true
// bound, so (0, b] can be checked without ever evaluating at 0.
struct PositiveDomain {
    double lo;
    double hi;
    bool lo_open = false;
    bool hi_open = false;
    double inset = 1e-6;

    PositiveDomain(double lo_, double hi_, bool lo_open_ = false, bool hi_open_ = false,
                   double inset_ = 1e-6)
        : lo(lo_), hi(hi_), lo_open(lo_open_), hi_open(hi_open_), inset(inset_) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
            throw std::invalid_argument("PositiveDomain: invalid bounds");
        if (!(lo > 0) && !lo_open)
            throw std::invalid_argument("PositiveDomain: lo must be positive (or open at 0)");
        if (!(lo >= 0))
            throw std::invalid_argument("PositiveDomain: lo must be nonnegative");
        if (!(inset > 0))
            throw std::invalid_argument("PositiveDomain: inset must be positive");
        if (sample_lo() > sample_hi())
            throw std::invalid_argument("PositiveDomain: empty after inset");
    }

    static PositiveDomain closed(const Interval& iv) { return PositiveDomain(iv.lo, iv.hi); }

    double sample_lo() const { return lo_open ? std::max(lo + inset, inset) : lo; }
    double sample_hi() const { return hi_open ? hi - inset : hi; }

    // Signed membership margin: positive when v lies outside.
    double membership_margin(double v) const { return std::max(lo - v, v - hi); }

    bool contains(double v, double tol) const {
        if (lo_open && !(v > lo)) return false;
        if (hi_open && !(v < hi)) return false;
        return membership_margin(v) <= tol;
    }
};

namespace detail {

inline void note_domain_violation(CheckReport& rep, double x, double y, double t, double h,
                                  double margin, double tol) {
    if (margin > rep.worst_margin) {
        rep.worst_margin = margin;
        rep.witness = Witness{x, y, t, "point " + fmt_double(h) + " leaves the domain"};
    }
    if (margin > tol) ++rep.stats.violations;
}

}  // namespace detail

// Verifies that every harmonic m-combination of sampled domain points stays
// inside D. Reports the worst excursion (first hit in grid order on ties).
inline CheckReport is_harmonically_m_convex_domain(const PositiveDomain& D, double m,
                                                   const GridSpec& grid,
                                                   double tol = kDefaultTol) {
    if (!(m > 0 && m <= 1))
        throw std::invalid_argument("is_harmonically_m_convex_domain: m must be in (0, 1]");
    CheckReport rep;
    rep.stats.grid = grid;
    rep.worst_margin = -std::numeric_limits<double>::infinity();
    const auto xs = log_spaced(D.sample_lo(), D.sample_hi(), grid.nx);
    const auto ys = log_spaced(D.sample_lo(), D.sample_hi(), grid.ny);
    const auto ts = lin_spaced(0.0, 1.0, grid.nt);
    for (double x : xs) {
        for (double y : ys) {
            for (double t : ts) {
                const double h = harmonic_m_point(x, y, t, m);
                ++rep.stats.evaluated;
                detail::note_domain_violation(rep, x, y, t, h, D.membership_margin(h), tol);
            }
        }
    }
    rep.verdict = rep.worst_margin <= tol ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Pass) rep.witness.reset();
    return rep;
}

// Closed-interval convenience overload.
inline CheckReport is_harmonically_m_convex_domain(const Interval& D, double m,
                                                   const GridSpec& grid,
                                                   double tol = kDefaultTol) {
    return is_harmonically_m_convex_domain(PositiveDomain::closed(D), m, grid, tol);
}

// Verifies t*x ∈ D for t ∈ (0, 1] and x sampled from D; D.lo may be 0.
inline CheckReport is_starshaped(const Interval& D, const GridSpec& grid,
                                 double tol = kDefaultTol) {
    if (!(D.lo >= 0))
        throw std::invalid_argument("is_starshaped: domain must be nonnegative");
    CheckReport rep;
    rep.stats.grid = grid;
    rep.worst_margin = -std::numeric_limits<double>::infinity();
    const auto xs = lin_spaced(D.lo, D.hi, grid.nx);
    for (double x : xs) {
        for (int j = 1; j <= grid.nt; ++j) {
            const double t = double(j) / double(grid.nt);
            const double p = t * x;
            ++rep.stats.evaluated;
            const double margin = std::max(D.lo - p, p - D.hi);
            detail::note_domain_violation(rep, x, 0.0, t, p, margin, tol);
        }
    }
    rep.verdict = rep.worst_margin <= tol ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Pass) rep.witness.reset();
    return rep;
}

}  // namespace svfcheck
