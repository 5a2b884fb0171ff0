#pragma once

// Exact interval / interval-union / box set algebra: Minkowski sum and
// product, scalar scaling, inflation by a scaled unit ball, signed
// inclusion margins, Hausdorff distance, and the Radstrom cancellation
// probe. All values are finite; constructors validate their invariants.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace svfcheck {

inline constexpr double kDefaultTol = 1e-9;

struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("Interval: endpoints must be finite");
        if (lo > hi)
            throw std::invalid_argument("Interval: lo > hi");
    }

    static Interval point(double v) { return Interval(v, v); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    double abs_max() const { return std::max(std::abs(lo), std::abs(hi)); }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

inline bool intervals_intersect(const Interval& a, const Interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

inline Interval mink_sum(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

inline Interval scale(double lambda, const Interval& a) {
    const double u = lambda * a.lo;
    const double v = lambda * a.hi;
    return Interval(std::min(u, v), std::max(u, v));
}

inline Interval mink_product(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo;
    const double p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo;
    const double p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
}

// A + r*B where B is the closed unit ball [-1, 1].
inline Interval inflate(const Interval& a, double r) {
    if (!(r >= 0))
        throw std::invalid_argument("inflate: radius must be nonnegative");
    return Interval(a.lo - r, a.hi + r);
}

// Signed inclusion margin for inner ⊆ outer: the largest outward excursion
// of inner past outer; negative values are slack.
inline double subset_margin(const Interval& inner, const Interval& outer) {
    return std::max(outer.lo - inner.lo, inner.hi - outer.hi);
}

inline double hausdorff(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

// Finite union of disjoint intervals, normalized: sorted by lo, touching or
// overlapping parts merged, so consecutive parts satisfy prev.hi < next.lo.
struct IntervalUnion {
    std::vector<Interval> parts;

    explicit IntervalUnion(std::vector<Interval> raw) : parts(normalize(std::move(raw))) {}

    static std::vector<Interval> normalize(std::vector<Interval> raw) {
        if (raw.empty())
            throw std::invalid_argument("IntervalUnion: needs at least one part");
        std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
        });
        std::vector<Interval> out;
        out.reserve(raw.size());
        out.push_back(raw.front());
        for (std::size_t i = 1; i < raw.size(); ++i) {
            if (raw[i].lo <= out.back().hi) {
                if (raw[i].hi > out.back().hi)
                    out.back() = Interval(out.back().lo, raw[i].hi);
            } else {
                out.push_back(raw[i]);
            }
        }
        return out;
    }

    double lo() const { return parts.front().lo; }
    double hi() const { return parts.back().hi; }
};

inline bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts == b.parts;
}

inline IntervalUnion mink_sum(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<Interval> sums;
    sums.reserve(a.parts.size() * b.parts.size());
    for (const Interval& p : a.parts)
        for (const Interval& q : b.parts)
            sums.push_back(mink_sum(p, q));
    return IntervalUnion(std::move(sums));
}

inline IntervalUnion scale(double lambda, const IntervalUnion& a) {
    std::vector<Interval> parts;
    parts.reserve(a.parts.size());
    for (const Interval& p : a.parts)
        parts.push_back(scale(lambda, p));
    return IntervalUnion(std::move(parts));
}

inline IntervalUnion inflate(const IntervalUnion& a, double r) {
    std::vector<Interval> parts;
    parts.reserve(a.parts.size());
    for (const Interval& p : a.parts)
        parts.push_back(inflate(p, r));
    return IntervalUnion(std::move(parts));
}

// Signed distance from point v to the union (negative inside).
inline double signed_dist(double v, const IntervalUnion& u) {
    double best = std::numeric_limits<double>::infinity();
    for (const Interval& p : u.parts)
        best = std::min(best, std::max(p.lo - v, v - p.hi));
    return best;
}

// Smallest delta such that inner ⊆ union of [lo-delta, hi+delta] over outer
// parts. The maximum of the signed point distance over an inner part is
// attained at its endpoints or at an outer gap midpoint inside it.
inline double subset_margin(const IntervalUnion& inner, const IntervalUnion& outer) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const Interval& p : inner.parts) {
        worst = std::max(worst, signed_dist(p.lo, outer));
        worst = std::max(worst, signed_dist(p.hi, outer));
        for (std::size_t i = 0; i + 1 < outer.parts.size(); ++i) {
            const double gap_mid = 0.5 * (outer.parts[i].hi + outer.parts[i + 1].lo);
            if (gap_mid > p.lo && gap_mid < p.hi)
                worst = std::max(worst, signed_dist(gap_mid, outer));
        }
    }
    return worst;
}

// Axis-aligned product of intervals.
struct Box {
    std::vector<Interval> dims;

    explicit Box(std::vector<Interval> dims_) : dims(std::move(dims_)) {
        if (dims.empty())
            throw std::invalid_argument("Box: needs at least one dimension");
    }

    std::size_t dim() const { return dims.size(); }
};

inline bool operator==(const Box& a, const Box& b) { return a.dims == b.dims; }

inline void require_same_dim(const Box& a, const Box& b, const char* op) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

inline Box mink_sum(const Box& a, const Box& b) {
    require_same_dim(a, b, "mink_sum");
    std::vector<Interval> dims;
    dims.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        dims.push_back(mink_sum(a.dims[i], b.dims[i]));
    return Box(std::move(dims));
}

inline Box scale(double lambda, const Box& a) {
    std::vector<Interval> dims;
    dims.reserve(a.dim());
    for (const Interval& d : a.dims)
        dims.push_back(scale(lambda, d));
    return Box(std::move(dims));
}

inline Box inflate(const Box& a, double r) {
    std::vector<Interval> dims;
    dims.reserve(a.dim());
    for (const Interval& d : a.dims)
        dims.push_back(inflate(d, r));
    return Box(std::move(dims));
}

inline double subset_margin(const Box& inner, const Box& outer) {
    require_same_dim(inner, outer, "subset_margin");
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inner.dim(); ++i)
        worst = std::max(worst, subset_margin(inner.dims[i], outer.dims[i]));
    return worst;
}

struct SubsetResult {
    bool contained;
    double margin;  // already reduced by eps: contained iff margin <= tol
};

template <typename Set>
SubsetResult is_subset_eps(const Set& inner, const Set& outer, double eps,
                           double tol = kDefaultTol) {
    if (!(eps >= 0))
        throw std::invalid_argument("is_subset_eps: eps must be nonnegative");
    const double margin = subset_margin(inner, outer) - eps;
    return SubsetResult{margin <= tol, margin};
}

struct RadstromResult {
    bool premise;     // A1 + C ⊆ A2 + C
    bool conclusion;  // A1 ⊆ A2
    bool consistent;  // premise implies conclusion
};

inline RadstromResult radstrom_check(const Interval& a1, const Interval& a2,
                                     const Interval& c, double tol = kDefaultTol) {
    const bool premise = is_subset_eps(mink_sum(a1, c), mink_sum(a2, c), 0.0, tol).contained;
    const bool conclusion = is_subset_eps(a1, a2, 0.0, tol).contained;
    return RadstromResult{premise, conclusion, !premise || conclusion};
}

// Tagged value of a set-valued function: interval, finite union, or box.
using SetValue = std::variant<Interval, IntervalUnion, Box>;

inline IntervalUnion as_union(const Interval& a) { return IntervalUnion({a}); }

inline SetValue mink_sum(const SetValue& a, const SetValue& b) {
    if (std::holds_alternative<Interval>(a) && std::holds_alternative<Interval>(b))
        return mink_sum(std::get<Interval>(a), std::get<Interval>(b));
    if (std::holds_alternative<Box>(a) && std::holds_alternative<Box>(b))
        return mink_sum(std::get<Box>(a), std::get<Box>(b));
    if (std::holds_alternative<Box>(a) || std::holds_alternative<Box>(b))
        throw std::invalid_argument("mink_sum: cannot mix box and scalar-set values");
    auto lift = [](const SetValue& v) {
        return std::holds_alternative<Interval>(v) ? as_union(std::get<Interval>(v))
                                                   : std::get<IntervalUnion>(v);
    };
    return mink_sum(lift(a), lift(b));
}

inline SetValue scale(double lambda, const SetValue& a) {
    return std::visit([&](const auto& v) -> SetValue { return scale(lambda, v); }, a);
}

inline SetValue inflate(const SetValue& a, double r) {
    return std::visit([&](const auto& v) -> SetValue { return inflate(v, r); }, a);
}

inline double subset_margin(const SetValue& inner, const SetValue& outer) {
    if (std::holds_alternative<Interval>(inner) && std::holds_alternative<Interval>(outer))
        return subset_margin(std::get<Interval>(inner), std::get<Interval>(outer));
    if (std::holds_alternative<Box>(inner) && std::holds_alternative<Box>(outer))
        return subset_margin(std::get<Box>(inner), std::get<Box>(outer));
    if (std::holds_alternative<Box>(inner) || std::holds_alternative<Box>(outer))
        throw std::invalid_argument("subset_margin: cannot mix box and scalar-set values");
    auto lift = [](const SetValue& v) {
        return std::holds_alternative<Interval>(v) ? as_union(std::get<Interval>(v))
                                                   : std::get<IntervalUnion>(v);
    };
    return subset_margin(lift(inner), lift(outer));
}

}  // namespace svfcheck
