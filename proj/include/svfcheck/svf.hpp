#pragma once

// Set-valued functions on positive interval domains: closed-form bound
// pairs, tabulated samples with linear interpolation, and combinator trees
// (sum, scale, product, union, cross). Values are Interval, IntervalUnion
// (union nodes) or Box (cross nodes). Everything is immutable after
// construction and safe to share across verification workers.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "svfcheck/expr.hpp"
#include "svfcheck/report.hpp"
#include "svfcheck/set_algebra.hpp"

namespace svfcheck {

struct SvfSpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SetValuedFunction {
    struct ClosedForm {
        BoundExpr lower;
        BoundExpr upper;
    };
    struct Tabulated {
        std::vector<double> xs;
        std::vector<Interval> values;
    };
    enum class CombineOp { Sum, Scale, Product, Union, Cross };
    struct Combinator {
        CombineOp op;
        double lambda = 0;
        std::vector<std::shared_ptr<const SetValuedFunction>> children;
    };

    Interval domain_;
    std::variant<ClosedForm, Tabulated, Combinator> impl_;
    std::string label_;

    SetValuedFunction(Interval domain, std::variant<ClosedForm, Tabulated, Combinator> impl,
                      std::string label)
        : domain_(domain), impl_(std::move(impl)), label_(std::move(label)) {}

    static constexpr int kRegistrationSamples = 257;

    static void check_closed_form(const ClosedForm& cf, const Interval& domain) {
        for (double x : log_spaced(domain.lo, domain.hi, kRegistrationSamples)) {
            const double lo = cf.lower.eval(x);  // EvalError propagates
            const double hi = cf.upper.eval(x);
            if (lo > hi)
                throw std::invalid_argument("SetValuedFunction: lower > upper at x = " +
                                            fmt_double(x));
        }
    }

    static Interval require_positive_domain(const Interval& domain) {
        if (!(domain.lo > 0))
            throw std::invalid_argument("SetValuedFunction: domain must lie in (0, inf)");
        return domain;
    }

public:
    static SetValuedFunction closed_form(BoundExpr lower, BoundExpr upper, Interval domain,
                                         std::string label = "closed") {
        ClosedForm cf{std::move(lower), std::move(upper)};
        check_closed_form(cf, require_positive_domain(domain));
        return SetValuedFunction(domain, std::move(cf), std::move(label));
    }

    static SetValuedFunction tabulated(std::vector<double> xs, std::vector<Interval> values,
                                       std::string label = "tabulated") {
        if (xs.empty() || xs.size() != values.size())
            throw std::invalid_argument("SetValuedFunction: tabulated needs matching samples");
        if (!(xs.front() > 0))
            throw std::invalid_argument("SetValuedFunction: domain must lie in (0, inf)");
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (!(xs[i] > xs[i - 1]))
                throw std::invalid_argument(
                    "SetValuedFunction: tabulated x values must be strictly increasing");
        Interval domain(xs.front(), xs.back());
        return SetValuedFunction(domain, Tabulated{std::move(xs), std::move(values)},
                                 std::move(label));
    }

    // [0, f(x)]; f must be nonnegative on the domain.
    static SetValuedFunction box_family(const BoundExpr& f, Interval domain) {
        return closed_form(BoundExpr::number(0), f, domain, "box(" + f.str() + ")");
    }

    // [-f(x), f(x)]; f must be nonnegative on the domain.
    static SetValuedFunction symmetric_family(const BoundExpr& f, Interval domain) {
        return closed_form(BoundExpr::neg(f), f, domain, "symmetric(" + f.str() + ")");
    }

    // [f(x) - w, f(x) + w] with w >= 0.
    static SetValuedFunction shifted_family(const BoundExpr& f, double w, Interval domain) {
        if (!(w >= 0))
            throw std::invalid_argument("shifted_family: w must be nonnegative");
        return closed_form(BoundExpr::sub(f, BoundExpr::number(w)),
                           BoundExpr::add(f, BoundExpr::number(w)), domain,
                           "shifted(" + f.str() + ", w=" + fmt_double(w) + ")");
    }

    const Interval& domain() const { return domain_; }
    const std::string& label() const { return label_; }
    bool domain_contains(double x) const { return domain_.contains(x); }

    SetValue eval(double x) const {
        if (!domain_contains(x))
            throw std::domain_error("SetValuedFunction: x = " + fmt_double(x) +
                                    " outside domain [" + fmt_double(domain_.lo) + ", " +
                                    fmt_double(domain_.hi) + "]");
        return eval_unchecked(x);
    }

    // Convenience for interval-valued functions.
    Interval eval_interval(double x) const {
        SetValue v = eval(x);
        if (!std::holds_alternative<Interval>(v))
            throw std::invalid_argument("SetValuedFunction: value at x is not an interval");
        return std::get<Interval>(v);
    }

    friend SetValuedFunction svf_sum(const SetValuedFunction&, const SetValuedFunction&);
    friend SetValuedFunction svf_scale(double, const SetValuedFunction&);
    friend SetValuedFunction svf_product(const SetValuedFunction&, const SetValuedFunction&);
    friend SetValuedFunction svf_union(const SetValuedFunction&, const SetValuedFunction&);
    friend SetValuedFunction svf_cross(const SetValuedFunction&, const SetValuedFunction&);

private:
    SetValue eval_unchecked(double x) const {
        if (const auto* cf = std::get_if<ClosedForm>(&impl_))
            return Interval(cf->lower.eval(x), cf->upper.eval(x));
        if (const auto* tab = std::get_if<Tabulated>(&impl_)) {
            const auto& xs = tab->xs;
            auto it = std::lower_bound(xs.begin(), xs.end(), x);
            if (it != xs.end() && *it == x)
                return tab->values[static_cast<std::size_t>(it - xs.begin())];
            const std::size_t j = static_cast<std::size_t>(it - xs.begin());
            const Interval& a = tab->values[j - 1];
            const Interval& b = tab->values[j];
            const double s = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
            return Interval(a.lo + s * (b.lo - a.lo), a.hi + s * (b.hi - a.hi));
        }
        const auto& comb = std::get<Combinator>(impl_);
        switch (comb.op) {
            case CombineOp::Sum:
                return mink_sum(comb.children[0]->eval_unchecked(x),
                                comb.children[1]->eval_unchecked(x));
            case CombineOp::Scale:
                return scale(comb.lambda, comb.children[0]->eval_unchecked(x));
            case CombineOp::Product: {
                SetValue a = comb.children[0]->eval_unchecked(x);
                SetValue b = comb.children[1]->eval_unchecked(x);
                if (!std::holds_alternative<Interval>(a) || !std::holds_alternative<Interval>(b))
                    throw std::invalid_argument("svf_product: children must be interval-valued");
                return mink_product(std::get<Interval>(a), std::get<Interval>(b));
            }
            case CombineOp::Union: {
                std::vector<Interval> parts;
                for (const auto& child : comb.children) {
                    SetValue v = child->eval_unchecked(x);
                    if (const auto* iv = std::get_if<Interval>(&v))
                        parts.push_back(*iv);
                    else if (const auto* u = std::get_if<IntervalUnion>(&v))
                        parts.insert(parts.end(), u->parts.begin(), u->parts.end());
                    else
                        throw std::invalid_argument("svf_union: children must be scalar-set valued");
                }
                return IntervalUnion(std::move(parts));
            }
            case CombineOp::Cross: {
                std::vector<Interval> dims;
                for (const auto& child : comb.children) {
                    SetValue v = child->eval_unchecked(x);
                    if (const auto* iv = std::get_if<Interval>(&v))
                        dims.push_back(*iv);
                    else if (const auto* bx = std::get_if<Box>(&v))
                        dims.insert(dims.end(), bx->dims.begin(), bx->dims.end());
                    else
                        throw std::invalid_argument("svf_cross: union-valued children unsupported");
                }
                return Box(std::move(dims));
            }
        }
        throw std::logic_error("SetValuedFunction: bad combinator");
    }

    static Interval common_domain(const SetValuedFunction& f, const SetValuedFunction& g) {
        const double lo = std::max(f.domain_.lo, g.domain_.lo);
        const double hi = std::min(f.domain_.hi, g.domain_.hi);
        if (lo > hi)
            throw std::invalid_argument("svf combinator: empty domain intersection");
        return Interval(lo, hi);
    }

    static SetValuedFunction combine(CombineOp op, double lambda,
                                     std::vector<std::shared_ptr<const SetValuedFunction>> kids,
                                     Interval domain, std::string label) {
        return SetValuedFunction(domain, Combinator{op, lambda, std::move(kids)},
                                 std::move(label));
    }

    static std::shared_ptr<const SetValuedFunction> share(const SetValuedFunction& f) {
        return std::make_shared<const SetValuedFunction>(f);
    }
};

inline SetValuedFunction svf_sum(const SetValuedFunction& f, const SetValuedFunction& g) {
    auto dom = SetValuedFunction::common_domain(f, g);
    return SetValuedFunction::combine(SetValuedFunction::CombineOp::Sum, 0,
                                      {SetValuedFunction::share(f), SetValuedFunction::share(g)},
                                      dom, "(" + f.label() + " + " + g.label() + ")");
}

inline SetValuedFunction svf_scale(double lambda, const SetValuedFunction& f) {
    return SetValuedFunction::combine(SetValuedFunction::CombineOp::Scale, lambda,
                                      {SetValuedFunction::share(f)}, f.domain(),
                                      fmt_double(lambda) + "*" + f.label());
}

inline SetValuedFunction svf_product(const SetValuedFunction& f, const SetValuedFunction& g) {
    auto dom = SetValuedFunction::common_domain(f, g);
    return SetValuedFunction::combine(SetValuedFunction::CombineOp::Product, 0,
                                      {SetValuedFunction::share(f), SetValuedFunction::share(g)},
                                      dom, "(" + f.label() + " * " + g.label() + ")");
}

inline SetValuedFunction svf_union(const SetValuedFunction& f, const SetValuedFunction& g) {
    auto dom = SetValuedFunction::common_domain(f, g);
    return SetValuedFunction::combine(SetValuedFunction::CombineOp::Union, 0,
                                      {SetValuedFunction::share(f), SetValuedFunction::share(g)},
                                      dom, "(" + f.label() + " | " + g.label() + ")");
}

inline SetValuedFunction svf_cross(const SetValuedFunction& f, const SetValuedFunction& g) {
    auto dom = SetValuedFunction::common_domain(f, g);
    return SetValuedFunction::combine(SetValuedFunction::CombineOp::Cross, 0,
                                      {SetValuedFunction::share(f), SetValuedFunction::share(g)},
                                      dom, "(" + f.label() + " x " + g.label() + ")");
}

// ---- text formats ---------------------------------------------------------

// Loads `x,lo,hi` CSV (header required, strictly increasing x).
inline SetValuedFunction load_tabulated_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SvfSpecError("svf spec: cannot open file '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw SvfSpecError("svf spec: empty CSV file '" + path + "'");
    auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (strip(line) != "x,lo,hi")
        throw SvfSpecError("svf spec: CSV header must be 'x,lo,hi' in '" + path + "'");
    std::vector<double> xs;
    std::vector<Interval> values;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double v[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(row, cell, ','))
                throw SvfSpecError("svf spec: CSV line " + std::to_string(lineno) +
                                   " needs 3 columns");
            try {
                v[i] = std::stod(strip(cell));
            } catch (const std::exception&) {
                throw SvfSpecError("svf spec: bad number on CSV line " + std::to_string(lineno));
            }
        }
        xs.push_back(v[0]);
        try {
            values.emplace_back(v[1], v[2]);
        } catch (const std::exception&) {
            throw SvfSpecError("svf spec: lo > hi on CSV line " + std::to_string(lineno));
        }
    }
    try {
        return SetValuedFunction::tabulated(std::move(xs), std::move(values),
                                            "tabulated(" + path + ")");
    } catch (const std::invalid_argument& e) {
        throw SvfSpecError(std::string("svf spec: ") + e.what());
    }
}

namespace detail {

// key=value pairs; values are bare words, "quoted strings" or [a,b] pairs.
inline std::vector<std::pair<std::string, std::string>> parse_kv_pairs(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t i = 0;
    const auto fail = [&](const std::string& msg) { throw SvfSpecError("svf spec: " + msg); };
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t ks = i;
        while (i < text.size() && text[i] != '=' &&
               !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::string key = text.substr(ks, i - ks);
        if (key.empty() || i >= text.size() || text[i] != '=')
            fail("expected key=value near '" + text.substr(ks, 12) + "'");
        ++i;
        std::string value;
        if (i < text.size() && text[i] == '"') {
            ++i;
            std::size_t vs = i;
            while (i < text.size() && text[i] != '"') ++i;
            if (i >= text.size()) fail("unterminated quote in value for '" + key + "'");
            value = text.substr(vs, i - vs);
            ++i;
        } else if (i < text.size() && text[i] == '[') {
            std::size_t vs = i;
            while (i < text.size() && text[i] != ']') ++i;
            if (i >= text.size()) fail("unterminated '[' in value for '" + key + "'");
            ++i;
            value = text.substr(vs, i - vs);
        } else {
            std::size_t vs = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            value = text.substr(vs, i - vs);
        }
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

inline Interval parse_domain_value(const std::string& value) {
    if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw SvfSpecError("svf spec: bad value for 'domain' (expected [lo,hi])");
    const std::string body = value.substr(1, value.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string::npos)
        throw SvfSpecError("svf spec: bad value for 'domain' (expected [lo,hi])");
    try {
        return Interval(std::stod(body.substr(0, comma)), std::stod(body.substr(comma + 1)));
    } catch (const std::exception&) {
        throw SvfSpecError("svf spec: bad value for 'domain'");
    }
}

}  // namespace detail

// Parses the one-line SVF description used by the CLI and config files:
//   kind=box expr="x" domain=[0.5,8]
//   kind=symmetric expr="1/x^2" domain=[0.5,8]
//   kind=shifted expr="x" w=0.5 domain=[0.5,8]
//   kind=closed lower="-1/x^2" upper="1/x^2" domain=[0.5,8]
//   kind=tabulated file=path.csv
inline SetValuedFunction parse_svf_spec(const std::string& text) {
    auto pairs = detail::parse_kv_pairs(text);
    auto get = [&](const std::string& key) -> const std::string* {
        for (const auto& [k, v] : pairs)
            if (k == key) return &v;
        return nullptr;
    };
    auto require = [&](const std::string& key) -> const std::string& {
        const std::string* v = get(key);
        if (!v) throw SvfSpecError("svf spec: missing key '" + key + "'");
        return *v;
    };
    auto expr_of = [&](const std::string& key) {
        try {
            return parse_expr(require(key));
        } catch (const ParseError& e) {
            throw SvfSpecError("svf spec: bad value for '" + key + "': " + e.what());
        }
    };
    const std::string& kind = require("kind");
    if (kind == "box")
        return SetValuedFunction::box_family(expr_of("expr"),
                                             detail::parse_domain_value(require("domain")));
    if (kind == "symmetric")
        return SetValuedFunction::symmetric_family(expr_of("expr"),
                                                   detail::parse_domain_value(require("domain")));
    if (kind == "shifted") {
        double w = 0;
        try {
            w = std::stod(require("w"));
        } catch (const std::exception&) {
            throw SvfSpecError("svf spec: bad value for 'w'");
        }
        return SetValuedFunction::shifted_family(expr_of("expr"), w,
                                                 detail::parse_domain_value(require("domain")));
    }
    if (kind == "closed")
        return SetValuedFunction::closed_form(expr_of("lower"), expr_of("upper"),
                                              detail::parse_domain_value(require("domain")));
    if (kind == "tabulated")
        return load_tabulated_csv(require("file"));
    throw SvfSpecError("svf spec: unknown kind '" + kind + "'");
}

}  // namespace svfcheck
