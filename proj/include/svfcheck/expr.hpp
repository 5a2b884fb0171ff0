#pragma once

// Small expression DSL for bound functions of one positive variable.
//
//   expr   := term (('+' | '-') term)*
//   term   := power (('*' | '/') power)*
//   power  := unary ('^' power)?          right-associative
//   unary  := '-' unary | atom
//   atom   := number | 'x' | ('exp' | 'log') '(' expr ')' | '(' expr ')'
//
// Unary minus binds tighter than '^', so -x^2 means (-x)^2. Evaluation
// rejects non-finite results (division by zero, log of a nonpositive
// value, overflow) with the offending point attached.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace svfcheck {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t pos_)
        : std::runtime_error(msg + " at offset " + std::to_string(pos_)), pos(pos_) {}
};

struct EvalError : std::runtime_error {
    double x;
    EvalError(const std::string& msg, double x_)
        : std::runtime_error(msg + " (x = " + std::to_string(x_) + ")"), x(x_) {}
};

class BoundExpr {
    enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Log };

    struct Node {
        Kind kind;
        double value = 0;
        std::shared_ptr<const Node> a;
        std::shared_ptr<const Node> b;
    };
    using NodePtr = std::shared_ptr<const Node>;

    NodePtr root_;
    explicit BoundExpr(NodePtr root) : root_(std::move(root)) {}

public:
    BoundExpr() = default;
    bool valid() const { return root_ != nullptr; }

    static BoundExpr number(double v) { return BoundExpr(make(Kind::Num, v)); }
    static BoundExpr variable() { return BoundExpr(make(Kind::Var)); }
    static BoundExpr add(BoundExpr a, BoundExpr b) { return binary(Kind::Add, a, b); }
    static BoundExpr sub(BoundExpr a, BoundExpr b) { return binary(Kind::Sub, a, b); }
    static BoundExpr mul(BoundExpr a, BoundExpr b) { return binary(Kind::Mul, a, b); }
    static BoundExpr div(BoundExpr a, BoundExpr b) { return binary(Kind::Div, a, b); }
    static BoundExpr pow(BoundExpr a, BoundExpr b) { return binary(Kind::Pow, a, b); }
    static BoundExpr neg(BoundExpr a) { return BoundExpr(make(Kind::Neg, 0, a.root_)); }
    static BoundExpr exp(BoundExpr a) { return BoundExpr(make(Kind::Exp, 0, a.root_)); }
    static BoundExpr log(BoundExpr a) { return BoundExpr(make(Kind::Log, 0, a.root_)); }

    static BoundExpr parse(std::string_view text) {
        Parser p{text, 0};
        if (p.peek() == '\0')
            throw ParseError("empty expression", 0);
        BoundExpr e(p.parse_expr());
        p.skip_ws();
        if (p.pos < text.size())
            throw ParseError("unexpected trailing input", p.pos);
        return e;
    }

    double eval(double x) const {
        if (!root_) throw EvalError("empty expression", x);
        return eval_node(*root_, x);
    }

    std::string str() const { return root_ ? print(*root_, 0) : std::string(); }

private:
    static NodePtr make(Kind k, double v = 0, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->value = v;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    static BoundExpr binary(Kind k, const BoundExpr& a, const BoundExpr& b) {
        return BoundExpr(make(k, 0, a.root_, b.root_));
    }

    static double checked(double v, const char* what, double x) {
        if (!std::isfinite(v)) throw EvalError(std::string(what), x);
        return v;
    }

    static double eval_node(const Node& n, double x) {
        switch (n.kind) {
            case Kind::Num: return n.value;
            case Kind::Var: return x;
            case Kind::Add: return checked(eval_node(*n.a, x) + eval_node(*n.b, x), "overflow in '+'", x);
            case Kind::Sub: return checked(eval_node(*n.a, x) - eval_node(*n.b, x), "overflow in '-'", x);
            case Kind::Mul: return checked(eval_node(*n.a, x) * eval_node(*n.b, x), "overflow in '*'", x);
            case Kind::Div: {
                const double d = eval_node(*n.b, x);
                if (d == 0) throw EvalError("division by zero", x);
                return checked(eval_node(*n.a, x) / d, "overflow in '/'", x);
            }
            case Kind::Neg: return -eval_node(*n.a, x);
            case Kind::Pow:
                return checked(std::pow(eval_node(*n.a, x), eval_node(*n.b, x)),
                               "invalid or overflowing power", x);
            case Kind::Exp: return checked(std::exp(eval_node(*n.a, x)), "overflow in exp", x);
            case Kind::Log: {
                const double v = eval_node(*n.a, x);
                if (!(v > 0)) throw EvalError("log of nonpositive value", x);
                return checked(std::log(v), "overflow in log", x);
            }
        }
        throw EvalError("malformed expression tree", x);
    }

    // Precedence levels: add/sub 1, mul/div 2, pow 3, unary 4, atom 5.
    // A child is parenthesized when its level is below the required one.
    static std::string print(const Node& n, int required) {
        std::string body;
        int level = 5;
        switch (n.kind) {
            case Kind::Num: {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", n.value);
                if (n.value < 0) return "(" + std::string(buf) + ")";
                body = buf;
                break;
            }
            case Kind::Var: body = "x"; break;
            case Kind::Add: level = 1; body = print(*n.a, 1) + " + " + print(*n.b, 2); break;
            case Kind::Sub: level = 1; body = print(*n.a, 1) + " - " + print(*n.b, 2); break;
            case Kind::Mul: level = 2; body = print(*n.a, 2) + "*" + print(*n.b, 3); break;
            case Kind::Div: level = 2; body = print(*n.a, 2) + "/" + print(*n.b, 3); break;
            case Kind::Pow: level = 3; body = print(*n.a, 4) + "^" + print(*n.b, 3); break;
            case Kind::Neg: level = 4; body = "-" + print(*n.a, 4); break;
            case Kind::Exp: body = "exp(" + print(*n.a, 0) + ")"; break;
            case Kind::Log: body = "log(" + print(*n.a, 0) + ")"; break;
        }
        return level < required ? "(" + body + ")" : body;
    }

    struct Parser {
        std::string_view text;
        std::size_t pos;

        void skip_ws() {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        }

        char peek() {
            skip_ws();
            return pos < text.size() ? text[pos] : '\0';
        }

        bool consume(char c) {
            if (peek() == c) {
                ++pos;
                return true;
            }
            return false;
        }

        NodePtr parse_expr() {
            NodePtr lhs = parse_term();
            for (;;) {
                if (consume('+')) lhs = make(Kind::Add, 0, lhs, parse_term());
                else if (consume('-')) lhs = make(Kind::Sub, 0, lhs, parse_term());
                else return lhs;
            }
        }

        NodePtr parse_term() {
            NodePtr lhs = parse_power();
            for (;;) {
                if (consume('*')) lhs = make(Kind::Mul, 0, lhs, parse_power());
                else if (consume('/')) lhs = make(Kind::Div, 0, lhs, parse_power());
                else return lhs;
            }
        }

        NodePtr parse_power() {
            NodePtr base = parse_unary();
            if (consume('^'))
                return make(Kind::Pow, 0, base, parse_power());
            return base;
        }

        NodePtr parse_unary() {
            if (consume('-'))
                return make(Kind::Neg, 0, parse_unary());
            return parse_atom();
        }

        NodePtr parse_atom() {
            const char c = peek();
            if (c == '(') {
                ++pos;
                NodePtr inner = parse_expr();
                if (!consume(')'))
                    throw ParseError("expected ')'", pos);
                return inner;
            }
            if (std::isdigit(static_cast<unsigned char>(c)))
                return parse_number();
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
                return parse_ident();
            throw ParseError(c == '\0' ? "unexpected end of input"
                                       : std::string("unexpected character '") + c + "'",
                             pos);
        }

        NodePtr parse_number() {
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == '.') {
                ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("expected digits after '.'", pos);
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
            if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
                std::size_t mark = pos;
                ++pos;
                if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    pos = mark;  // 'e' belongs to something else; not part of the number
                } else {
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                }
            }
            const std::string tok(text.substr(start, pos - start));
            try {
                return make(Kind::Num, std::stod(tok));
            } catch (const std::exception&) {
                throw ParseError("bad number '" + tok + "'", start);
            }
        }

        NodePtr parse_ident() {
            const std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            const std::string name(text.substr(start, pos - start));
            if (name == "x")
                return make(Kind::Var);
            if (name == "exp" || name == "log") {
                if (!consume('('))
                    throw ParseError("expected '(' after '" + name + "'", pos);
                NodePtr arg = parse_expr();
                if (!consume(')'))
                    throw ParseError("expected ')'", pos);
                return make(name == "exp" ? Kind::Exp : Kind::Log, 0, arg);
            }
            throw ParseError("unknown identifier '" + name + "'", start);
        }
    };
};

inline BoundExpr parse_expr(std::string_view text) { return BoundExpr::parse(text); }
inline double eval_expr(const BoundExpr& e, double x) { return e.eval(x); }

}  // namespace svfcheck
