#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "zerosurf/dual.hpp"
#include "zerosurf/errors.hpp"
#include "zerosurf/field.hpp"

namespace zerosurf {

// Expression grammar (external contract):
//   variables x1 x2 x3, operators + - * / ^, functions sin cos exp sqrt,
//   parentheses, decimal literals. Whitespace-insensitive. Exponents of
//   '^' must be integer constants.

enum class ExprKind { number, variable, unary, binary, power };
enum class ExprFn { sin, cos, exp, sqrt };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    double number = 0.0; // number
    int var = 0;         // variable: 0..2
    char op = 0;         // binary: + - * /
    ExprFn fn = ExprFn::sin;
    int exponent = 0;    // power
    ExprPtr a, b;
};

template <typename T>
T eval_expr(const ExprNode& n, const T& x1, const T& x2, const T& x3) {
    switch (n.kind) {
    case ExprKind::number:
        return T(n.number);
    case ExprKind::variable:
        return n.var == 0 ? x1 : (n.var == 1 ? x2 : x3);
    case ExprKind::unary: {
        const T a = eval_expr(*n.a, x1, x2, x3);
        switch (n.fn) {
        case ExprFn::sin: return sin(a);
        case ExprFn::cos: return cos(a);
        case ExprFn::exp: return exp(a);
        case ExprFn::sqrt: return sqrt(a);
        }
        throw Error("unreachable");
    }
    case ExprKind::binary: {
        const T a = eval_expr(*n.a, x1, x2, x3);
        const T b = eval_expr(*n.b, x1, x2, x3);
        switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        }
        throw Error("unreachable");
    }
    case ExprKind::power:
        return pow_int(eval_expr(*n.a, x1, x2, x3), n.exponent);
    }
    throw Error("unreachable");
}

// double instantiation needs these shims next to std versions.
inline double pow_int(double x, int n) { return ipow(x, n); }
inline double sqrt_checked(double x) {
    if (x < 0.0) throw DomainError("sqrt of negative value");
    return std::sqrt(x);
}

namespace detail {

struct Token {
    enum class Kind { number, ident, op, lparen, rparen, end } kind;
    double number = 0.0;
    std::string text;
    char op = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        Token t;
        t.pos = pos_;
        if (pos_ >= src_.size()) {
            t.kind = Token::Kind::end;
            return t;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.'))
                ++end;
            if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
                std::size_t e = end + 1;
                if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
                if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
                    while (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) ++e;
                    end = e;
                }
            }
            const std::string text(src_.substr(pos_, end - pos_));
            try {
                t.number = std::stod(text);
            } catch (const std::exception&) {
                throw SyntaxError("bad numeric literal '" + text + "' at position " +
                                  std::to_string(pos_));
            }
            t.kind = Token::Kind::number;
            t.text = text;
            pos_ = end;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            t.kind = Token::Kind::ident;
            t.text = std::string(src_.substr(pos_, end - pos_));
            pos_ = end;
            return t;
        }
        if (c == '(') { t.kind = Token::Kind::lparen; ++pos_; return t; }
        if (c == ')') { t.kind = Token::Kind::rparen; ++pos_; return t; }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            t.kind = Token::Kind::op;
            t.op = c;
            ++pos_;
            return t;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' at position " +
                          std::to_string(pos_));
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        if (cur_.kind != Token::Kind::end)
            throw SyntaxError("trailing input at position " + std::to_string(cur_.pos));
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    ExprPtr parse_sum() {
        ExprPtr a = parse_term();
        while (cur_.kind == Token::Kind::op && (cur_.op == '+' || cur_.op == '-')) {
            const char op = cur_.op;
            advance();
            ExprPtr b = parse_term();
            a = make_binary(op, a, b);
        }
        return a;
    }

    ExprPtr parse_term() {
        ExprPtr a = parse_factor();
        while (cur_.kind == Token::Kind::op && (cur_.op == '*' || cur_.op == '/')) {
            const char op = cur_.op;
            advance();
            ExprPtr b = parse_factor();
            a = make_binary(op, a, b);
        }
        return a;
    }

    // Unary sign applies after '^', so -x1^2 parses as -(x1^2).
    ExprPtr parse_factor() {
        bool negate = false;
        while (cur_.kind == Token::Kind::op && (cur_.op == '+' || cur_.op == '-')) {
            if (cur_.op == '-') negate = !negate;
            advance();
        }
        ExprPtr e = parse_power();
        if (negate) {
            auto zero = std::make_shared<ExprNode>();
            zero->kind = ExprKind::number;
            zero->number = 0.0;
            e = make_binary('-', zero, e);
        }
        return e;
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        while (cur_.kind == Token::Kind::op && cur_.op == '^') {
            advance();
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprKind::power;
            node->exponent = parse_int_exponent();
            node->a = base;
            base = node;
        }
        return base;
    }

    int parse_int_exponent() {
        bool neg = false;
        while (cur_.kind == Token::Kind::op && (cur_.op == '+' || cur_.op == '-')) {
            if (cur_.op == '-') neg = !neg;
            advance();
        }
        if (cur_.kind != Token::Kind::number)
            throw SyntaxError("expected integer exponent at position " + std::to_string(cur_.pos));
        const double v = cur_.number;
        const long n = std::lround(v);
        if (static_cast<double>(n) != v || cur_.text.find('.') != std::string::npos ||
            cur_.text.find('e') != std::string::npos || cur_.text.find('E') != std::string::npos)
            throw SyntaxError("exponent must be an integer constant (got '" + cur_.text + "')");
        advance();
        return neg ? -static_cast<int>(n) : static_cast<int>(n);
    }

    ExprPtr parse_primary() {
        if (cur_.kind == Token::Kind::number) {
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprKind::number;
            node->number = cur_.number;
            advance();
            return node;
        }
        if (cur_.kind == Token::Kind::ident) {
            const std::string name = cur_.text;
            const std::size_t pos = cur_.pos;
            advance();
            if (cur_.kind == Token::Kind::lparen) {
                ExprFn fn;
                if (name == "sin") fn = ExprFn::sin;
                else if (name == "cos") fn = ExprFn::cos;
                else if (name == "exp") fn = ExprFn::exp;
                else if (name == "sqrt") fn = ExprFn::sqrt;
                else throw UnknownIdentifier("unknown function '" + name + "'");
                advance();
                ExprPtr arg = parse_sum();
                expect_rparen();
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprKind::unary;
                node->fn = fn;
                node->a = arg;
                return node;
            }
            if (name == "x1" || name == "x2" || name == "x3") {
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprKind::variable;
                node->var = name[1] - '1';
                return node;
            }
            throw UnknownIdentifier("unknown identifier '" + name + "' at position " +
                                    std::to_string(pos));
        }
        if (cur_.kind == Token::Kind::lparen) {
            advance();
            ExprPtr e = parse_sum();
            expect_rparen();
            return e;
        }
        throw SyntaxError("unexpected token at position " + std::to_string(cur_.pos));
    }

    void expect_rparen() {
        if (cur_.kind != Token::Kind::rparen)
            throw SyntaxError("expected ')' at position " + std::to_string(cur_.pos));
        advance();
    }

    ExprPtr make_binary(char op, ExprPtr a, ExprPtr b) {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprKind::binary;
        node->op = op;
        node->a = std::move(a);
        node->b = std::move(b);
        return node;
    }

    Lexer lexer_;
    Token cur_;
};

struct ExpressionField final : FieldBackend {
    ExprPtr root;
    std::string source;
    ExpressionField(ExprPtr r, std::string src) : root(std::move(r)), source(std::move(src)) {}

    FieldEval eval(const Point3& p) const override {
        const Dual2 r = eval_expr<Dual2>(*root, Dual2::variable(p.x, 0), Dual2::variable(p.y, 1),
                                         Dual2::variable(p.z, 2));
        FieldEval e;
        e.value = r.v;
        e.gradient = {r.g[0], r.g[1], r.g[2]};
        e.hessian.m = r.h;
        return e;
    }
    double value(const Point3& p) const override {
        return eval_expr<double>(*root, p.x, p.y, p.z);
    }
    std::string descriptor() const override { return "expr(" + source + ")"; }
};

} // namespace detail

/// Parse the expression grammar into an AD-evaluable field.
inline ScalarField parse_expression(const std::string& text) {
    detail::Parser parser(text);
    return ScalarField(std::make_shared<detail::ExpressionField>(parser.parse(), text));
}

} // namespace zerosurf
