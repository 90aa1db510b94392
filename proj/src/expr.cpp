#include "gaq/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "gaq/errors.hpp"

namespace gaq {

namespace {

constexpr std::array<std::pair<const char*, Func>, 6> kFuncs{{
    {"sin", Func::sin},
    {"cos", Func::cos},
    {"tan", Func::tan},
    {"asin", Func::asin},
    {"sqrt", Func::sqrt},
    {"exp", Func::exp},
}};

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, prime, comma, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t col;  // 1-based
};

class Lexer {
public:
    Lexer(const std::string& s, std::size_t line, std::size_t col0) : s_(s), line_(line), col0_(col0) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < s_.size()) {
            const char ch = s_[i];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++i;
                continue;
            }
            const std::size_t col = col0_ + i + 1;
            if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                std::size_t j = i;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                if (j < s_.size() && s_[j] == '.') {
                    ++j;
                    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                }
                if (j < s_.size() && (s_[j] == 'e' || s_[j] == 'E')) {
                    std::size_t k = j + 1;
                    if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
                    if (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) {
                        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
                        j = k;
                    }
                }
                const std::string lit = s_.substr(i, j - i);
                if (lit == ".") throw ParseError("malformed number", line_, col);
                out.push_back({Tok::number, lit, col});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t j = i;
                while (j < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                    ++j;
                out.push_back({Tok::ident, s_.substr(i, j - i), col});
                i = j;
                continue;
            }
            Tok k;
            switch (ch) {
                case '+': k = Tok::plus; break;
                case '-': k = Tok::minus; break;
                case '*': k = Tok::star; break;
                case '/': k = Tok::slash; break;
                case '^': k = Tok::caret; break;
                case '(': k = Tok::lparen; break;
                case ')': k = Tok::rparen; break;
                case '\'': k = Tok::prime; break;
                case ',': k = Tok::comma; break;
                default:
                    throw ParseError(std::string("unexpected character '") + ch + "'", line_, col);
            }
            out.push_back({k, std::string(1, ch), col});
            ++i;
        }
        out.push_back({Tok::end, "", col0_ + s_.size() + 1});
        return out;
    }

private:
    const std::string& s_;
    std::size_t line_;
    std::size_t col0_;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const Scope& scope, std::size_t line)
        : t_(std::move(toks)), scope_(scope), line_(line) {}

    ExprPtr parse() {
        if (t_.size() == 1) throw ParseError("empty expression", line_, t_[0].col);
        ExprPtr e = expr();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return t_[pos_]; }
    const Token& take() { return t_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, peek().col); }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const NodeKind k = take().kind == Tok::plus ? NodeKind::add : NodeKind::sub;
            lhs = make_binary(k, lhs, term());
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const NodeKind k = take().kind == Tok::star ? NodeKind::mul : NodeKind::div;
            lhs = make_binary(k, lhs, factor());
        }
        return lhs;
    }

    ExprPtr factor() {
        if (peek().kind == Tok::minus) {
            take();
            return make_unary(NodeKind::neg, power());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr b = base();
        if (peek().kind != Tok::caret) return b;
        take();
        const Token& tok = peek();
        if (tok.kind != Tok::number ||
            tok.text.find_first_not_of("0123456789") != std::string::npos)
            fail("exponent must be a non-negative integer literal");
        take();
        auto node = std::make_shared<Expr>();
        node->kind = NodeKind::power;
        node->exponent = std::atoi(tok.text.c_str());
        node->a = std::move(b);
        return node;
    }

    ExprPtr base() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::number: {
                take();
                auto node = std::make_shared<Expr>();
                node->kind = NodeKind::number;
                node->text = tok.text;
                node->number = std::strtod(tok.text.c_str(), nullptr);
                return node;
            }
            case Tok::lparen: {
                take();
                ExprPtr e = expr();
                if (peek().kind != Tok::rparen) fail("expected ')'");
                take();
                return e;
            }
            case Tok::ident: return identifier();
            case Tok::end: fail("unexpected end of expression");
            default: fail("unexpected '" + tok.text + "'");
        }
    }

    ExprPtr identifier() {
        const Token tok = take();
        for (const auto& [name, f] : kFuncs) {
            if (tok.text != name) continue;
            if (peek().kind != Tok::lparen)
                throw ParseError(std::string("function '") + name + "' requires a parenthesized argument",
                                 line_, tok.col);
            take();
            ExprPtr arg = expr();
            if (peek().kind == Tok::comma)
                fail(std::string("arity error: function '") + name + "' takes exactly one argument");
            if (peek().kind != Tok::rparen) fail("expected ')'");
            take();
            auto node = std::make_shared<Expr>();
            node->kind = NodeKind::func;
            node->func = f;
            node->text = name;
            node->a = std::move(arg);
            return node;
        }
        if (peek().kind == Tok::lparen)
            throw ParseError("unknown function '" + tok.text + "'", line_, tok.col);
        const bool primed = peek().kind == Tok::prime;
        if (primed) take();
        for (std::size_t i = 0; i < scope_.coords.size(); ++i) {
            if (scope_.coords[i] != tok.text) continue;
            if (primed && !scope_.allow_primed)
                throw ParseError("primed identifier '" + tok.text + "'' not allowed here", line_, tok.col);
            return make_ref(primed ? NodeKind::left_coord : NodeKind::right_coord, i, tok.text);
        }
        for (std::size_t i = 0; i < scope_.params.size(); ++i) {
            if (scope_.params[i] != tok.text) continue;
            if (primed) throw ParseError("parameter '" + tok.text + "' cannot be primed", line_, tok.col);
            return make_ref(NodeKind::param, i, tok.text);
        }
        throw ParseError("unknown identifier '" + tok.text + "'", line_, tok.col);
    }

    std::vector<Token> t_;
    const Scope& scope_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::string number_text(const Expr& e) {
    if (!e.text.empty()) return e.text;
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, e.number);
    return std::string(buf, res.ptr);
}

}  // namespace

const char* func_name(Func f) {
    for (const auto& [name, g] : kFuncs)
        if (g == f) return name;
    return "?";
}

bool is_function_name(const std::string& name) {
    for (const auto& [n, f] : kFuncs)
        if (name == n) return true;
    return false;
}

bool operator==(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    const auto same = [](const ExprPtr& p, const ExprPtr& q) {
        if (!p || !q) return !p && !q;
        return *p == *q;
    };
    switch (x.kind) {
        case NodeKind::number: return x.number == y.number;
        case NodeKind::left_coord:
        case NodeKind::right_coord:
        case NodeKind::param: return x.index == y.index && x.text == y.text;
        case NodeKind::func: return x.func == y.func && same(x.a, y.a);
        case NodeKind::power: return x.exponent == y.exponent && same(x.a, y.a);
        case NodeKind::neg: return same(x.a, y.a);
        default: return same(x.a, y.a) && same(x.b, y.b);
    }
}

ExprPtr parse_expression(const std::string& text, const Scope& scope, std::size_t line,
                         std::size_t column_offset) {
    Lexer lex(text, line, column_offset);
    Parser p(lex.run(), scope, line);
    return p.parse();
}

std::string to_string(const Expr& e) {
    switch (e.kind) {
        case NodeKind::number: return number_text(e);
        case NodeKind::left_coord: return e.text + "'";
        case NodeKind::right_coord:
        case NodeKind::param: return e.text;
        case NodeKind::neg: return "(-" + to_string(*e.a) + ")";
        case NodeKind::func: return std::string(func_name(e.func)) + "(" + to_string(*e.a) + ")";
        case NodeKind::power: return "(" + to_string(*e.a) + ")^" + std::to_string(e.exponent);
        case NodeKind::add: return "(" + to_string(*e.a) + " + " + to_string(*e.b) + ")";
        case NodeKind::sub: return "(" + to_string(*e.a) + " - " + to_string(*e.b) + ")";
        case NodeKind::mul: return "(" + to_string(*e.a) + "*" + to_string(*e.b) + ")";
        case NodeKind::div: return "(" + to_string(*e.a) + "/" + to_string(*e.b) + ")";
    }
    return {};
}

template <class T>
T apply_func(Func f, const T& x) {
    using std::asin, std::cos, std::exp, std::sin, std::sqrt, std::tan;
    const double v = value_of(x);
    switch (f) {
        case Func::sin: return sin(x);
        case Func::cos: return cos(x);
        case Func::tan:
            if (std::cos(v) == 0.0) throw DomainError("tan", "argument at a pole");
            return tan(x);
        case Func::asin:
            if (!(std::abs(v) < 1.0))
                throw DomainError("asin", "argument " + std::to_string(v) + " outside (-1, 1)");
            return asin(x);
        case Func::sqrt:
            if (v < 0.0) throw DomainError("sqrt", "negative argument " + std::to_string(v));
            return sqrt(x);
        case Func::exp: return exp(x);
    }
    throw ArgumentError("unknown function");
}

template <class T>
T eval_expr(const Expr& e, std::span<const T> left, std::span<const T> right,
            std::span<const double> params) {
    const auto at = [](std::span<const T> v, std::size_t i, const char* what) -> const T& {
        if (i >= v.size()) throw ArgumentError(std::string("eval_expr: missing ") + what + " value");
        return v[i];
    };
    switch (e.kind) {
        case NodeKind::number: return T(e.number);
        case NodeKind::left_coord: return at(left, e.index, "left coordinate");
        case NodeKind::right_coord: return at(right, e.index, "right coordinate");
        case NodeKind::param:
            if (e.index >= params.size()) throw ArgumentError("eval_expr: missing parameter " + e.text);
            return T(params[e.index]);
        case NodeKind::neg: return -eval_expr(*e.a, left, right, params);
        case NodeKind::add: return eval_expr(*e.a, left, right, params) + eval_expr(*e.b, left, right, params);
        case NodeKind::sub: return eval_expr(*e.a, left, right, params) - eval_expr(*e.b, left, right, params);
        case NodeKind::mul: return eval_expr(*e.a, left, right, params) * eval_expr(*e.b, left, right, params);
        case NodeKind::div: {
            const T den = eval_expr(*e.b, left, right, params);
            if (value_of(den) == 0.0) throw DomainError("divide", "division by zero");
            return eval_expr(*e.a, left, right, params) / den;
        }
        case NodeKind::func: return apply_func(e.func, eval_expr(*e.a, left, right, params));
        case NodeKind::power: return powi(eval_expr(*e.a, left, right, params), e.exponent);
    }
    throw ArgumentError("eval_expr: corrupt node");
}

template double apply_func<double>(Func, const double&);
template Jet2 apply_func<Jet2>(Func, const Jet2&);
template double eval_expr<double>(const Expr&, std::span<const double>, std::span<const double>,
                                  std::span<const double>);
template Jet2 eval_expr<Jet2>(const Expr&, std::span<const Jet2>, std::span<const Jet2>,
                              std::span<const double>);

Polynomial to_polynomial(const Expr& e) {
    switch (e.kind) {
        case NodeKind::number: return Polynomial(parse_decimal(number_text(e)));
        case NodeKind::left_coord: return Polynomial::variable(e.text + "'");
        case NodeKind::right_coord:
        case NodeKind::param: return Polynomial::variable(e.text);
        case NodeKind::neg: return -to_polynomial(*e.a);
        case NodeKind::add: return to_polynomial(*e.a) + to_polynomial(*e.b);
        case NodeKind::sub: return to_polynomial(*e.a) - to_polynomial(*e.b);
        case NodeKind::mul: return to_polynomial(*e.a) * to_polynomial(*e.b);
        case NodeKind::power: return to_polynomial(*e.a).pow(static_cast<unsigned>(e.exponent));
        case NodeKind::div: {
            const Polynomial d = to_polynomial(*e.b);
            if (!d.is_constant() || d.is_zero())
                throw ValidationError("polynomial expression divides by a non-constant or zero");
            const Rational c = d.terms().begin()->second;
            return to_polynomial(*e.a) * Polynomial(Rational(1) / c);
        }
        case NodeKind::func:
            throw ValidationError(std::string("function '") + func_name(e.func) +
                                  "' in a polynomial expression");
    }
    throw ValidationError("corrupt node");
}

ExprPtr make_number(double v) {
    auto n = std::make_shared<Expr>();
    n->kind = NodeKind::number;
    n->number = v;
    return n;
}

ExprPtr make_ref(NodeKind kind, std::size_t index, std::string name) {
    auto n = std::make_shared<Expr>();
    n->kind = kind;
    n->index = index;
    n->text = std::move(name);
    return n;
}

ExprPtr make_unary(NodeKind kind, ExprPtr a) {
    auto n = std::make_shared<Expr>();
    n->kind = kind;
    n->a = std::move(a);
    return n;
}

ExprPtr make_binary(NodeKind kind, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<Expr>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

}  // namespace gaq
