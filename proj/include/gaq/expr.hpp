#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gaq/jet.hpp"
#include "gaq/poly.hpp"

namespace gaq {

enum class NodeKind { number, left_coord, right_coord, param, neg, add, sub, mul, div, func, power };
enum class Func { sin, cos, tan, asin, sqrt, exp };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable AST node. `text` holds the literal for numbers and the identifier
// for references; `index` is the resolved slot of a reference.
struct Expr {
    NodeKind kind = NodeKind::number;
    double number = 0.0;
    std::string text;
    std::size_t index = 0;
    Func func = Func::sin;
    int exponent = 0;
    ExprPtr a;
    ExprPtr b;
};

bool operator==(const Expr& x, const Expr& y);

// Names an expression may refer to. Unprimed coordinates resolve to the right
// factor, primed ones to the left factor.
struct Scope {
    std::vector<std::string> coords;
    std::vector<std::string> params;
    bool allow_primed = true;
};

// `line` offsets reported positions when the text is one line of a larger file.
ExprPtr parse_expression(const std::string& text, const Scope& scope, std::size_t line = 1,
                         std::size_t column_offset = 0);

std::string to_string(const Expr& e);
const char* func_name(Func f);
bool is_function_name(const std::string& name);

template <class T>
T eval_expr(const Expr& e, std::span<const T> left, std::span<const T> right,
            std::span<const double> params);

template <class T>
T apply_func(Func f, const T& x);

// Exact conversion; references become polynomial variables named by identifier
// (primed coordinates keep their prime). Throws ValidationError on functions
// or non-constant divisors.
Polynomial to_polynomial(const Expr& e);

// Programmatic builders.
ExprPtr make_number(double v);
ExprPtr make_ref(NodeKind kind, std::size_t index, std::string name);
ExprPtr make_unary(NodeKind kind, ExprPtr a);
ExprPtr make_binary(NodeKind kind, ExprPtr a, ExprPtr b);

}  // namespace gaq
