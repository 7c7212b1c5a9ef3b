#pragma once

#include <memory>
#include <string>

#include "mufold/polynomial.hpp"

namespace mufold {

// Sum-of-terms expression tree over x, y, z, t, u with integer/rational
// literals and the operators + - * ^ (non-negative integer exponents only).
struct ExprNode {
    enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Power };

    Kind kind;
    Rational literal;       // Literal
    Var variable = Var::x;  // Variable
    int exponent = 0;       // Power
    std::unique_ptr<ExprNode> lhs, rhs;
};

struct ExprAst {
    std::unique_ptr<ExprNode> root;

    // every tree lowers to one canonical polynomial
    Polynomial lower() const;
};

// Precedence: ^ above unary minus above * above binary +/-. Implicit
// multiplication is rejected; whitespace is insignificant. SyntaxError and
// UnknownVariable carry "line:column" positions in their message.
ExprAst parse_expr(const std::string& src);

// parse_expr + lower
Polynomial parse_polynomial(const std::string& src);

} // namespace mufold
