#include "mufold/parser.hpp"

#include <cctype>
#include <vector>

namespace mufold {

namespace {

constexpr int kMaxExponent = 10000;

struct Token {
    enum class Kind { Number, Variable, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    Rational number;
    Var var = Var::x;
    int line = 1, col = 1;
};

std::string at(const Token& tok) {
    return std::to_string(tok.line) + ":" + std::to_string(tok.col);
}

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 0;
                advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number());
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(identifier());
                continue;
            }
            Token tok{Token::Kind::End, Rational(0), Var::x, line_, col_};
            switch (c) {
                case '+': tok.kind = Token::Kind::Plus; break;
                case '-': tok.kind = Token::Kind::Minus; break;
                case '*': tok.kind = Token::Kind::Star; break;
                case '^': tok.kind = Token::Kind::Caret; break;
                case '/': tok.kind = Token::Kind::Slash; break;
                case '(': tok.kind = Token::Kind::LParen; break;
                case ')': tok.kind = Token::Kind::RParen; break;
                default:
                    fail(ErrorCode::SyntaxError,
                         "unexpected character '" + std::string(1, c) + "' at " + at(tok));
            }
            advance();
            out.push_back(tok);
        }
        out.push_back(Token{Token::Kind::End, Rational(0), Var::x, line_, col_ + 1});
        return out;
    }

private:
    void advance() {
        ++pos_;
        ++col_;
    }

    Token number() {
        Token tok{Token::Kind::Number, Rational(0), Var::x, line_, col_};
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits += src_[pos_];
            advance();
        }
        tok.number = Rational(Integer(digits));
        return tok;
    }

    Token identifier() {
        Token tok{Token::Kind::Variable, Rational(0), Var::x, line_, col_};
        std::string name;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            name += src_[pos_];
            advance();
        }
        auto v = name.size() == 1 ? var_from_char(name[0]) : std::nullopt;
        // v is the internal implicitization variable, not expression input
        if (!v || *v == Var::v)
            fail(ErrorCode::UnknownVariable,
                 "unknown variable '" + name + "' at " + at(tok) +
                     " (allowed: x, y, z, t, u)");
        tok.var = *v;
        return tok;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

using NodePtr = std::unique_ptr<ExprNode>;

NodePtr make_node(ExprNode::Kind k) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    return n;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    NodePtr run() {
        NodePtr e = expression();
        if (peek().kind != Token::Kind::End)
            fail(ErrorCode::SyntaxError,
                 "unexpected token at " + at(peek()) +
                     " (implicit multiplication is not allowed)");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    NodePtr expression() {
        NodePtr lhs = term();
        while (true) {
            if (accept(Token::Kind::Plus)) {
                auto n = make_node(ExprNode::Kind::Add);
                n->lhs = std::move(lhs);
                n->rhs = term();
                lhs = std::move(n);
            } else if (accept(Token::Kind::Minus)) {
                auto n = make_node(ExprNode::Kind::Subtract);
                n->lhs = std::move(lhs);
                n->rhs = term();
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (accept(Token::Kind::Star)) {
            auto n = make_node(ExprNode::Kind::Multiply);
            n->lhs = std::move(lhs);
            n->rhs = factor();
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr factor() {
        if (accept(Token::Kind::Minus)) {
            auto n = make_node(ExprNode::Kind::Negate);
            n->lhs = factor();
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (!accept(Token::Kind::Caret)) return base;
        const Token& e = peek();
        if (e.kind != Token::Kind::Number)
            fail(ErrorCode::SyntaxError,
                 "'^' needs a non-negative integer exponent at " + at(e));
        take();
        if (denominator(e.number) != 1 || e.number < 0 || e.number > kMaxExponent)
            fail(ErrorCode::SyntaxError, "exponent out of range at " + at(e));
        if (peek().kind == Token::Kind::Caret)
            fail(ErrorCode::SyntaxError,
                 "chained '^' at " + at(peek()) + " (parenthesize the base)");
        auto n = make_node(ExprNode::Kind::Power);
        n->lhs = std::move(base);
        n->exponent = static_cast<int>(numerator(e.number).get_si());
        return n;
    }

    NodePtr primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Kind::Number: {
                take();
                auto n = make_node(ExprNode::Kind::Literal);
                n->literal = tok.number;
                // rational literal: <int> / <int>
                if (peek().kind == Token::Kind::Slash) {
                    take();
                    const Token& den = peek();
                    if (den.kind != Token::Kind::Number || den.number == 0)
                        fail(ErrorCode::SyntaxError,
                             "'/' is only for rational literals, at " + at(den));
                    take();
                    n->literal /= den.number;
                }
                return n;
            }
            case Token::Kind::Variable: {
                take();
                auto n = make_node(ExprNode::Kind::Variable);
                n->variable = tok.var;
                return n;
            }
            case Token::Kind::LParen: {
                take();
                NodePtr inner = expression();
                if (!accept(Token::Kind::RParen))
                    fail(ErrorCode::SyntaxError, "missing ')' at " + at(peek()));
                return inner;
            }
            default:
                fail(ErrorCode::SyntaxError, "expected an operand at " + at(tok));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Polynomial lower_node(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::Literal: return Polynomial(n.literal);
        case ExprNode::Kind::Variable: return Polynomial::variable(n.variable);
        case ExprNode::Kind::Negate: return -lower_node(*n.lhs);
        case ExprNode::Kind::Add: return lower_node(*n.lhs) + lower_node(*n.rhs);
        case ExprNode::Kind::Subtract: return lower_node(*n.lhs) - lower_node(*n.rhs);
        case ExprNode::Kind::Multiply: return lower_node(*n.lhs) * lower_node(*n.rhs);
        case ExprNode::Kind::Power: return lower_node(*n.lhs).pow(n.exponent);
    }
    fail(ErrorCode::SyntaxError, "malformed expression tree");
}

} // namespace

Polynomial ExprAst::lower() const { return lower_node(*root); }

ExprAst parse_expr(const std::string& src) {
    ExprAst ast;
    ast.root = Parser(Lexer(src).run()).run();
    return ast;
}

Polynomial parse_polynomial(const std::string& src) {
    return parse_expr(src).lower();
}

} // namespace mufold
