#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "halfstep/dual.hpp"

namespace halfstep {

enum class UnaryOp { neg, abs, sqrt, cbrt, exp, ln, sin, cos, tan };
enum class BinaryOp { add, sub, mul, div, pow };

/// Immutable AST of a univariate real function of `x`.
///
/// An Expr is a cheap handle onto a shared, never-mutated tree, so copies are
/// O(1) and concurrent readers need no synchronization. Equality is
/// structural: constants compare by bit pattern.
class Expr {
public:
    struct Constant { double value; };
    struct Variable {};
    struct Unary;
    struct Binary;
    using Node = std::variant<Constant, Variable, Unary, Binary>;

    struct Unary {
        UnaryOp op;
        std::shared_ptr<const Node> child;
    };
    struct Binary {
        BinaryOp op;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    static Expr constant(double v);
    static Expr variable();
    static Expr unary(UnaryOp op, Expr child);
    static Expr binary(BinaryOp op, Expr left, Expr right);

    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    const Node& node() const { return *node_; }

    friend bool operator==(const Expr& a, const Expr& b);

private:
    std::shared_ptr<const Node> node_;
};

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' factor)?
///   unary  := '-' unary | atom
///   atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'
/// Throws SyntaxError or UnknownIdentifier.
Expr parse(std::string_view source);

/// Plain binary64 evaluation; non-finite results are returned, never thrown.
double eval(const Expr& e, double x);

/// Value and derivative; `.val` is bit-identical to eval(e, x).
Dual eval_dual(const Expr& e, double x);

/// Fully parenthesized canonical text that parses back to the same tree.
std::string print(const Expr& e);

std::string_view unary_name(UnaryOp op);

}  // namespace halfstep
