#include "halfstep/expr.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <type_traits>

#include "halfstep/numfmt.hpp"

namespace halfstep {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same_node(const Expr::Node& a, const Expr::Node& b);

bool same_ptr(const std::shared_ptr<const Expr::Node>& a,
              const std::shared_ptr<const Expr::Node>& b) {
    return a == b || same_node(*a, *b);
}

bool same_node(const Expr::Node& a, const Expr::Node& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const Expr::Constant& c) {
                return std::bit_cast<std::uint64_t>(c.value) ==
                       std::bit_cast<std::uint64_t>(std::get<Expr::Constant>(b).value);
            },
            [](const Expr::Variable&) { return true; },
            [&](const Expr::Unary& u) {
                const auto& v = std::get<Expr::Unary>(b);
                return u.op == v.op && same_ptr(u.child, v.child);
            },
            [&](const Expr::Binary& l) {
                const auto& r = std::get<Expr::Binary>(b);
                return l.op == r.op && same_ptr(l.left, r.left) && same_ptr(l.right, r.right);
            },
        },
        a);
}

double apply(UnaryOp op, double a) {
    switch (op) {
        case UnaryOp::neg: return -a;
        case UnaryOp::abs: return std::fabs(a);
        case UnaryOp::sqrt: return std::sqrt(a);
        case UnaryOp::cbrt: return std::cbrt(a);
        case UnaryOp::exp: return std::exp(a);
        case UnaryOp::ln: return std::log(a);
        case UnaryOp::sin: return std::sin(a);
        case UnaryOp::cos: return std::cos(a);
        case UnaryOp::tan: return std::tan(a);
    }
    return std::nan("");
}

Dual apply(UnaryOp op, Dual a) {
    switch (op) {
        case UnaryOp::neg: return -a;
        case UnaryOp::abs: return abs(a);
        case UnaryOp::sqrt: return sqrt(a);
        case UnaryOp::cbrt: return cbrt(a);
        case UnaryOp::exp: return exp(a);
        case UnaryOp::ln: return log(a);
        case UnaryOp::sin: return sin(a);
        case UnaryOp::cos: return cos(a);
        case UnaryOp::tan: return tan(a);
    }
    return {std::nan(""), std::nan("")};
}

template <class T>
T apply(BinaryOp op, T a, T b) {
    using std::pow;
    switch (op) {
        case BinaryOp::add: return a + b;
        case BinaryOp::sub: return a - b;
        case BinaryOp::mul: return a * b;
        case BinaryOp::div: return a / b;
        case BinaryOp::pow: return pow(a, b);
    }
    return a;
}

template <class T>
T lift(double v) {
    if constexpr (std::is_same_v<T, Dual>) {
        return Dual::constant(v);
    } else {
        return v;
    }
}

// Shared by eval and eval_dual so both perform the same double operations.
template <class T>
T evaluate(const Expr::Node& n, T x) {
    return std::visit(
        overloaded{
            [](const Expr::Constant& c) { return lift<T>(c.value); },
            [&](const Expr::Variable&) { return x; },
            [&](const Expr::Unary& u) { return apply(u.op, evaluate(*u.child, x)); },
            [&](const Expr::Binary& b) {
                const T l = evaluate(*b.left, x);
                const T r = evaluate(*b.right, x);
                return apply(b.op, l, r);
            },
        },
        n);
}

char op_char(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return '+';
        case BinaryOp::sub: return '-';
        case BinaryOp::mul: return '*';
        case BinaryOp::div: return '/';
        case BinaryOp::pow: return '^';
    }
    return '?';
}

void print_to(const Expr::Node& n, std::string& out) {
    std::visit(overloaded{
                   [&](const Expr::Constant& c) { out += shortest(c.value); },
                   [&](const Expr::Variable&) { out += 'x'; },
                   [&](const Expr::Unary& u) {
                       if (u.op == UnaryOp::neg) {
                           out += "(-";
                       } else {
                           out += unary_name(u.op);
                           out += '(';
                       }
                       print_to(*u.child, out);
                       out += ')';
                   },
                   [&](const Expr::Binary& b) {
                       out += '(';
                       print_to(*b.left, out);
                       out += ' ';
                       out += op_char(b.op);
                       out += ' ';
                       print_to(*b.right, out);
                       out += ')';
                   },
               },
               n);
}

}  // namespace

Expr Expr::constant(double v) { return Expr(std::make_shared<const Node>(Constant{v})); }

Expr Expr::variable() { return Expr(std::make_shared<const Node>(Variable{})); }

Expr Expr::unary(UnaryOp op, Expr child) {
    return Expr(std::make_shared<const Node>(Unary{op, std::move(child.node_)}));
}

Expr Expr::binary(BinaryOp op, Expr left, Expr right) {
    return Expr(std::make_shared<const Node>(Binary{op, std::move(left.node_), std::move(right.node_)}));
}

bool operator==(const Expr& a, const Expr& b) { return same_ptr(a.node_, b.node_); }

double eval(const Expr& e, double x) { return evaluate<double>(e.node(), x); }

Dual eval_dual(const Expr& e, double x) { return evaluate<Dual>(e.node(), Dual::variable(x)); }

std::string print(const Expr& e) {
    std::string out;
    print_to(e.node(), out);
    return out;
}

std::string_view unary_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::neg: return "neg";
        case UnaryOp::abs: return "abs";
        case UnaryOp::sqrt: return "sqrt";
        case UnaryOp::cbrt: return "cbrt";
        case UnaryOp::exp: return "exp";
        case UnaryOp::ln: return "ln";
        case UnaryOp::sin: return "sin";
        case UnaryOp::cos: return "cos";
        case UnaryOp::tan: return "tan";
    }
    return "?";
}

}  // namespace halfstep
