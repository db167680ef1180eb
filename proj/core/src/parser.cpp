#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "halfstep/errors.hpp"
#include "halfstep/expr.hpp"

namespace halfstep {

namespace {

std::optional<UnaryOp> function_named(std::string_view name) {
    static constexpr UnaryOp all[] = {UnaryOp::abs, UnaryOp::sqrt, UnaryOp::cbrt, UnaryOp::exp,
                                      UnaryOp::ln,  UnaryOp::sin,  UnaryOp::cos,  UnaryOp::tan};
    for (UnaryOp op : all) {
        if (unary_name(op) == name) return op;
    }
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse_all() {
        Expr e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError(pos_, "operator or end of input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::binary(BinaryOp::add, lhs, term());
            } else if (accept('-')) {
                lhs = Expr::binary(BinaryOp::sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = Expr::binary(BinaryOp::mul, lhs, factor());
            } else if (accept('/')) {
                lhs = Expr::binary(BinaryOp::div, lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    // Right-associative: 2^3^2 == 2^(3^2).
    Expr factor() {
        Expr base = unary();
        if (accept('^')) return Expr::binary(BinaryOp::pow, base, factor());
        return base;
    }

    Expr unary() {
        if (accept('-')) return Expr::unary(UnaryOp::neg, unary());
        return atom();
    }

    Expr atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError(pos_, "number, 'x', function call or '('");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw SyntaxError(pos_, "number, 'x', function call or '('");
    }

    Expr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) throw SyntaxError(start, "digit");
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) throw SyntaxError(pos_, "exponent digits");
        }
        double value = 0.0;
        const char* first = src_.data() + start;
        const char* last = src_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) throw SyntaxError(start, "finite number literal");
        return Expr::constant(value);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "x") return Expr::variable();
        const auto op = function_named(name);
        if (!op) throw UnknownIdentifier(std::string(name), start);
        expect('(');
        Expr arg = expr();
        expect(')');
        return Expr::unary(*op, arg);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

}  // namespace halfstep
