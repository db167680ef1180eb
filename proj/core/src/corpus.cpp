#include "halfstep/corpus.hpp"

#include <array>
#include <cmath>

#include "halfstep/errors.hpp"

namespace halfstep {

namespace {

// Rational constants stay as integer pairs and are divided only when used.
struct Rational {
    int num;
    int den;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// k * (x - h) computed as (num * (x - h)) / den, which keeps k*(x-h) exact
// whenever num*(x-h) is.
double scaled_offset(Rational k, double x, Rational h) {
    return (static_cast<double>(k.num) * (x - h.value())) / static_cast<double>(k.den);
}

// f(x) = 1                on [0, 3/8]
//        -2x + 7/4 = 2(7/8 - x)    on (3/8, 7/12]
//        -6x + 49/12 = 6(49/72 - x) on (7/12, 49/72]
//        0                on (49/72, 1]
constexpr Rational kB1{3, 8};
constexpr Rational kB2{7, 12};
constexpr Rational kB3{49, 72};
constexpr Rational kHalf{1, 2};

int counterexample_branch(double x, bool right_at_break) {
    const double b[] = {kB1.value(), kB2.value(), kB3.value()};
    int i = 0;
    while (i < 3 && (right_at_break ? x >= b[i] : x > b[i])) ++i;
    return i;
}

double counterexample_branch_value(int branch, double x) {
    switch (branch) {
        case 0: return 1.0;
        case 1: return scaled_offset({-2, 1}, x, {7, 8});
        case 2: return scaled_offset({-6, 1}, x, kB3);
        default: return 0.0;
    }
}

constexpr double kCounterexampleSlopes[] = {0.0, -2.0, -6.0, 0.0};

Dual counterexample(double x) {
    const double v = counterexample_branch_value(counterexample_branch(x, false), x);
    return {v, kCounterexampleSlopes[counterexample_branch(x, true)]};
}

// f(x) = 2/3 (x - 1/2) on [-1, 1/2], 2x - 1 on (1/2, 1].
Dual notallowed(double x) {
    const double v = x <= kHalf.value() ? scaled_offset({2, 3}, x, kHalf) : 2.0 * x - 1.0;
    const double d = x < kHalf.value() ? 2.0 / 3.0 : 2.0;
    return {v, d};
}

const Expr& cubic_expr() {
    static const Expr e = parse("x^3-2*x+2");
    return e;
}
const Expr& line_expr() {
    static const Expr e = parse("2*x-1");
    return e;
}
const Expr& cbrt_expr() {
    static const Expr e = parse("cbrt(x)");
    return e;
}

Dual builtin_dual(BuiltinId id, double x) {
    switch (id) {
        case BuiltinId::cubic_paper: return eval_dual(cubic_expr(), x);
        case BuiltinId::line_2x_minus_1: return eval_dual(line_expr(), x);
        case BuiltinId::cbrt: return eval_dual(cbrt_expr(), x);
        case BuiltinId::counterexample_piecewise: return counterexample(x);
        case BuiltinId::notallowed_f: return notallowed(x);
        case BuiltinId::notallowed_g: return -notallowed(x);
    }
    throw UnknownBuiltin("unknown builtin id");
}

double builtin_value(BuiltinId id, double x) {
    switch (id) {
        case BuiltinId::cubic_paper: return eval(cubic_expr(), x);
        case BuiltinId::line_2x_minus_1: return eval(line_expr(), x);
        case BuiltinId::cbrt: return eval(cbrt_expr(), x);
        default: return builtin_dual(id, x).val;
    }
}

struct BuiltinInfo {
    BuiltinId id;
    std::string_view name;
    std::string_view label;
};

constexpr std::array<BuiltinInfo, 6> kBuiltins{{
    {BuiltinId::cubic_paper, "cubic-paper", "x^3 - 2x + 2"},
    {BuiltinId::counterexample_piecewise, "counterexample-piecewise",
     "piecewise map of [0,1] with a period-4 averaged orbit"},
    {BuiltinId::line_2x_minus_1, "line-2x-1", "2x - 1"},
    {BuiltinId::cbrt, "cbrt", "x^(1/3)"},
    {BuiltinId::notallowed_f, "notallowed-f", "2/3 (x - 1/2) | 2x - 1, break at 1/2"},
    {BuiltinId::notallowed_g, "notallowed-g", "-2/3 (x - 1/2) | 1 - 2x, break at 1/2"},
}};

const BuiltinInfo& info(BuiltinId id) {
    for (const auto& b : kBuiltins) {
        if (b.id == id) return b;
    }
    throw UnknownBuiltin("unknown builtin id");
}

}  // namespace

FunctionSpec::FunctionSpec(Body body, std::string label, double scale_divisor)
    : body_(std::move(body)), label_(std::move(label)), scale_(scale_divisor) {
    if (!(std::isfinite(scale_) && scale_ > 0.0)) {
        throw InvalidInput("scale divisor must be finite and positive");
    }
}

FunctionSpec FunctionSpec::from_expr(const Expr& e, std::string label) {
    return FunctionSpec(e, std::move(label));
}

FunctionSpec FunctionSpec::from_source(std::string_view source) {
    return FunctionSpec(parse(source), std::string(source));
}

FunctionSpec FunctionSpec::with_scale(double m) const { return FunctionSpec(body_, label_, m); }

FunctionSpec lookup(BuiltinId id) {
    const auto& b = info(id);
    return FunctionSpec(id, std::string(b.name));
}

FunctionSpec lookup(std::string_view name) {
    for (const auto& b : kBuiltins) {
        if (b.name == name) return lookup(b.id);
    }
    throw UnknownBuiltin("unknown builtin '" + std::string(name) + "'");
}

std::string_view builtin_name(BuiltinId id) { return info(id).name; }

double eval_unscaled(const FunctionSpec& s, double x) {
    const auto& body = s.body();
    if (const auto* e = std::get_if<Expr>(&body)) return eval(*e, x);
    if (const auto* id = std::get_if<BuiltinId>(&body)) return builtin_value(*id, x);
    return std::get<CustomBody>(body)(x).val;
}

double eval_spec(const FunctionSpec& s, double x) { return eval_unscaled(s, x) / s.scale_divisor(); }

Dual eval_spec_dual(const FunctionSpec& s, double x) {
    const auto& body = s.body();
    Dual d;
    if (const auto* e = std::get_if<Expr>(&body)) {
        d = eval_dual(*e, x);
    } else if (const auto* id = std::get_if<BuiltinId>(&body)) {
        d = builtin_dual(*id, x);
    } else {
        d = std::get<CustomBody>(body)(x);
    }
    const double m = s.scale_divisor();
    return {d.val / m, d.der / m};
}

std::vector<CorpusEntry> list() {
    const double two_thirds = 2.0 / 3.0;
    std::vector<CorpusEntry> out;
    for (const auto& b : kBuiltins) {
        std::vector<Interval> iv;
        switch (b.id) {
            case BuiltinId::cubic_paper: iv = {{-2.0, 0.0}, {-2.0, 10.0}}; break;
            case BuiltinId::counterexample_piecewise: iv = {{0.0, 1.0}}; break;
            case BuiltinId::line_2x_minus_1: iv = {{two_thirds, 1.0}, {1.0, 2.0}}; break;
            case BuiltinId::cbrt:
            case BuiltinId::notallowed_f:
            case BuiltinId::notallowed_g: iv = {{-1.0, 1.0}}; break;
        }
        out.push_back({b.id, b.name, std::string(b.label), std::move(iv)});
    }
    return out;
}

}  // namespace halfstep
