#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "halfstep/dual.hpp"
#include "halfstep/expr.hpp"

namespace halfstep {

struct Interval {
    double lo;
    double hi;

    bool contains(double x) const { return lo <= x && x <= hi; }
    double midpoint() const { return lo + (hi - lo) / 2.0; }
};

enum class BuiltinId {
    cubic_paper,               // x^3 - 2x + 2
    counterexample_piecewise,  // four-branch map of [0,1] with a period-4 orbit
    line_2x_minus_1,
    cbrt,
    notallowed_f,
    notallowed_g,
};

/// Arbitrary callable body returning value and derivative.
using CustomBody = std::function<Dual(double)>;

/// An evaluable function f together with a scaling divisor M; evaluates f(x)/M.
class FunctionSpec {
public:
    using Body = std::variant<Expr, BuiltinId, CustomBody>;

    FunctionSpec(Body body, std::string label, double scale_divisor = 1.0);

    static FunctionSpec from_expr(const Expr& e, std::string label);
    static FunctionSpec from_source(std::string_view source);

    const Body& body() const { return body_; }
    const std::string& label() const { return label_; }
    double scale_divisor() const { return scale_; }

    /// Same body with divisor M. Throws InvalidInput unless M is finite and > 0.
    FunctionSpec with_scale(double m) const;

private:
    Body body_;
    std::string label_;
    double scale_;
};

/// Fixture with M = 1.
FunctionSpec lookup(BuiltinId id);
/// By CLI name (`cubic-paper`, ...). Throws UnknownBuiltin.
FunctionSpec lookup(std::string_view name);

std::string_view builtin_name(BuiltinId id);

/// body(x) / M.
double eval_spec(const FunctionSpec& s, double x);
/// body(x), ignoring the divisor.
double eval_unscaled(const FunctionSpec& s, double x);

/// (body(x)/M, body'(x)/M). Piecewise built-ins take the value from the left
/// branch at a breakpoint (as eval_spec does) and the derivative from the right.
Dual eval_spec_dual(const FunctionSpec& s, double x);

struct CorpusEntry {
    BuiltinId id;
    std::string_view name;
    std::string label;
    std::vector<Interval> intervals;
};

std::vector<CorpusEntry> list();

}  // namespace halfstep
