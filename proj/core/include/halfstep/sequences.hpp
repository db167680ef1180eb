#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "halfstep/corpus.hpp"

namespace halfstep {

/// Iteration schemes for a function g (a FunctionSpec, already divided by M):
///   averaged_picard  x' = (x + g(x)) / 2
///   plus             x' = x + g(x) / 2
///   minus            x' = x - g(x) / 2
///   newton           x' = x - g(x) / g'(x)
///   bisection        bracket halving; not a pointwise step
enum class StepRule { averaged_picard, plus, minus, newton, bisection };

std::string_view rule_name(StepRule r);

/// Stopping rules for iterate(). Defaults are tuned for binary64.
struct StopConfig {
    double atol = 1e-13;
    double rtol = 1e-13;
    double residual_cap = 1e-9;
    std::size_t max_iters = 10000;
    std::size_t cycle_window = 16;
    double cycle_tol = 1e-9;
    Interval interval{0.0, 1.0};
    bool enforce_interval = true;

    /// Throws InvalidInput when a field is out of range.
    void validate() const;
};

namespace reason {
struct Converged { double step_size; };
struct MaxIterations {};
struct CycleDetected { std::size_t period; };
struct LeftInterval { double escapee; };
struct NonFiniteValue {};
struct ZeroDerivative {};
}  // namespace reason

using TerminationReason =
    std::variant<reason::Converged, reason::MaxIterations, reason::CycleDetected,
                 reason::LeftInterval, reason::NonFiniteValue, reason::ZeroDerivative>;

std::string_view reason_name(const TerminationReason& r);

struct IterationTrace {
    StepRule rule;
    FunctionSpec spec;
    double x0;
    std::vector<double> iterates;  // x0 first
    TerminationReason reason;
    double residual;  // |f(last)| with the divisor removed
    std::size_t steps_taken;

    double last() const { return iterates.back(); }
    bool converged() const { return std::holds_alternative<reason::Converged>(reason); }
    std::optional<std::size_t> period() const;
};

/// One application of `rule`. Throws ZeroDerivative for Newton when |g'(x)| < 1e-300,
/// InvalidInput for Bisection.
double step(StepRule rule, const FunctionSpec& s, double x);

/// Runs `rule` from x0 until the first termination condition fires. Checked in
/// this order after every step:
///   1. new iterate or g(new iterate) non-finite     -> NonFiniteValue
///   2. enforce_interval and iterate outside [a, b]   -> LeftInterval
///   3. |dx| <= atol + rtol|x| and residual <= cap    -> Converged
///   4. iterate within cycle_tol of one of the last cycle_window iterates
///      (ignoring the immediate predecessor) while still moving -> CycleDetected
///   5. max_iters steps taken                         -> MaxIterations
/// The residual test uses max(|f|, |f/M|) so it holds on both the scaled and the
/// unscaled function. Bisection is dispatched to bisect_trace().
IterationTrace iterate(StepRule rule, const FunctionSpec& s, double x0, const StopConfig& cfg);

/// The first `count` iterates (x0 included) with no termination checks. Stops
/// early only when Newton hits a zero derivative.
std::vector<double> orbit(StepRule rule, const FunctionSpec& s, double x0, std::size_t count);

/// Midpoint of a bracket of width <= tol around a sign change of s in [a, b].
/// Uses at most ceil(log2((b - a) / tol)) + 2 evaluations. Throws NoSignChange.
double bisect(const FunctionSpec& s, double a, double b, double tol);

/// Bisection as a trace of midpoints over cfg.interval, stopping at width
/// <= atol + rtol * max(|a|, |b|).
IterationTrace bisect_trace(const FunctionSpec& s, const StopConfig& cfg);

}  // namespace halfstep
