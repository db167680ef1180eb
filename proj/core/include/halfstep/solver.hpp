#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "halfstep/analysis.hpp"
#include "halfstep/corpus.hpp"
#include "halfstep/sequences.hpp"

namespace halfstep {

enum class Method { automatic, plus, minus, averaged_picard, newton, bisection };

struct ScaleOption {
    enum class Kind { automatic, fixed, off };
    Kind kind = Kind::automatic;
    double value = 1.0;

    static ScaleOption automatic() { return {}; }
    static ScaleOption off() { return {Kind::off, 1.0}; }
    static ScaleOption fixed(double m) { return {Kind::fixed, m}; }
};

struct SolveOptions {
    Method method = Method::automatic;
    ScaleOption scale;
    std::optional<double> x0;  // nullopt: interval midpoint
    StopConfig stop;           // interval is overwritten by solve()
    std::size_t grid_n = 1024;
};

enum class Verdict { converged, converged_with_warnings, failed };

struct SolveResult {
    AnalysisReport analysis;
    IterationTrace trace;
    std::optional<double> root;  // present iff the trace converged
    double residual_unscaled;
    double applied_scale;  // divisor the iteration actually used
    Verdict verdict;
    std::vector<std::string> warnings;

    /// "Converged", "ConvergedWithWarnings" or "Failed(<reason>)".
    std::string verdict_text() const;
};

/// Everything solve() decides before iterating.
struct SolvePlan {
    AnalysisReport analysis;
    StepRule rule;
    FunctionSpec scaled;  // input spec with the applied divisor folded in
    double x0;
    StopConfig stop;
    std::vector<std::string> warnings;
};

/// Resolves the rule a method maps to once the analysis is known. Throws
/// NoRecommendation for Method::automatic when the analysis has none.
StepRule resolve_rule(Method m, const AnalysisReport& analysis);

/// Validates inputs, analyzes, and picks rule, divisor and start point.
/// Throws InvalidInput, NoRecommendation.
SolvePlan plan(const FunctionSpec& s, double a, double b, const SolveOptions& opts);

/// analyze -> scale -> iterate. Newton always runs unscaled (dividing f by a
/// constant leaves its iterates unchanged) and is not held to [a, b], since
/// its convergence theory is local rather than interval-wide.
/// Throws InvalidInput, NoRecommendation.
SolveResult solve(const FunctionSpec& s, double a, double b, const SolveOptions& opts);

struct CompareRow {
    double x0;
    std::string method;  // rule_name(), or "auto" when no rule could be chosen
    std::string reason;  // reason_name(), or "Error(<what>)" for a cell that threw
    std::size_t steps;
    double final_value;  // NaN for a cell that threw
};

/// Runs the recommended half-step rule, Newton and bisection from each x0.
/// Rows are ordered by x0 ascending, then in that method order. Cell failures
/// become rows, never exceptions.
std::vector<CompareRow> compare(const FunctionSpec& s, double a, double b, std::vector<double> x0_grid,
                                const SolveOptions& opts);

}  // namespace halfstep
