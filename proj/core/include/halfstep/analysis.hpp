#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "halfstep/corpus.hpp"
#include "halfstep/sequences.hpp"

namespace halfstep {

/// Grid samples of f' and of the sign of f. A sampled surrogate for the
/// "for every x in (a, b)" derivative hypotheses, not a proof.
struct DerivativeBounds {
    double deriv_min;
    double deriv_max;
    bool nonfinite_seen;  // some |f'| sample was non-finite or above 1e6
    std::size_t sign_changes;
};

inline constexpr double kDerivativeBlowup = 1e6;
inline constexpr double kScaleSafety = 1.05;

inline constexpr const char* kWarnNoSignChange = "no sign change at endpoints";
inline constexpr const char* kWarnMultipleSignChanges =
    "uniqueness hypothesis unverifiable — multiple sign changes sampled";
inline constexpr const char* kWarnDerivativeBound = "derivative bound hypothesis violated";

/// Evaluates f' on the n + 1 uniform points of [a, b] plus two probes at
/// relative distance 1e-9 inside each endpoint. Sign changes are counted over
/// the uniform grid only. Grid points are a + ((b - a) * i) / n, so the grid
/// for 2n contains the grid for n exactly.
DerivativeBounds sample_bounds(const FunctionSpec& s, double a, double b, std::size_t n);

/// Smallest divisor M >= 1 that brings the bound the rule needs within 2, with
/// a 5% margin, rounded up to three significant digits:
///   minus: f'/M <= 2      plus: f'/M >= -2
double choose_scale(double deriv_min, double deriv_max, StepRule rule);

struct AnalysisReport {
    Interval interval;
    double f_a;
    double f_b;
    double deriv_min;
    double deriv_max;
    bool deriv_nonfinite_seen;
    std::size_t sign_changes_sampled;
    std::optional<StepRule> recommended;  // plus, minus or none
    double scale_divisor;                 // relative to the FunctionSpec's own divisor
    std::vector<std::string> warnings;
};

/// Endpoint sign pattern picks the direction: f(a) > 0 > f(b) -> plus,
/// f(a) < 0 < f(b) -> minus.
AnalysisReport recommend(const FunctionSpec& s, double a, double b, std::size_t n = 1024);

struct NewtonPrecheck {
    double center;
    double K;       // sampled sup |f''/f'|
    double delta;
    double radius;  // min(delta, 1/K)

    bool satisfied_at(double x0) const { return std::fabs(x0 - center) <= radius; }
};

/// Samples |f''/f'| on [center - delta, center + delta]; f'' is a central
/// difference of the dual-number f'. Any non-finite sample gives K = inf and
/// radius = 0.
NewtonPrecheck newton_precheck(const FunctionSpec& s, double center, double delta, std::size_t n);

}  // namespace halfstep
