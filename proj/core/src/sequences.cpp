#include "halfstep/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "halfstep/errors.hpp"

namespace halfstep {

namespace {

constexpr double kNewtonMinDerivative = 1e-300;

bool opposite_signs(double fa, double fb) { return (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0); }

struct BisectionRun {
    std::vector<double> midpoints;
    double lo;
    double hi;
};

BisectionRun run_bisection(const FunctionSpec& s, double a, double b, double tol, std::size_t max_halvings) {
    double lo = a;
    double hi = b;
    double flo = eval_spec(s, lo);
    const double fhi = eval_spec(s, hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi) || !opposite_signs(flo, fhi)) {
        throw NoSignChange("no sign change of f between " + std::to_string(a) + " and " + std::to_string(b));
    }
    BisectionRun run{{}, lo, hi};
    while (hi - lo > tol && run.midpoints.size() < max_halvings) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        run.midpoints.push_back(mid);
        const double fm = eval_spec(s, mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    run.lo = lo;
    run.hi = hi;
    return run;
}

}  // namespace

std::string_view rule_name(StepRule r) {
    switch (r) {
        case StepRule::averaged_picard: return "avg";
        case StepRule::plus: return "plus";
        case StepRule::minus: return "minus";
        case StepRule::newton: return "newton";
        case StepRule::bisection: return "bisect";
    }
    return "?";
}

std::string_view reason_name(const TerminationReason& r) {
    struct Names {
        std::string_view operator()(const reason::Converged&) const { return "Converged"; }
        std::string_view operator()(const reason::MaxIterations&) const { return "MaxIterations"; }
        std::string_view operator()(const reason::CycleDetected&) const { return "CycleDetected"; }
        std::string_view operator()(const reason::LeftInterval&) const { return "LeftInterval"; }
        std::string_view operator()(const reason::NonFiniteValue&) const { return "NonFiniteValue"; }
        std::string_view operator()(const reason::ZeroDerivative&) const { return "ZeroDerivative"; }
    };
    return std::visit(Names{}, r);
}

void StopConfig::validate() const {
    if (!(atol > 0.0 && rtol > 0.0 && residual_cap > 0.0 && cycle_tol > 0.0)) {
        throw InvalidInput("tolerances must be positive");
    }
    if (max_iters < 1) throw InvalidInput("max_iters must be at least 1");
    if (cycle_window < 2) throw InvalidInput("cycle_window must be at least 2");
    if (!(std::isfinite(interval.lo) && std::isfinite(interval.hi) && interval.lo < interval.hi)) {
        throw InvalidInterval("interval must be finite with a < b");
    }
}

std::optional<std::size_t> IterationTrace::period() const {
    if (const auto* c = std::get_if<reason::CycleDetected>(&reason)) return c->period;
    return std::nullopt;
}

double step(StepRule rule, const FunctionSpec& s, double x) {
    switch (rule) {
        case StepRule::averaged_picard: return (x + eval_spec(s, x)) / 2.0;
        case StepRule::plus: return x + eval_spec(s, x) / 2.0;
        case StepRule::minus: return x - eval_spec(s, x) / 2.0;
        case StepRule::newton: {
            const Dual d = eval_spec_dual(s, x);
            if (std::fabs(d.der) < kNewtonMinDerivative) {
                throw ZeroDerivative("Newton step with vanishing derivative at x = " + std::to_string(x));
            }
            return x - d.val / d.der;
        }
        case StepRule::bisection: break;
    }
    throw InvalidInput("bisection has no pointwise step");
}

IterationTrace iterate(StepRule rule, const FunctionSpec& s, double x0, const StopConfig& cfg) {
    cfg.validate();
    if (rule == StepRule::bisection) return bisect_trace(s, cfg);
    if (!cfg.interval.contains(x0)) throw InvalidInput("x0 outside the interval");

    std::vector<double> xs{x0};
    std::optional<TerminationReason> why;
    double x = x0;
    for (std::size_t n = 1; n <= cfg.max_iters && !why; ++n) {
        double next;
        try {
            next = step(rule, s, x);
        } catch (const ZeroDerivative&) {
            why = reason::ZeroDerivative{};
            break;
        }
        xs.push_back(next);
        const double g = eval_spec(s, next);
        const double dx = std::fabs(next - x);
        if (!std::isfinite(next) || !std::isfinite(g)) {
            why = reason::NonFiniteValue{};
        } else if (cfg.enforce_interval && !cfg.interval.contains(next)) {
            why = reason::LeftInterval{next};
        } else if (dx <= cfg.atol + cfg.rtol * std::fabs(next) &&
                   std::max(std::fabs(eval_unscaled(s, next)), std::fabs(g)) <= cfg.residual_cap) {
            why = reason::Converged{dx};
        } else if (dx > cfg.cycle_tol) {
            const std::size_t last = xs.size() - 1;
            for (std::size_t k = 2; k <= cfg.cycle_window && k <= last; ++k) {
                if (std::fabs(next - xs[last - k]) <= cfg.cycle_tol) {
                    why = reason::CycleDetected{k};
                    break;
                }
            }
        }
        x = next;
    }
    if (!why) why = reason::MaxIterations{};

    const std::size_t steps = xs.size() - 1;
    const double residual = std::fabs(eval_unscaled(s, xs.back()));
    return IterationTrace{rule, s, x0, std::move(xs), *why, residual, steps};
}

std::vector<double> orbit(StepRule rule, const FunctionSpec& s, double x0, std::size_t count) {
    std::vector<double> xs;
    if (count == 0) return xs;
    xs.reserve(count);
    xs.push_back(x0);
    while (xs.size() < count) {
        try {
            xs.push_back(step(rule, s, xs.back()));
        } catch (const ZeroDerivative&) {
            break;
        }
    }
    return xs;
}

double bisect(const FunctionSpec& s, double a, double b, double tol) {
    if (!(a < b) || !(tol > 0.0)) throw InvalidInput("bisect needs a < b and tol > 0");
    const auto run = run_bisection(s, a, b, tol, std::numeric_limits<std::size_t>::max());
    return run.lo + (run.hi - run.lo) / 2.0;
}

IterationTrace bisect_trace(const FunctionSpec& s, const StopConfig& cfg) {
    cfg.validate();
    const Interval& iv = cfg.interval;
    const double tol = cfg.atol + cfg.rtol * std::max(std::fabs(iv.lo), std::fabs(iv.hi));
    auto run = run_bisection(s, iv.lo, iv.hi, tol, cfg.max_iters);
    const double width = run.hi - run.lo;
    const double root = run.lo + width / 2.0;
    std::vector<double> xs = std::move(run.midpoints);
    if (xs.empty() || xs.back() != root) xs.push_back(root);
    TerminationReason why = reason::MaxIterations{};
    if (width <= tol || root <= run.lo || root >= run.hi) why = reason::Converged{width};
    const double x0 = xs.front();
    const std::size_t steps = xs.size() - 1;
    const double residual = std::fabs(eval_unscaled(s, root));
    return IterationTrace{StepRule::bisection, s, x0, std::move(xs), why, residual, steps};
}

}  // namespace halfstep
