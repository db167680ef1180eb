#include "halfstep/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "halfstep/errors.hpp"

namespace halfstep {

namespace {

bool is_half_step(StepRule r) { return r == StepRule::plus || r == StepRule::minus; }

Method method_for(StepRule r) {
    switch (r) {
        case StepRule::averaged_picard: return Method::averaged_picard;
        case StepRule::plus: return Method::plus;
        case StepRule::minus: return Method::minus;
        case StepRule::newton: return Method::newton;
        case StepRule::bisection: return Method::bisection;
    }
    return Method::automatic;
}

std::string error_name(const std::exception& e) {
    if (dynamic_cast<const NoSignChange*>(&e)) return "NoSignChange";
    if (dynamic_cast<const NoRecommendation*>(&e)) return "NoRecommendation";
    if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
    return "Error";
}

}  // namespace

std::string SolveResult::verdict_text() const {
    switch (verdict) {
        case Verdict::converged: return "Converged";
        case Verdict::converged_with_warnings: return "ConvergedWithWarnings";
        case Verdict::failed: break;
    }
    return "Failed(" + std::string(reason_name(trace.reason)) + ")";
}

StepRule resolve_rule(Method m, const AnalysisReport& analysis) {
    switch (m) {
        case Method::plus: return StepRule::plus;
        case Method::minus: return StepRule::minus;
        case Method::averaged_picard: return StepRule::averaged_picard;
        case Method::newton: return StepRule::newton;
        case Method::bisection: return StepRule::bisection;
        case Method::automatic: break;
    }
    if (!analysis.recommended) {
        throw NoRecommendation("no endpoint sign change; pick a method explicitly or another interval");
    }
    return *analysis.recommended;
}

SolvePlan plan(const FunctionSpec& s, double a, double b, const SolveOptions& opts) {
    if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
        throw InvalidInterval("interval must be finite with a < b");
    }
    const Interval iv{a, b};
    const double x0 = opts.x0.value_or(iv.midpoint());
    if (!std::isfinite(x0) || !iv.contains(x0)) throw InvalidInput("x0 outside the interval");
    if (opts.scale.kind == ScaleOption::Kind::fixed &&
        !(std::isfinite(opts.scale.value) && opts.scale.value > 0.0)) {
        throw InvalidInput("fixed scale must be finite and positive");
    }

    AnalysisReport analysis = recommend(s, a, b, opts.grid_n);
    const StepRule rule = resolve_rule(opts.method, analysis);
    std::vector<std::string> warnings = analysis.warnings;

    double scale = 1.0;
    if (rule != StepRule::newton && rule != StepRule::bisection) {
        switch (opts.scale.kind) {
            case ScaleOption::Kind::off: break;
            case ScaleOption::Kind::fixed: scale = opts.scale.value; break;
            case ScaleOption::Kind::automatic:
                if (is_half_step(rule)) {
                    try {
                        scale = choose_scale(analysis.deriv_min, analysis.deriv_max, rule);
                    } catch (const Unscalable&) {
                        warnings.emplace_back("no finite derivative bound; running unscaled");
                    }
                }
                break;
        }
    }

    StopConfig stop = opts.stop;
    stop.interval = iv;
    if (rule == StepRule::newton) stop.enforce_interval = false;

    return SolvePlan{std::move(analysis), rule, s.with_scale(s.scale_divisor() * scale), x0, stop,
                     std::move(warnings)};
}

SolveResult solve(const FunctionSpec& s, double a, double b, const SolveOptions& opts) {
    SolvePlan p = plan(s, a, b, opts);
    IterationTrace trace = iterate(p.rule, p.scaled, p.x0, p.stop);
    std::optional<double> root;
    if (trace.converged()) root = trace.last();
    const double residual = trace.residual;

    Verdict verdict = Verdict::failed;
    if (root) verdict = p.warnings.empty() ? Verdict::converged : Verdict::converged_with_warnings;

    const double applied = p.scaled.scale_divisor();
    return SolveResult{std::move(p.analysis), std::move(trace), root, residual,
                       applied, verdict, std::move(p.warnings)};
}

std::vector<CompareRow> compare(const FunctionSpec& s, double a, double b, std::vector<double> x0_grid,
                                const SolveOptions& opts) {
    if (x0_grid.empty()) throw InvalidInput("compare needs at least one x0");
    std::sort(x0_grid.begin(), x0_grid.end());

    std::optional<StepRule> half_step;
    std::string half_step_error;
    try {
        const AnalysisReport analysis = recommend(s, a, b, opts.grid_n);
        half_step = resolve_rule(opts.method, analysis);
    } catch (const Error& e) {
        half_step_error = error_name(e);
    }

    std::vector<CompareRow> rows;
    auto run = [&](double x0, StepRule rule) {
        const std::string label(rule_name(rule));
        SolveOptions o = opts;
        o.method = method_for(rule);
        o.x0 = x0;
        try {
            const SolveResult r = solve(s, a, b, o);
            rows.push_back({x0, label, std::string(reason_name(r.trace.reason)), r.trace.steps_taken, r.trace.last()});
        } catch (const Error& e) {
            rows.push_back({x0, label, "Error(" + error_name(e) + ")", 0, std::numeric_limits<double>::quiet_NaN()});
        }
    };
    for (double x0 : x0_grid) {
        if (half_step) {
            run(x0, *half_step);
        } else {
            rows.push_back({x0, "auto", "Error(" + half_step_error + ")", 0,
                            std::numeric_limits<double>::quiet_NaN()});
        }
        run(x0, StepRule::newton);
        run(x0, StepRule::bisection);
    }
    return rows;
}

}  // namespace halfstep
