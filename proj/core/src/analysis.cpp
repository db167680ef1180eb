#include "halfstep/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "halfstep/errors.hpp"

namespace halfstep {

namespace {

void check_interval(double a, double b) {
    if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
        throw InvalidInterval("interval must be finite with a < b");
    }
}

double grid_point(double a, double b, std::size_t i, std::size_t n) {
    if (i == n) return b;
    return a + ((b - a) * static_cast<double>(i)) / static_cast<double>(n);
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Rounds v > 0 up to three significant digits.
double round_up_3sig(double v) {
    const int e = static_cast<int>(std::floor(std::log10(v))) - 2;
    const double q = std::pow(10.0, std::abs(e));
    const double scaled = e < 0 ? v * q : v / q;
    // Absorb representation noise such as 1.05 * 10 / 2 landing a hair above 5.25.
    const double r = std::ceil(scaled * (1.0 - 1e-12));
    return e < 0 ? r / q : r * q;
}

double central_second(const FunctionSpec& s, double x) {
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::fabs(x));
    return (eval_spec_dual(s, x + h).der - eval_spec_dual(s, x - h).der) / (2.0 * h);
}

}  // namespace

DerivativeBounds sample_bounds(const FunctionSpec& s, double a, double b, std::size_t n) {
    check_interval(a, b);
    if (n < 2) throw InvalidInput("grid needs n >= 2");

    DerivativeBounds out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                         false, 0};
    auto take = [&](double der) {
        if (!std::isfinite(der) || std::fabs(der) > kDerivativeBlowup) out.nonfinite_seen = true;
        if (std::isfinite(der)) {
            out.deriv_min = std::min(out.deriv_min, der);
            out.deriv_max = std::max(out.deriv_max, der);
        }
    };

    int prev_sign = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        const Dual d = eval_spec_dual(s, grid_point(a, b, i, n));
        take(d.der);
        const int sg = sign_of(d.val);
        if (sg != 0) {
            if (prev_sign != 0 && sg != prev_sign) ++out.sign_changes;
            prev_sign = sg;
        }
    }
    const double eps = (b - a) * 1e-9;
    take(eval_spec_dual(s, a + eps).der);
    take(eval_spec_dual(s, b - eps).der);
    return out;
}

double choose_scale(double deriv_min, double deriv_max, StepRule rule) {
    double need;
    switch (rule) {
        case StepRule::minus: need = deriv_max; break;
        case StepRule::plus: need = -std::min(deriv_min, 0.0); break;
        default: throw InvalidInput("scaling applies to the plus and minus rules only");
    }
    if (!std::isfinite(need)) throw Unscalable("derivative bound is not finite");
    const double m = kScaleSafety * need / 2.0;
    if (m <= 1.0) return 1.0;
    return round_up_3sig(m);
}

AnalysisReport recommend(const FunctionSpec& s, double a, double b, std::size_t n) {
    check_interval(a, b);
    const DerivativeBounds bounds = sample_bounds(s, a, b, n);

    AnalysisReport r{{a, b},
                     eval_spec(s, a),
                     eval_spec(s, b),
                     bounds.deriv_min,
                     bounds.deriv_max,
                     bounds.nonfinite_seen,
                     bounds.sign_changes,
                     std::nullopt,
                     1.0,
                     {}};

    if (r.f_a > 0.0 && r.f_b < 0.0) {
        r.recommended = StepRule::plus;
    } else if (r.f_a < 0.0 && r.f_b > 0.0) {
        r.recommended = StepRule::minus;
    } else {
        r.warnings.emplace_back(kWarnNoSignChange);
    }
    if (r.recommended) {
        try {
            r.scale_divisor = choose_scale(bounds.deriv_min, bounds.deriv_max, *r.recommended);
        } catch (const Unscalable&) {
            r.scale_divisor = 1.0;
        }
    }
    if (bounds.sign_changes > 1) r.warnings.emplace_back(kWarnMultipleSignChanges);
    if (bounds.nonfinite_seen) r.warnings.emplace_back(kWarnDerivativeBound);
    return r;
}

NewtonPrecheck newton_precheck(const FunctionSpec& s, double center, double delta, std::size_t n) {
    if (!(delta > 0.0) || !std::isfinite(center)) throw InvalidInput("newton_precheck needs delta > 0");
    if (n < 1) throw InvalidInput("grid needs n >= 1");
    const double a = center - delta;
    const double b = center + delta;
    double k = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = grid_point(a, b, i, n);
        const double ratio = std::fabs(central_second(s, x) / eval_spec_dual(s, x).der);
        if (!std::isfinite(ratio)) {
            return {center, std::numeric_limits<double>::infinity(), delta, 0.0};
        }
        k = std::max(k, ratio);
    }
    return {center, k, delta, std::min(delta, 1.0 / k)};
}

}  // namespace halfstep
