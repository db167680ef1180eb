// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "halfstep/analysis.hpp"
#include "halfstep/corpus.hpp"
#include "halfstep/errors.hpp"
#include "halfstep/sequences.hpp"
#include "halfstep/solver.hpp"
#include "oracle.hpp"

using namespace halfstep;

namespace {

constexpr double kRoot = -1.7692923542386314;

struct Check {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
};

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

FunctionSpec cubic(double m) { return lookup(BuiltinId::cubic_paper).with_scale(m); }

StopConfig on(double lo, double hi) {
    StopConfig c;
    c.interval = {lo, hi};
    return c;
}

// Cycle points are the last `period` iterates before the repeat.
std::vector<double> cycle_points(const IterationTrace& t) {
    const std::size_t p = t.period().value_or(0);
    const auto& xs = t.iterates;
    return {xs.end() - static_cast<std::ptrdiff_t>(std::min(p, xs.size())), xs.end()};
}

bool each_near_one_of(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    for (double g : got) {
        if (std::none_of(want.begin(), want.end(), [&](double w) { return near(g, w, tol); })) return false;
    }
    for (double w : want) {
        if (std::none_of(got.begin(), got.end(), [&](double g) { return near(g, w, tol); })) return false;
    }
    return true;
}

Check c1() {
    Check c;
    const auto xs = orbit(StepRule::minus, cubic(5), 0.0, 31);
    const double head[] = {0, -0.2, -0.43920000000000003, -0.7185679795712001, -1.025179040648767,
                           -1.3224693450463805};
    c.require(xs.size() == 31, "orbit too short");
    for (int i = 0; i < 6 && c.ok; ++i) c.require(near(xs[i], head[i], 1e-15), "iterate " + std::to_string(i));
    if (c.ok) c.require(near(xs[30], kRoot, 5e-14), "iterate 30");
    return c;
}

Check c2() {
    Check c;
    const auto xs = orbit(StepRule::minus, cubic(4), -2.0, 15);
    const double head[] = {-1.75, -1.767578125, -1.7691599493846297, -1.7692822663712806};
    c.require(xs.size() == 15, "orbit too short");
    for (int i = 0; i < 4 && c.ok; ++i) c.require(near(xs[i + 1], head[i], 1e-15), "iterate " + std::to_string(i + 1));
    if (c.ok) c.require(near(xs[14], kRoot, 1e-15), "iterate 14");
    return c;
}

Check c3() {
    Check c;
    const auto a = orbit(StepRule::minus, cubic(13), 3.0, 3);
    const auto b = orbit(StepRule::minus, cubic(150), 10.0, 3);
    c.require(near(a[1], 2.1153846153846154, 1e-15) && near(a[2], 1.837105230909282, 1e-15), "f/13 head");
    c.require(near(b[1], 6.726666666666667, 1e-15) && near(b[2], 5.7502827367901235, 1e-15), "f/150 head");
    return c;
}

Check c4() {
    Check c;
    const auto t = iterate(StepRule::newton, cubic(1), 0.0, StopConfig{});
    c.require(t.period() == 2u, "not a period-2 cycle");
    c.require(t.steps_taken <= 10, "too many steps");
    if (c.ok) {
        const auto pts = cycle_points(t);
        const std::set<double> got(pts.begin(), pts.end());
        c.require(got == std::set<double>{0.0, 1.0}, "cycle points not exactly {0, 1}");
    }
    return c;
}

Check c5() {
    Check c;
    const auto t = iterate(StepRule::averaged_picard, lookup(BuiltinId::counterexample_piecewise), 23.0 / 63.0,
                           on(0, 1));
    c.require(t.period() == 4u, "not a period-4 cycle");
    c.require(t.steps_taken <= 12, "too many steps");
    if (c.ok) {
        c.require(each_near_one_of(cycle_points(t), {23.0 / 63, 43.0 / 63, 43.0 / 126, 169.0 / 252}, 1e-9),
                  "cycle points");
    }
    return c;
}

Check c6() {
    Check c;
    const auto spec = lookup(BuiltinId::cbrt);
    const auto rep = recommend(spec, -1, 1);
    c.require(std::find(rep.warnings.begin(), rep.warnings.end(), kWarnDerivativeBound) != rep.warnings.end(),
              "no derivative-bound warning");
    const auto t = iterate(StepRule::minus, spec, 0.5, on(-1, 1));
    c.require(t.period() == 2u, "not a period-2 cycle");
    if (c.ok) c.require(each_near_one_of(cycle_points(t), {0.125, -0.125}, 1e-6), "cycle points");
    return c;
}

Check c7() {
    Check c;
    const auto t = iterate(StepRule::plus, lookup(BuiltinId::notallowed_f), -1.0, on(-1, 1));
    const auto* e = std::get_if<reason::LeftInterval>(&t.reason);
    c.require(e != nullptr, "notallowed_f did not leave the interval");
    if (e) {
        c.require(t.steps_taken == 1, "escape not at step 1");
        c.require(e->escapee == -1.5, "escapee not exactly -1.5");
    }
    const auto u = iterate(StepRule::averaged_picard, lookup(BuiltinId::line_2x_minus_1), 2.0 / 3.0,
                           on(2.0 / 3.0, 1));
    c.require(std::holds_alternative<reason::LeftInterval>(u.reason), "line did not leave the interval");
    return c;
}

Check c8() {
    Check c;
    std::mt19937_64 rng(0x5eed0008);
    for (double x0 : oracle::uniform(rng, -2, 0, 20)) {
        const auto a = orbit(StepRule::newton, cubic(1), x0, 40);
        const auto b = orbit(StepRule::newton, cubic(4), x0, 40);
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i) same = oracle::bits(a[i]) == oracle::bits(b[i]);
        c.require(same, "traces differ from x0 = " + std::to_string(x0));
    }
    return c;
}

Check c9() {
    Check c;
    // Monotone invariant: Minus with a valid divisor never overshoots the root.
    const auto spec = cubic(5.25);
    for (int i = 0; i < 100 && c.ok; ++i) {
        const double x0 = -2.0 + 2.0 * i / 99.0;
        const auto t = iterate(StepRule::minus, spec, x0, on(-2, 0));
        c.require(t.converged(), "grid point did not converge");
        const auto& xs = t.iterates;
        for (std::size_t k = 1; k < xs.size() && c.ok; ++k) {
            const double r = t.last();
            const bool side = (xs[k - 1] - r) * (xs[k] - r) >= 0.0;
            const bool closer = std::fabs(xs[k] - r) <= std::fabs(xs[k - 1] - r) + 1e-15;
            c.require(side && closer, "monotone invariant broken at x0 = " + std::to_string(x0));
        }
    }
    // Oracle agreement on every converged corpus solve.
    for (const auto& entry : list()) {
        for (const auto& iv : entry.intervals) {
            for (int i = 0; i <= 10 && c.ok; ++i) {
                SolveOptions o;
                o.x0 = iv.lo + (iv.hi - iv.lo) * i / 10.0;
                const auto spec = lookup(entry.id);
                std::optional<double> root;
                try {
                    root = solve(spec, iv.lo, iv.hi, o).root;
                } catch (const Error&) {
                    continue;
                }
                if (!root) continue;
                try {
                    const double ref = bisect(spec, iv.lo, iv.hi, 1e-12);
                    c.require(near(*root, ref, 1e-8), std::string(entry.name) + " disagrees with bisection");
                } catch (const NoSignChange&) {
                    // Root at an endpoint or no bracket; the residual test already held.
                }
            }
        }
    }
    // Robustness sweep on the wide interval.
    for (int i = 0; i < 25 && c.ok; ++i) {
        SolveOptions o;
        o.x0 = -2.0 + 12.0 * i / 24.0;
        const auto r = solve(cubic(1), -2, 10, o);
        c.require(r.verdict != Verdict::failed, "sweep failed at x0 = " + std::to_string(*o.x0));
    }
    return c;
}

Check c10() {
    Check c;
    std::mt19937_64 rng(0x5eed0010);
    auto check = [&](const FunctionSpec& s, double lo, double hi, const std::function<bool(double)>& keep) {
        int taken = 0;
        while (taken < 100 && c.ok) {
            const double x = oracle::uniform(rng, lo, hi, 1)[0];
            if (!keep(x)) continue;
            ++taken;
            const double d = eval_spec_dual(s, x).der;
            const double fd = oracle::central_difference([&](double t) { return eval_spec(s, t); }, x);
            c.require(std::fabs(d - fd) <= 1e-6 * std::max(1.0, std::fabs(fd)), s.label() + " at " + std::to_string(x));
        }
    };
    auto always = [](double) { return true; };
    check(lookup(BuiltinId::cubic_paper), -2, 10, always);
    check(lookup(BuiltinId::line_2x_minus_1), 0, 2, always);
    const double bps[] = {3.0 / 8, 7.0 / 12, 49.0 / 72};
    check(lookup(BuiltinId::counterexample_piecewise), 0, 1, [&](double x) {
        return std::all_of(std::begin(bps), std::end(bps), [&](double b) { return std::fabs(x - b) > 1e-6; });
    });
    check(lookup(BuiltinId::cbrt), -1, 1, [](double x) { return std::fabs(x) >= 0.05; });
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"golden trace f/5 from 0 (minus), iterate 30 at the root", c1},
        {"golden trace f/4 from -2 (minus), iterate 14 at the root", c2},
        {"golden heads f/13 from 3 and f/150 from 10", c3},
        {"newton from 0 cycles on {0, 1}", c4},
        {"averaged picard on the piecewise map: period 4 through 23/63", c5},
        {"cbrt: derivative warning and +-1/8 two-cycle", c6},
        {"interval escapes: escapee -1.5, line from 2/3", c7},
        {"newton traces of f and f/4 bitwise identical", c8},
        {"monotone invariant, bisection agreement, robustness sweep", c9},
        {"dual derivatives match central differences", c10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.ok ? "" : " -- ",
                    c.why.c_str());
        failed += !c.ok;
    }
    return failed ? 1 : 0;
}
