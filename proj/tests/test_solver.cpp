#include <gtest/gtest.h>

#include <cmath>

#include "halfstep/errors.hpp"
#include "halfstep/solver.hpp"
#include "oracle.hpp"

using namespace halfstep;

namespace {

FunctionSpec cubic() { return lookup(BuiltinId::cubic_paper); }

}  // namespace

TEST(Solve, AutoOnCubic) {
    const auto r = solve(cubic(), -2.0, 0.0, {});
    ASSERT_TRUE(r.root.has_value());
    EXPECT_NEAR(*r.root, oracle::kCubicRoot, 1e-10);
    EXPECT_EQ(r.verdict, Verdict::converged);
    EXPECT_EQ(r.verdict_text(), "Converged");
    EXPECT_EQ(r.trace.rule, StepRule::minus);
    EXPECT_EQ(r.trace.x0, -1.0);
    EXPECT_DOUBLE_EQ(r.applied_scale, 5.25);
    EXPECT_LE(r.residual_unscaled, 1e-9);
}

TEST(Solve, CbrtFailsWithCycle) {
    SolveOptions o;
    o.method = Method::minus;
    o.scale = ScaleOption::off();
    o.x0 = 0.5;
    const auto r = solve(lookup(BuiltinId::cbrt), -1.0, 1.0, o);
    EXPECT_FALSE(r.root.has_value());
    EXPECT_EQ(r.verdict, Verdict::failed);
    EXPECT_EQ(r.verdict_text(), "Failed(CycleDetected)");
    EXPECT_EQ(r.trace.period(), std::optional<std::size_t>(2));
}

TEST(Solve, CounterexampleFailsWithPeriodFour) {
    SolveOptions o;
    o.method = Method::averaged_picard;
    o.x0 = 23.0 / 63.0;
    const auto r = solve(lookup(BuiltinId::counterexample_piecewise), 0.0, 1.0, o);
    EXPECT_EQ(r.verdict_text(), "Failed(CycleDetected)");
    EXPECT_EQ(r.trace.period(), std::optional<std::size_t>(4));
    EXPECT_EQ(r.applied_scale, 1.0);
}

TEST(Solve, FixedScale) {
    SolveOptions o;
    o.method = Method::minus;
    o.scale = ScaleOption::fixed(5.0);
    o.x0 = 0.0;
    const auto r = solve(cubic(), -2.0, 0.0, o);
    ASSERT_GE(r.trace.iterates.size(), 3u);
    EXPECT_EQ(r.trace.iterates[1], -0.2);
    EXPECT_EQ(r.trace.iterates[2], -0.43920000000000003);
    EXPECT_EQ(r.applied_scale, 5.0);
}

TEST(Solve, NewtonIsNeverScaled) {
    SolveOptions o;
    o.method = Method::newton;
    o.scale = ScaleOption::fixed(7.0);
    o.x0 = -1.5;
    const auto r = solve(cubic(), -2.0, 0.0, o);
    EXPECT_EQ(r.applied_scale, 1.0);
    ASSERT_TRUE(r.root.has_value());
    EXPECT_NEAR(*r.root, oracle::kCubicRoot, 1e-12);
}

TEST(Solve, NewtonMayLeaveInterval) {
    SolveOptions o;
    o.method = Method::newton;
    o.x0 = 0.0;
    const auto r = solve(cubic(), -2.0, 0.0, o);
    EXPECT_EQ(r.verdict_text(), "Failed(CycleDetected)");
}

TEST(Solve, Bisection) {
    SolveOptions o;
    o.method = Method::bisection;
    const auto r = solve(cubic(), -2.0, 0.0, o);
    ASSERT_TRUE(r.root.has_value());
    EXPECT_NEAR(*r.root, oracle::kCubicRoot, 1e-12);
}

TEST(Solve, WarningsDowngradeVerdict) {
    SolveOptions o;
    o.method = Method::minus;
    const auto r = solve(FunctionSpec::from_source("sin(x)"), -1.0, 7.0, o);
    ASSERT_TRUE(r.root.has_value());
    EXPECT_EQ(r.verdict, Verdict::converged_with_warnings);
    EXPECT_EQ(r.verdict_text(), "ConvergedWithWarnings");
    EXPECT_FALSE(r.warnings.empty());
}

TEST(Solve, Errors) {
    EXPECT_THROW(solve(cubic(), 0.0, 1.0, {}), NoRecommendation);
    EXPECT_THROW(solve(cubic(), 0.0, 0.0, {}), InvalidInput);
    EXPECT_THROW(solve(cubic(), 0.0, NAN, {}), InvalidInput);
    SolveOptions o;
    o.x0 = 3.0;
    EXPECT_THROW(solve(cubic(), -2.0, 0.0, o), InvalidInput);
    o = {};
    o.scale = ScaleOption::fixed(-1.0);
    EXPECT_THROW(solve(cubic(), -2.0, 0.0, o), InvalidInput);
}

TEST(Solve, ResidualWithinScaledCap) {
    const FunctionSpec fns[] = {cubic(), FunctionSpec::from_source("x^5+3*x-1"),
                                FunctionSpec::from_source("exp(x)-3")};
    for (const auto& f : fns) {
        const auto r = solve(f, -2.0, 10.0, {});
        if (r.verdict == Verdict::failed) continue;
        EXPECT_LE(r.residual_unscaled, SolveOptions{}.stop.residual_cap * r.applied_scale) << f.label();
    }
}

TEST(Solve, Deterministic) {
    const auto a = solve(cubic(), -2.0, 10.0, {});
    const auto b = solve(cubic(), -2.0, 10.0, {});
    ASSERT_EQ(a.trace.iterates.size(), b.trace.iterates.size());
    for (std::size_t i = 0; i < a.trace.iterates.size(); ++i) {
        EXPECT_EQ(oracle::bits(a.trace.iterates[i]), oracle::bits(b.trace.iterates[i]));
    }
    EXPECT_EQ(oracle::bits(a.residual_unscaled), oracle::bits(b.residual_unscaled));
    EXPECT_EQ(a.warnings, b.warnings);
}

TEST(Solve, RobustAcrossWideInterval) {
    const double root = bisect(cubic(), -2.0, 10.0, 1e-14);
    for (int i = 0; i <= 24; ++i) {
        SolveOptions o;
        o.x0 = -2.0 + 0.5 * i;
        const auto r = solve(cubic(), -2.0, 10.0, o);
        ASSERT_TRUE(r.root.has_value()) << *o.x0 << " " << r.verdict_text();
        EXPECT_LE(std::fabs(*r.root - root), 1e-8);
    }
}

TEST(Compare, CubicFromZero) {
    const auto rows = compare(cubic(), -2.0, 0.0, {0.0}, {});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].method, "minus");
    EXPECT_EQ(rows[0].reason, "Converged");
    EXPECT_EQ(rows[1].method, "newton");
    EXPECT_EQ(rows[1].reason, "CycleDetected");
    EXPECT_EQ(rows[2].method, "bisect");
    EXPECT_EQ(rows[2].reason, "Converged");
}

TEST(Compare, FarStartOnWideInterval) {
    const auto rows = compare(cubic(), -2.0, 10.0, {10.0}, {});
    EXPECT_EQ(rows[0].method, "minus");
    EXPECT_EQ(rows[0].reason, "Converged");
    EXPECT_NEAR(rows[0].final_value, oracle::kCubicRoot, 1e-8);
}

TEST(Compare, LinearAllConverge) {
    const auto rows = compare(FunctionSpec::from_source("x-0.5"), 0.0, 1.0, {0.9}, {});
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.reason, "Converged") << r.method;
        EXPECT_NEAR(r.final_value, 0.5, 1e-9);
    }
}

TEST(Compare, RowOrderAndCellErrors) {
    const auto rows = compare(cubic(), -2.0, 0.0, {0.0, -1.0, 5.0}, {});
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_EQ(rows[0].x0, -1.0);
    EXPECT_EQ(rows[3].x0, 0.0);
    EXPECT_EQ(rows[6].x0, 5.0);
    EXPECT_EQ(rows[6].reason, "Error(InvalidInput)");
    EXPECT_TRUE(std::isnan(rows[6].final_value));

    const auto none = compare(cubic(), 0.0, 1.0, {0.5}, {});
    ASSERT_EQ(none.size(), 3u);
    EXPECT_EQ(none[0].reason, "Error(NoRecommendation)");
    EXPECT_EQ(none[2].reason, "Error(NoSignChange)");
    EXPECT_THROW(compare(cubic(), -2.0, 0.0, {}, {}), InvalidInput);
}
