#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "halfstep/analysis.hpp"
#include "halfstep/corpus.hpp"
#include "halfstep/errors.hpp"
#include "halfstep/numfmt.hpp"
#include "halfstep/solver.hpp"
#include "output.hpp"

namespace halfstep::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string expr;
    std::string builtin;
    std::vector<double> interval;
    std::vector<double> x0;
    std::string method = "auto";
    std::string scale = "auto";
    std::optional<double> tol;
    std::optional<double> residual_cap;
    std::size_t max_iter = 10000;
    std::size_t grid = 1024;
    std::size_t n = 30;
    std::string format = "table";
    std::string out_path;
};

const std::map<std::string, Method> kMethods{
    {"auto", Method::automatic}, {"plus", Method::plus},     {"minus", Method::minus},
    {"avg", Method::averaged_picard}, {"newton", Method::newton}, {"bisect", Method::bisection},
};

const std::map<std::string, OutputFormat> kFormats{
    {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

void add_function_options(CLI::App& sub, Args& a) {
    auto* expr = sub.add_option("--expr", a.expr, "function of x, e.g. \"x^3-2*x+2\"");
    auto* builtin = sub.add_option("--builtin", a.builtin, "built-in function name (see `corpus list`)");
    expr->excludes(builtin);
    sub.add_option("--interval", a.interval, "interval endpoints A B")->expected(2)->required();
    sub.add_option("--grid", a.grid, "derivative sampling grid size")->check(CLI::Range(2, 1 << 24));
    sub.add_option("--format", a.format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub.add_option("--out", a.out_path, "write output to PATH instead of stdout");
}

void add_method_options(CLI::App& sub, Args& a) {
    sub.add_option("--method", a.method, "auto|plus|minus|avg|newton|bisect")
        ->check(CLI::IsMember({"auto", "plus", "minus", "avg", "newton", "bisect"}));
    sub.add_option("--scale", a.scale, "auto|off|M");
    sub.add_option("--tol", a.tol, "step tolerance (sets atol and rtol)");
    sub.add_option("--residual-cap", a.residual_cap, "largest |f(x)| accepted as converged");
    sub.add_option("--max-iter", a.max_iter, "iteration limit")->check(CLI::PositiveNumber);
}

FunctionSpec function_of(const Args& a) {
    if (a.expr.empty() == a.builtin.empty()) throw UsageError("exactly one of --expr or --builtin is required");
    if (!a.builtin.empty()) return lookup(a.builtin);
    return FunctionSpec::from_source(a.expr);
}

ScaleOption scale_of(const std::string& s) {
    if (s == "auto") return ScaleOption::automatic();
    if (s == "off") return ScaleOption::off();
    double m = 0.0;
    std::size_t used = 0;
    try {
        m = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || !(std::isfinite(m) && m > 0.0)) {
        throw UsageError("--scale must be auto, off or a positive number");
    }
    return ScaleOption::fixed(m);
}

SolveOptions options_of(const Args& a) {
    SolveOptions o;
    o.method = kMethods.at(a.method);
    o.scale = scale_of(a.scale);
    if (a.x0.size() > 1) throw UsageError("--x0 takes a single value here");
    if (!a.x0.empty()) o.x0 = a.x0.front();
    if (a.tol) {
        if (!(*a.tol > 0.0)) throw UsageError("--tol must be positive");
        o.stop.atol = o.stop.rtol = *a.tol;
    }
    if (a.residual_cap) {
        if (!(*a.residual_cap > 0.0)) throw UsageError("--residual-cap must be positive");
        o.stop.residual_cap = *a.residual_cap;
    }
    o.stop.max_iters = a.max_iter;
    o.grid_n = a.grid;
    return o;
}

std::string interval_text(double a, double b) { return "[" + shortest(a) + ", " + shortest(b) + "]"; }

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

std::string trace_csv(const FunctionSpec& scaled, const std::vector<double>& xs) {
    std::ostringstream os;
    os << "n,x_n,f_scaled(x_n)\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << i << ',' << shortest(xs[i]) << ',' << shortest(eval_spec(scaled, xs[i])) << '\n';
    }
    return os.str();
}

std::string trace_table(const FunctionSpec& scaled, const std::vector<double>& xs) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "n" << std::setw(26) << "x_n" << "f_scaled(x_n)\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << std::setw(6) << i << std::setw(26) << shortest(xs[i]) << shortest(eval_spec(scaled, xs[i])) << '\n';
    }
    return os.str();
}

std::string render_solve(const SolveResult& r, const Args& a, OutputFormat fmt) {
    const IterationTrace& t = r.trace;
    const Interval iv = r.analysis.interval;
    switch (fmt) {
        case OutputFormat::json: {
            JsonObject o;
            o.string("method", rule_name(t.rule))
                .string("expr", t.spec.label())
                .number("scale", r.applied_scale)
                .number("x0", t.x0)
                .raw("interval", json_array(std::vector<double>{iv.lo, iv.hi}))
                .raw("iterates", json_array(t.iterates))
                .string("reason", reason_name(t.reason));
            if (auto p = t.period()) o.integer("period", *p);
            if (r.root) o.number("root", *r.root);
            o.number("residual", r.residual_unscaled)
                .integer("steps", t.steps_taken)
                .raw("warnings", json_array(r.warnings));
            return o.str() + "\n";
        }
        case OutputFormat::csv: return trace_csv(t.spec, t.iterates);
        case OutputFormat::table: break;
    }
    (void)a;
    std::ostringstream os;
    os << std::left;
    auto row = [&](std::string_view k, const std::string& v) { os << std::setw(10) << k << v << '\n'; };
    row("function", t.spec.label());
    row("interval", interval_text(iv.lo, iv.hi));
    row("method", std::string(rule_name(t.rule)) + " (scale " + shortest(r.applied_scale) + ")");
    row("x0", shortest(t.x0));
    row("verdict", r.verdict_text());
    std::string reason(reason_name(t.reason));
    if (auto p = t.period()) reason += " (period " + std::to_string(*p) + ")";
    if (const auto* e = std::get_if<reason::LeftInterval>(&t.reason)) reason += " (escapee " + shortest(e->escapee) + ")";
    row("reason", reason);
    if (r.root) row("root", shortest(*r.root));
    row("last", shortest(t.last()));
    row("residual", shortest(r.residual_unscaled));
    row("steps", std::to_string(t.steps_taken));
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    return os.str();
}

std::string render_analysis(const AnalysisReport& r, const std::string& label, std::size_t grid, OutputFormat fmt) {
    const std::string rec = r.recommended ? std::string(rule_name(*r.recommended)) : "none";
    switch (fmt) {
        case OutputFormat::json: {
            JsonObject o;
            o.string("expr", label)
                .raw("interval", json_array(std::vector<double>{r.interval.lo, r.interval.hi}))
                .number("f_a", r.f_a)
                .number("f_b", r.f_b)
                .number("deriv_min", r.deriv_min)
                .number("deriv_max", r.deriv_max)
                .boolean("deriv_nonfinite_seen", r.deriv_nonfinite_seen)
                .integer("sign_changes_sampled", r.sign_changes_sampled)
                .raw("recommended", r.recommended ? json_string(rec) : "null")
                .number("scale_divisor", r.scale_divisor)
                .integer("grid", grid)
                .raw("warnings", json_array(r.warnings));
            return o.str() + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "expr,a,b,f_a,f_b,deriv_min,deriv_max,deriv_nonfinite_seen,sign_changes_sampled,"
                  "recommended,scale_divisor,grid,warnings\n";
            os << csv_field(label) << ',' << shortest(r.interval.lo) << ',' << shortest(r.interval.hi) << ','
               << shortest(r.f_a) << ',' << shortest(r.f_b) << ',' << shortest(r.deriv_min) << ','
               << shortest(r.deriv_max) << ',' << (r.deriv_nonfinite_seen ? "true" : "false") << ','
               << r.sign_changes_sampled << ',' << rec << ',' << shortest(r.scale_divisor) << ',' << grid << ','
               << csv_field(join(r.warnings, "; ")) << '\n';
            return os.str();
        }
        case OutputFormat::table: break;
    }
    std::ostringstream os;
    os << std::left;
    auto row = [&](std::string_view k, const std::string& v) { os << std::setw(22) << k << v << '\n'; };
    row("function", label);
    row("interval", interval_text(r.interval.lo, r.interval.hi));
    row("f(a), f(b)", shortest(r.f_a) + ", " + shortest(r.f_b));
    row("f' range (sampled)", "[" + shortest(r.deriv_min) + ", " + shortest(r.deriv_max) + "] on " +
                                  std::to_string(grid + 1) + " grid points + 2 endpoint probes");
    row("f' unbounded samples", r.deriv_nonfinite_seen ? "yes" : "no");
    row("sign changes", std::to_string(r.sign_changes_sampled));
    row("recommended", rec);
    row("scale divisor", shortest(r.scale_divisor));
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    return os.str();
}

std::string render_trace(const SolvePlan& p, const std::vector<double>& xs, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            JsonObject o;
            o.string("method", rule_name(p.rule))
                .string("expr", p.scaled.label())
                .number("scale", p.scaled.scale_divisor())
                .number("x0", p.x0)
                .raw("interval", json_array(std::vector<double>{p.stop.interval.lo, p.stop.interval.hi}))
                .raw("iterates", json_array(xs));
            return o.str() + "\n";
        }
        case OutputFormat::csv: return trace_csv(p.scaled, xs);
        case OutputFormat::table: break;
    }
    return trace_table(p.scaled, xs);
}

std::string render_compare(const std::vector<CompareRow>& rows, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json: {
            os << '[';
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                if (i) os << ',';
                JsonObject o;
                o.number("x0", r.x0)
                    .string("method", r.method)
                    .string("reason", r.reason)
                    .integer("steps", r.steps)
                    .number("final", r.final_value);
                os << o.str();
            }
            os << "]\n";
            return os.str();
        }
        case OutputFormat::csv:
            os << "x0,method,reason,steps,final\n";
            for (const auto& r : rows) {
                os << shortest(r.x0) << ',' << r.method << ',' << csv_field(r.reason) << ',' << r.steps << ','
                   << shortest(r.final_value) << '\n';
            }
            return os.str();
        case OutputFormat::table: break;
    }
    os << std::left << std::setw(24) << "x0" << std::setw(8) << "method" << std::setw(22) << "reason"
       << std::setw(8) << "steps" << "final\n";
    for (const auto& r : rows) {
        os << std::setw(24) << shortest(r.x0) << std::setw(8) << r.method << std::setw(22) << r.reason
           << std::setw(8) << r.steps << shortest(r.final_value) << '\n';
    }
    return os.str();
}

std::string render_corpus(OutputFormat fmt) {
    const auto entries = list();
    auto intervals_of = [](const CorpusEntry& e) {
        std::vector<std::string> parts;
        for (const auto& iv : e.intervals) parts.push_back(interval_text(iv.lo, iv.hi));
        return parts;
    };
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json: {
            os << '[';
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const auto& e = entries[i];
                if (i) os << ',';
                std::string ivs = "[";
                for (std::size_t k = 0; k < e.intervals.size(); ++k) {
                    if (k) ivs += ',';
                    ivs += json_array(std::vector<double>{e.intervals[k].lo, e.intervals[k].hi});
                }
                ivs += ']';
                JsonObject o;
                o.string("name", e.name).string("label", e.label).raw("intervals", ivs);
                os << o.str();
            }
            os << "]\n";
            return os.str();
        }
        case OutputFormat::csv:
            os << "name,label,intervals\n";
            for (const auto& e : entries) {
                os << e.name << ',' << csv_field(e.label) << ',' << csv_field(join(intervals_of(e), " ")) << '\n';
            }
            return os.str();
        case OutputFormat::table: break;
    }
    os << std::left << std::setw(26) << "name" << std::setw(56) << "label" << "intervals\n";
    for (const auto& e : entries) {
        os << std::setw(26) << e.name << std::setw(56) << e.label << join(intervals_of(e), " ") << '\n';
    }
    return os.str();
}

void emit(const std::string& text, const Args& a, std::ostream& out) {
    if (a.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open --out path " + a.out_path);
    file << text;
}

std::vector<double> default_grid(double lo, double hi) {
    std::vector<double> xs;
    for (int i = 0; i <= 10; ++i) xs.push_back(i == 10 ? hi : lo + ((hi - lo) * i) / 10.0);
    return xs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Half-step iterative root finding", "halfstep"};
    app.require_subcommand(1);
    Args a;

    auto* solve_cmd = app.add_subcommand("solve", "find a root and report diagnostics");
    add_function_options(*solve_cmd, a);
    add_method_options(*solve_cmd, a);
    solve_cmd->add_option("--x0", a.x0, "initial point (default: interval midpoint)")->expected(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "check derivative bounds and recommend a method");
    add_function_options(*analyze_cmd, a);

    auto* trace_cmd = app.add_subcommand("trace", "print the first n iterates");
    add_function_options(*trace_cmd, a);
    add_method_options(*trace_cmd, a);
    trace_cmd->add_option("--x0", a.x0, "initial point (default: interval midpoint)")->expected(1);
    trace_cmd->add_option("--n", a.n, "number of iterates, x0 included")->check(CLI::PositiveNumber);

    auto* compare_cmd = app.add_subcommand("compare", "half-step rule vs Newton vs bisection");
    add_function_options(*compare_cmd, a);
    add_method_options(*compare_cmd, a);
    compare_cmd->add_option("--x0", a.x0, "initial points (default: 11-point grid)")->expected(1, -1);

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in functions");
    corpus_cmd->require_subcommand(1);
    auto* corpus_list = corpus_cmd->add_subcommand("list", "list built-ins with their intervals");
    corpus_list->add_option("--format", a.format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
    corpus_list->add_option("--out", a.out_path, "write output to PATH instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const OutputFormat fmt = kFormats.at(a.format);
    try {
        if (corpus_list->parsed()) {
            emit(render_corpus(fmt), a, out);
            return kExitOk;
        }
        const FunctionSpec spec = function_of(a);
        const double lo = a.interval.at(0);
        const double hi = a.interval.at(1);

        if (analyze_cmd->parsed()) {
            const AnalysisReport r = recommend(spec, lo, hi, a.grid);
            emit(render_analysis(r, spec.label(), a.grid, fmt), a, out);
            return kExitOk;
        }
        if (solve_cmd->parsed()) {
            const SolveResult r = solve(spec, lo, hi, options_of(a));
            emit(render_solve(r, a, fmt), a, out);
            return r.root ? kExitOk : kExitFailed;
        }
        if (trace_cmd->parsed()) {
            const SolvePlan p = plan(spec, lo, hi, options_of(a));
            if (p.rule == StepRule::bisection) {
                IterationTrace t = iterate(p.rule, p.scaled, p.x0, p.stop);
                std::vector<double> xs = t.iterates;
                if (xs.size() > a.n) xs.resize(a.n);
                emit(render_trace(p, xs, fmt), a, out);
            } else {
                emit(render_trace(p, orbit(p.rule, p.scaled, p.x0, a.n), fmt), a, out);
            }
            return kExitOk;
        }
        if (compare_cmd->parsed()) {
            Args single = a;
            single.x0.clear();
            const std::vector<double> grid = a.x0.empty() ? default_grid(lo, hi) : a.x0;
            emit(render_compare(compare(spec, lo, hi, grid, options_of(single)), fmt), a, out);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SyntaxError& e) {
        err << "SyntaxError: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownIdentifier& e) {
        err << "UnknownIdentifier: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownBuiltin& e) {
        err << "UnknownBuiltin: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInput& e) {
        err << "InvalidInput: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoRecommendation& e) {
        err << "NoRecommendation: " << e.what() << '\n';
        return kExitFailed;
    } catch (const NoSignChange& e) {
        err << "NoSignChange: " << e.what() << '\n';
        return kExitFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace halfstep::cli
