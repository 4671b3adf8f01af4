#include "carlson/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "carlson/analysis.hpp"
#include "carlson/core_bounds.hpp"
#include "carlson/errors.hpp"
#include "carlson/explorer.hpp"
#include "carlson/report_io.hpp"
#include "carlson/sharp_family.hpp"
#include "carlson/verifier.hpp"

namespace carlson::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format;
    std::string out_path;

    std::optional<double> a;
    std::optional<double> x;
    std::optional<double> alpha, beta, gamma;
    std::string alpha_range, beta_range, gamma_range;
    std::size_t n = 0;
    std::string grid = "refined";
    bool curve = false;
    bool rows = false;
    bool list = false;
    std::string claims = "all";
    std::vector<double> shapes;
};

GridSpec grid_from(const Options& o, std::size_t default_n) {
    const std::size_t n = o.n ? o.n : default_n;
    if (n < 2) throw UsageError("--n must be at least 2");
    if (o.grid == "uniform") return GridSpec::uniform(1e-9, 1.0 - 1e-9, n);
    return GridSpec::refined(n);
}

bool has_triple(const Options& o) { return o.alpha || o.beta || o.gamma; }

void require_triple(const Options& o) {
    if (!(o.alpha && o.beta && o.gamma)) {
        throw UsageError("--alpha, --beta and --gamma must be given together");
    }
}

AxisRange parse_axis(const std::string& text, const char* name) {
    // "v" or "lo:hi:count"
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    try {
        if (parts.size() == 1) return {std::stod(parts[0]), std::stod(parts[0]), 1};
        if (parts.size() == 3) {
            const long long count = std::stoll(parts[2]);
            if (count < 1) throw UsageError(std::string(name) + ": count must be >= 1");
            return {std::stod(parts[0]), std::stod(parts[1]), static_cast<std::size_t>(count)};
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw UsageError(std::string(name) + ": expected a number or lo:hi:count, got '" + text + "'");
}

int cmd_eval(const Options& o, RowWriter& w) {
    if (!o.x) throw UsageError("eval: --x is required");
    if (has_triple(o)) {
        require_triple(o);
        w.begin({"alpha", "beta", "gamma", "x", "F"});
        w.row({*o.alpha, *o.beta, *o.gamma, *o.x, f_abc(*o.alpha, *o.beta, *o.gamma, *o.x)});
    } else {
        if (!o.a) throw UsageError("eval: --a is required (or --alpha/--beta/--gamma)");
        w.begin({"a", "x", "F", "arccos"});
        w.row({*o.a, *o.x, family_value(*o.a, *o.x), arccos_stable(*o.x)});
    }
    w.finish();
    return kOk;
}

int cmd_bounds(const Options& o, RowWriter& w, std::ostream& err) {
    if (!o.a) throw UsageError("bounds: --a is required");
    const double a = *o.a;
    std::vector<double> xs;
    if (o.x) {
        xs.push_back(*o.x);
    } else {
        xs = make_grid(grid_from(o, 11));
    }

    std::size_t violations = 0;
    auto check = [&](double x, double lower, double upper, double ac) {
        const double tol = fp_tolerance(ac);
        if (!(ac - lower > -tol && upper - ac > -tol)) ++violations;
        (void)x;
    };

    if (!o.curve) {
        w.begin({"x", "lower", "arccos", "upper"});
        for (double x : xs) {
            const BoundPair b = bound_pair(a, x);
            const double ac = arccos_stable(x);
            check(x, b.lower, b.upper, ac);
            w.row({x, b.lower, ac, b.upper});
        }
        w.finish({{"a", a}, {"c_lower", lower_constant(a)}, {"c_upper", upper_constant(a)},
                  {"regime", std::string(to_string(classify_regime(a)))}});
    } else {
        w.begin({"x", "best_lower", "threshold_lower", "carlson_lower", "root3_lower", "lambda_lower",
                 "arccos", "threshold_upper", "carlson_upper", "best_upper", "a_lower", "a_upper"});
        for (double x : xs) {
            const double ac = arccos_stable(x);
            const Bracket t = threshold_pair(x);
            const Bracket c = carlson_pair(x);
            const BoundPair b = bound_pair(a, x);
            const double lowers[] = {best_lower(x), t.lower, c.lower, root3_lower_bound(x),
                                     lambda_lower_bound(x), b.lower};
            const double uppers[] = {t.upper, c.upper, best_upper_bound(x), b.upper};
            for (double l : lowers) check(x, l, ac, ac);
            for (double u : uppers) check(x, ac, u, ac);
            w.row({x, lowers[0], lowers[1], lowers[2], lowers[3], lowers[4], ac, uppers[0], uppers[1],
                   uppers[2], b.lower, b.upper});
        }
        w.finish({{"a", a}});
    }
    if (violations > 0) {
        err << "bounds: " << violations << " row(s) violate lower <= arccos <= upper\n";
        return kVerificationFailed;
    }
    return kOk;
}

int cmd_classify(const Options& o, RowWriter& w) {
    if (has_triple(o)) {
        require_triple(o);
        const ScanClassification s = classify_abc(*o.alpha, *o.beta, *o.gamma, grid_from(o, 100'000));
        w.begin(scan_header());
        w.row(scan_row(s));
    } else {
        if (!o.a) throw UsageError("classify: --a is required (or --alpha/--beta/--gamma)");
        if (!std::isfinite(*o.a)) throw DomainError("classify: --a must be finite");
        w.begin({"a", "regime"});
        w.row({*o.a, std::string(to_string(classify_regime(*o.a)))});
    }
    w.finish();
    return kOk;
}

int cmd_minimize(const Options& o, RowWriter& w) {
    if (!o.a) throw UsageError("minimize: --a is required");
    const MinimumResult m = find_minimum(*o.a);
    w.begin({"a", "x0", "f_min", "residual", "iterations", "lower_bound"});
    w.row({m.a, m.x0, m.f_min, m.residual, static_cast<std::int64_t>(m.iterations), min_value_lower(m.a)});
    w.finish();
    return kOk;
}

int cmd_verify(const Options& o, RowWriter& w) {
    if (o.list) {
        w.begin({"claim_id", "default_shapes", "description"});
        for (const auto& c : claim_registry()) {
            std::string shapes;
            for (double a : c.default_shapes) {
                if (!shapes.empty()) shapes += ' ';
                shapes += format_number(a, 17);
            }
            w.row({c.id, shapes, c.description});
        }
        w.finish();
        return kOk;
    }

    std::vector<const Claim*> selected;
    if (o.claims == "all") {
        for (const auto& c : claim_registry()) selected.push_back(&c);
    } else {
        std::stringstream ss(o.claims);
        for (std::string id; std::getline(ss, id, ',');) {
            const Claim* c = find_claim(id);
            if (!c) throw UsageError("--claims: unknown claim id '" + id + "' (see verify --list)");
            selected.push_back(c);
        }
    }
    std::optional<std::vector<double>> shapes;
    if (!o.shapes.empty()) shapes = o.shapes;
    const GridSpec grid = grid_from(o, 1'000'000);

    bool all = true;
    w.begin(report_header());
    for (const Claim* c : selected) {
        const VerificationReport r = run_claim(*c, grid, shapes);
        all = all && r.passed;
        w.row(report_row(r));
    }
    w.finish({{"all_passed", all}, {"grid", {{"spacing", std::string(to_string(grid.spacing))},
                                             {"n", grid.n}, {"lo", grid.lo}, {"hi", grid.hi}}}});
    return all ? kOk : kVerificationFailed;
}

int cmd_compare(const Options& o, RowWriter& w) {
    const DominanceTable t = compare_bounds(grid_from(o, 1'000'000), o.rows);
    const bool ok = t.lambda_dominates.passed && t.non_inclusion.passed && t.upper_dominates.passed;
    nlohmann::json extra = {
        {"all_passed", ok},
        {"crossover", t.crossover ? nlohmann::json(*t.crossover) : nlohmann::json(nullptr)},
        {"lower_wins", {{"threshold", t.lower_wins[0]}, {"carlson", t.lower_wins[1]},
                        {"root3", t.lower_wins[2]}, {"lambda", t.lower_wins[3]}}},
        {"upper_wins", {{"threshold", t.upper_wins[0]}, {"carlson", t.upper_wins[1]}, {"best", t.upper_wins[2]}}}};
    if (o.rows) {
        w.begin({"x", "best_lower", "best_upper"});
        for (const auto& r : t.rows) {
            w.row({r.x, std::string(to_string(r.best_lower)), std::string(to_string(r.best_upper))});
        }
    } else {
        w.begin(report_header());
        for (const auto* r : {&t.lambda_dominates, &t.non_inclusion, &t.upper_dominates}) w.row(report_row(*r));
    }
    w.finish(extra);
    return ok ? kOk : kVerificationFailed;
}

int cmd_scan(const Options& o, RowWriter& w) {
    if (o.alpha_range.empty() || o.beta_range.empty() || o.gamma_range.empty()) {
        throw UsageError("scan: --alpha, --beta and --gamma are required");
    }
    const AxisRange ar = parse_axis(o.alpha_range, "--alpha");
    const AxisRange br = parse_axis(o.beta_range, "--beta");
    const AxisRange gr = parse_axis(o.gamma_range, "--gamma");
    const GridSpec grid = grid_from(o, 100'000);

    w.begin(scan_header());
    for (double a : ar.values()) {
        for (double b : br.values()) {
            // One triple at a time so rows stream as they are produced.
            for (const auto& s : scan_grid({a, a, 1}, {b, b, 1}, gr, grid)) w.row(scan_row(s));
        }
    }
    w.finish({{"note", "verdicts are numerical evidence from sampled forward differences, not proofs"}});
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_terminal) {
    CLI::App app{"Certified bounds for arccos and the Carlson bound family"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "table|csv|json (default: table on a terminal, csv otherwise)")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--out", o.out_path, "write output to this file");

    auto add_grid = [&](CLI::App* sub, const char* n_help) {
        sub->add_option("--n", o.n, n_help);
        sub->add_option("--grid", o.grid, "uniform|refined")->check(CLI::IsMember({"uniform", "refined"}));
    };

    auto* eval = app.add_subcommand("eval", "evaluate F_a(x) or F_{alpha,beta,gamma}(x)");
    eval->add_option("--a", o.a, "shape parameter");
    eval->add_option("--x", o.x, "abscissa in (0,1)");
    eval->add_option("--alpha", o.alpha);
    eval->add_option("--beta", o.beta);
    eval->add_option("--gamma", o.gamma);

    auto* bounds = app.add_subcommand("bounds", "bound pair rows (x, lower, arccos, upper)");
    bounds->add_option("--a", o.a, "shape parameter (> -1)")->required();
    bounds->add_option("--x", o.x, "single abscissa instead of a sweep");
    bounds->add_flag("--curve", o.curve, "emit every bound family as plot-ready columns");
    add_grid(bounds, "number of rows (default 11)");

    auto* classify = app.add_subcommand("classify", "monotonicity regime of F_a or of a three-parameter family");
    classify->add_option("--a", o.a, "shape parameter");
    classify->add_option("--alpha", o.alpha);
    classify->add_option("--beta", o.beta);
    classify->add_option("--gamma", o.gamma);
    add_grid(classify, "sample count for three-parameter classification (default 100000)");

    auto* minimize = app.add_subcommand("minimize", "interior minimum of F_a in the middle regime");
    minimize->add_option("--a", o.a, "shape parameter in (2(pi-2)/(4-pi), 2*sqrt(2))")->required();

    auto* verify = app.add_subcommand("verify", "run claims from the registry");
    verify->add_option("--claims", o.claims, "comma-separated claim ids or 'all'");
    verify->add_option("--a", o.shapes, "override shape parameters (comma-separated)")->delimiter(',');
    verify->add_flag("--list", o.list, "list registered claims");
    add_grid(verify, "grid size (default 1000000)");

    auto* compare = app.add_subcommand("compare", "dominance between the sharp bound families");
    compare->add_flag("--rows", o.rows, "emit the per-point winners instead of the summary");
    add_grid(compare, "grid size (default 1000000)");

    auto* scan = app.add_subcommand("scan", "classify F_{alpha,beta,gamma} over a parameter grid");
    scan->add_option("--alpha", o.alpha_range, "value or lo:hi:count")->required();
    scan->add_option("--beta", o.beta_range, "value or lo:hi:count")->required();
    scan->add_option("--gamma", o.gamma_range, "value or lo:hi:count")->required();
    add_grid(scan, "samples per triple (default 100000)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "usage error: --out: cannot open '" << o.out_path << "' for writing\n";
            return kUsageError;
        }
        sink = &file;
    }
    OutputFormat format = (out_is_terminal && o.out_path.empty()) ? OutputFormat::Table : OutputFormat::Csv;
    if (o.format == "table") format = OutputFormat::Table;
    if (o.format == "csv") format = OutputFormat::Csv;
    if (o.format == "json") format = OutputFormat::Json;

    const std::string verb = app.get_subcommands().front()->get_name();
    auto writer = make_writer(format, *sink, verb);
    try {
        if (verb == "eval") return cmd_eval(o, *writer);
        if (verb == "bounds") return cmd_bounds(o, *writer, err);
        if (verb == "classify") return cmd_classify(o, *writer);
        if (verb == "minimize") return cmd_minimize(o, *writer);
        if (verb == "verify") return cmd_verify(o, *writer);
        if (verb == "compare") return cmd_compare(o, *writer);
        if (verb == "scan") return cmd_scan(o, *writer);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace carlson::cli
