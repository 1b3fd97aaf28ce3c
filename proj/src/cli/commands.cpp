#include "idxsplit/cli/commands.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "idxsplit/algorithms.hpp"
#include "idxsplit/cli/tables.hpp"
#include "idxsplit/expr.hpp"
#include "idxsplit/oracle.hpp"

namespace idxsplit::cli {
namespace {

using nlohmann::json;

class UsageError : public Error {
public:
    using Error::Error;
};

Index parse_int(std::string_view text, std::string_view what) {
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    Index v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range)
        throw UsageError(std::string(what) + ": " + std::string(text) +
                         " does not fit a 64-bit index");
    if (ec != std::errc() || ptr != last || text.empty())
        throw UsageError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
    return v;
}

std::optional<Index> parse_opt(const std::string& text, std::string_view what) {
    if (text.empty())
        return std::nullopt;
    return parse_int(text, what);
}

std::vector<Value> parse_array(std::string_view text) {
    std::vector<Value> out;
    if (text.find_first_not_of(' ') == std::string_view::npos)
        return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma - start), "--array"));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

template <typename T, typename Parse>
T parse_choice(const std::string& text, Parse parse, std::string_view what) {
    if (auto v = parse(text))
        return *v;
    throw UsageError(std::string(what) + ": unknown value '" + text + "'");
}

OutputFormat format_of(const std::string& text) {
    return parse_choice<OutputFormat>(text, parse_format, "--format");
}

json range_json(Range r) { return json::array({r.lo(), r.hi()}); }

std::string render(const Partition& p, OutputFormat format) {
    switch (format) {
    case OutputFormat::Table:
        return to_string(p) + "\n";
    case OutputFormat::Tsv: {
        std::ostringstream os;
        os << "policy\tleft_lo\tleft_hi\texcluded\tright_lo\tright_hi\n"
           << name(p.policy) << '\t' << p.left.lo() << '\t' << p.left.hi() << '\t'
           << (p.excluded ? std::to_string(*p.excluded) : std::string()) << '\t' << p.right.lo()
           << '\t' << p.right.hi() << '\n';
        return os.str();
    }
    case OutputFormat::Json:
        return json{{"policy", name(p.policy)},
                    {"left", range_json(p.left)},
                    {"excluded", p.excluded ? json(*p.excluded) : json(nullptr)},
                    {"right", range_json(p.right)}}
                   .dump() +
               "\n";
    }
    return {};
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string max_n;
    std::vector<std::string> policies;
    std::vector<std::string> suites;
    std::string div_mode = "floor";
    std::string seed = "1";
    std::string jobs;
    std::string format = "table";
};

constexpr std::array<const char*, 10> suite_names = {
    "partitions", "duality", "mirror", "coordinates", "kway",
    "identities", "equivalence", "search", "sort", "cross"};

// Fixture pairs that agree for every n >= 0 under floor division only.
constexpr std::array<std::pair<const char*, const char*>, 2> expr_fixtures = {{
    {"(n-2)/2", "n/2-1"},
    {"(n-1)/2+1", "(n+1)/2"},
}};
constexpr std::array<std::pair<const char*, const char*>, 3> range_fixtures = {{
    {"0 <= i < n-n/2", "0 <= i < (n+1)/2"},
    {"n-n/2 <= i < n", "(n+1)/2 <= i < n"},
    {"0 <= i <= n/2-1", "0 <= i < n/2"},
}};

oracle::VerificationReport from_equivalence(const std::string& what,
                                            const dsl::EquivalenceReport& eq,
                                            oracle::VerificationReport& into) {
    into.pass(eq.checked() - eq.failures());
    for (const dsl::Counterexample& c : eq.counterexamples()) {
        std::string at = what + " at n=" + std::to_string(c.at.n);
        if (c.k)
            at += " k=" + std::to_string(*c.k);
        into.fail({at, dsl::to_string(c.right), dsl::to_string(c.left)});
    }
    // Failures beyond the sampled counterexamples still count.
    for (std::uint64_t i = eq.counterexamples().size(); i < eq.failures(); ++i)
        into.fail({what, "", ""});
    return into;
}

template <typename F>
oracle::VerificationReport timed_report(const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    oracle::VerificationReport report(name);
    body(report);
    report.set_elapsed(std::chrono::steady_clock::now() - start);
    return report;
}

oracle::VerificationReport run_suite(const std::string& suite, std::optional<Index> max_n,
                                     const std::vector<SplitPolicy>& policies, DivMode mode,
                                     std::uint64_t seed, unsigned jobs) {
    auto bound = [&](Index fallback) { return Extent(max_n.value_or(fallback)); };
    if (suite == "partitions")
        return oracle::verify_partitions(bound(10000), policies, split_n, jobs);
    if (suite == "duality")
        return oracle::verify_duality(bound(2000));
    if (suite == "mirror")
        return oracle::verify_mirror(bound(2000));
    if (suite == "coordinates")
        return oracle::verify_coordinates(Range(-50, 51), Range(1, bound(200).value() + 1));
    if (suite == "kway")
        return oracle::verify_kway(bound(5000), Extent(64));
    if (suite == "identities") {
        return timed_report("identities", [&](oracle::VerificationReport& r) {
            const Index top = bound(1000000).value();
            from_equivalence("halves",
                             dsl::check_identity(dsl::Identity::Halves, Range(0, top + 1)), r);
            from_equivalence("connecting",
                             dsl::check_identity(dsl::Identity::Connecting,
                                                 Range(std::min<Index>(1, top + 1), top + 1)),
                             r);
            from_equivalence("kway",
                             dsl::check_identity(dsl::Identity::KwaySum,
                                                 Range(0, std::min<Index>(top, 5000) + 1),
                                                 Range(1, 65)),
                             r);
        });
    }
    if (suite == "equivalence") {
        return timed_report("equivalence", [&](oracle::VerificationReport& r) {
            const Range domain(0, bound(100).value() + 1);
            for (const auto& [a, b] : expr_fixtures)
                from_equivalence(std::string(a) + " == " + b,
                                 dsl::check_equiv(dsl::parse_expr(a), dsl::parse_expr(b), domain,
                                                  mode),
                                 r);
            for (const auto& [a, b] : range_fixtures)
                from_equivalence(std::string(a) + " == " + b,
                                 dsl::check_equiv(dsl::parse_range(a), dsl::parse_range(b),
                                                  domain, mode),
                                 r);
        });
    }
    if (suite == "search") {
        oracle::SearchSuite s;
        s.seed = seed;
        return oracle::verify_search(s);
    }
    if (suite == "sort") {
        oracle::SortSuite s;
        s.seed = seed;
        return oracle::verify_sort(s);
    }
    if (suite == "cross")
        return oracle::verify_word_cross(Extent(12));
    throw UsageError("--suite: unknown value '" + suite + "'");
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    const std::optional<Index> max_n = parse_opt(args.max_n, "--max-n");
    if (max_n && *max_n < 0)
        throw DomainError("--max-n must be non-negative");
    const DivMode mode = parse_choice<DivMode>(args.div_mode, parse_div_mode, "--div-mode");
    const Index seed = parse_int(args.seed, "--seed");
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    if (!args.jobs.empty()) {
        const Index j = parse_int(args.jobs, "--jobs");
        if (j < 1 || j > 256)
            throw UsageError("--jobs must be in [1, 256]");
        jobs = static_cast<unsigned>(j);
    }

    std::vector<SplitPolicy> policies;
    for (const std::string& p : args.policies)
        policies.push_back(parse_choice<SplitPolicy>(p, parse_policy, "--policy"));
    if (policies.empty())
        policies.assign(all_policies.begin(), all_policies.end());

    std::vector<std::string> suites = args.suites;
    if (suites.empty())
        suites.assign(suite_names.begin(), suite_names.end());
    for (const std::string& s : suites)
        if (std::find(suite_names.begin(), suite_names.end(), s) == suite_names.end())
            throw UsageError("--suite: unknown value '" + s + "'");

    std::vector<oracle::VerificationReport> reports;
    for (const std::string& s : suites)
        reports.push_back(run_suite(s, max_n, policies, mode, static_cast<std::uint64_t>(seed), jobs));

    std::size_t failed = 0;
    for (const auto& r : reports)
        failed += r.passed() ? 0 : 1;

    auto ms = [](const oracle::VerificationReport& r) {
        return std::chrono::duration<double, std::milli>(r.elapsed()).count();
    };

    if (format == OutputFormat::Json) {
        json records = json::array();
        for (const auto& r : reports) {
            json failures = json::array();
            for (const auto& f : r.failures())
                failures.push_back({{"case", f.what}, {"expected", f.expected}, {"actual", f.actual}});
            records.push_back({{"suite", r.name()},
                               {"passed", r.passed()},
                               {"checked", r.checked()},
                               {"failed", r.failed()},
                               {"elapsed_ms", ms(r)},
                               {"note", r.note()},
                               {"failures", failures}});
        }
        out << records.dump() << '\n';
    } else if (format == OutputFormat::Tsv) {
        out << "suite\tpassed\tchecked\tfailed\telapsed_ms\tnote\n";
        for (const auto& r : reports)
            out << r.name() << '\t' << (r.passed() ? 1 : 0) << '\t' << r.checked() << '\t'
                << r.failed() << '\t' << std::fixed << std::setprecision(3) << ms(r) << '\t'
                << r.note() << '\n';
    } else {
        constexpr std::size_t shown = 10;
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.name()
                << " checked=" << r.checked() << " failed=" << r.failed() << " " << std::fixed
                << std::setprecision(1) << ms(r) << " ms";
            if (!r.note().empty())
                out << " " << r.note();
            out << '\n';
            for (std::size_t i = 0; i < std::min(shown, r.failures().size()); ++i) {
                const auto& f = r.failures()[i];
                out << "    " << f.what << ": expected " << f.expected << ", got " << f.actual
                    << '\n';
            }
        }
        out << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed")
            << '\n';
    }
    return failed == 0 ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// split

struct SplitArgs {
    std::string n, b, e;
    std::string policy;
    std::string format = "table";
};

int cmd_split(const SplitArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    const SplitPolicy policy = parse_choice<SplitPolicy>(args.policy, parse_policy, "--policy");
    const auto n = parse_opt(args.n, "--n");
    const auto b = parse_opt(args.b, "--b");
    const auto e = parse_opt(args.e, "--e");
    Partition p;
    if (n && !b && !e)
        p = split_n(Extent(*n), policy);
    else if (n && b && !e)
        p = split_based(*b, Extent(*n), policy);
    else if (!n && b && e)
        p = split_be(*b, *e, policy);
    else
        throw UsageError("give exactly one frame: --n, --b with --n, or --b with --e");
    out << render(p, format);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// expr

struct ExprArgs {
    std::string text;
    std::string other;
    std::string which;
    std::string n;
    std::string b = "0";
    std::string min_n;
    std::string max_n;
    std::string max_k;
    std::string div_mode;
    std::string format = "table";
};

bool is_range(const std::string& text) { return text.find('<') != std::string::npos; }

std::vector<DivMode> modes_of(const std::string& text) {
    if (text.empty())
        return {DivMode::Floor, DivMode::Trunc};
    return {parse_choice<DivMode>(text, parse_div_mode, "--div-mode")};
}

int cmd_expr_eval(const ExprArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    if (args.n.empty())
        throw UsageError("expr eval needs --n");
    const dsl::Bindings env{parse_int(args.n, "--n"), parse_int(args.b, "--b")};
    const bool range = is_range(args.text);
    std::optional<dsl::Expr> expr;
    std::optional<dsl::RangeExpr> range_expr;
    if (range)
        range_expr = dsl::parse_range(args.text);
    else
        expr = dsl::parse_expr(args.text);

    json results = json::object();
    std::vector<std::array<std::string, 2>> rows;
    int status = exit_ok;
    for (DivMode mode : modes_of(args.div_mode)) {
        try {
            if (range) {
                const Range r = dsl::eval_range(*range_expr, env, mode);
                results[std::string(name(mode))] = {
                    {"lo", r.lo()}, {"hi", r.hi()}, {"length", r.length().value()}};
                rows.push_back({std::string(name(mode)),
                                to_string(r) + " length " + std::to_string(r.length().value())});
            } else {
                const Index v = dsl::eval_expr(*expr, env, mode);
                results[std::string(name(mode))] = v;
                rows.push_back({std::string(name(mode)), std::to_string(v)});
            }
        } catch (const Error& err) {
            results[std::string(name(mode))] = {{"error", err.what()}};
            rows.push_back({std::string(name(mode)), std::string("error: ") + err.what()});
            status = exit_usage;
        }
    }
    if (format == OutputFormat::Json) {
        out << json{{"expression", args.text}, {"n", env.n}, {"b", env.b}, {"results", results}}
                   .dump()
            << '\n';
    } else {
        for (const auto& row : rows)
            out << row[0] << (format == OutputFormat::Tsv ? "\t" : ": ") << row[1] << '\n';
    }
    return status;
}

int render_equivalence(const dsl::EquivalenceReport& report, OutputFormat format,
                       std::ostream& out) {
    if (format == OutputFormat::Json) {
        json cex = json::array();
        for (const auto& c : report.counterexamples()) {
            json j{{"n", c.at.n}, {"b", c.at.b}, {"left", dsl::to_string(c.left)},
                   {"right", dsl::to_string(c.right)}};
            if (c.k)
                j["k"] = *c.k;
            cex.push_back(j);
        }
        out << json{{"holds", report.holds()},
                    {"checked", report.checked()},
                    {"failures", report.failures()},
                    {"counterexamples", cex}}
                   .dump()
            << '\n';
    } else if (format == OutputFormat::Tsv) {
        out << "n\tb\tk\tleft\tright\n";
        for (const auto& c : report.counterexamples())
            out << c.at.n << '\t' << c.at.b << '\t' << (c.k ? std::to_string(*c.k) : "") << '\t'
                << dsl::to_string(c.left) << '\t' << dsl::to_string(c.right) << '\n';
    } else {
        if (report.holds()) {
            out << "holds (checked " << report.checked() << ")\n";
        } else {
            out << "fails: " << report.failures() << " of " << report.checked() << "\n";
            for (const auto& c : report.counterexamples()) {
                out << "  n=" << c.at.n;
                if (c.at.b != 0)
                    out << " b=" << c.at.b;
                if (c.k)
                    out << " k=" << *c.k;
                out << ": " << dsl::to_string(c.left) << " vs " << dsl::to_string(c.right) << '\n';
            }
        }
    }
    return report.holds() ? exit_ok : exit_failed;
}

Range n_domain(const ExprArgs& args, Index lo, Index hi) {
    const Index first = args.min_n.empty() ? lo : parse_int(args.min_n, "--min-n");
    const Index last = args.max_n.empty() ? hi : parse_int(args.max_n, "--max-n");
    if (last < first)
        throw UsageError("--max-n must not be below --min-n");
    return Range(first, checked_add(last, 1));
}

int cmd_expr_equiv(const ExprArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    if (is_range(args.text) != is_range(args.other))
        throw UsageError("expr equiv compares two expressions or two ranges, not one of each");
    const Range domain = n_domain(args, 0, 100);
    const DivMode mode = args.div_mode.empty()
                             ? DivMode::Floor
                             : parse_choice<DivMode>(args.div_mode, parse_div_mode, "--div-mode");
    const Index b = parse_int(args.b, "--b");
    const Range b_domain(b, checked_add(b, 1));
    const dsl::EquivalenceReport report =
        is_range(args.text)
            ? dsl::check_equiv(dsl::parse_range(args.text), dsl::parse_range(args.other), domain,
                               mode, b_domain)
            : dsl::check_equiv(dsl::parse_expr(args.text), dsl::parse_expr(args.other), domain,
                               mode, b_domain);
    return render_equivalence(report, format, out);
}

int cmd_expr_identity(const ExprArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    const dsl::Identity id =
        parse_choice<dsl::Identity>(args.which, dsl::parse_identity, "identity");
    std::optional<Range> k_domain;
    Range domain;
    switch (id) {
    case dsl::Identity::Halves:
        domain = n_domain(args, 0, 1000000);
        break;
    case dsl::Identity::Connecting:
        domain = n_domain(args, 1, 1000000);
        break;
    case dsl::Identity::KwaySum: {
        domain = n_domain(args, 0, 5000);
        const Index max_k = args.max_k.empty() ? 64 : parse_int(args.max_k, "--max-k");
        if (max_k < 1)
            throw DomainError("--max-k must be at least 1");
        k_domain = Range(1, checked_add(max_k, 1));
        break;
    }
    }
    return render_equivalence(dsl::check_identity(id, domain, k_domain), format, out);
}

// ---------------------------------------------------------------------------
// algorithms

struct AlgoArgs {
    std::string array;
    std::string target;
    std::string variant = "rightplus";
    std::string text;
    bool check_sorted = false;
    std::string format = "table";
};

int cmd_search(const AlgoArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    if (args.target.empty())
        throw UsageError("search needs --target");
    const std::vector<Value> a = parse_array(args.array);
    const Value t = parse_int(args.target, "--target");
    const SearchVariant v =
        parse_choice<SearchVariant>(args.variant, parse_search_variant, "--variant");
    const auto found = binary_search(a, t, v, SearchOptions{args.check_sorted, {}});
    if (format == OutputFormat::Json)
        out << json{{"index", found ? json(*found) : json(nullptr)}}.dump() << '\n';
    else if (format == OutputFormat::Tsv)
        out << "index\n" << (found ? *found : -1) << '\n';
    else if (found)
        out << "found at " << *found << '\n';
    else
        out << "not found (-1)\n";
    return exit_ok;
}

int cmd_chop(const AlgoArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    const std::vector<Value> a = parse_array(args.array);
    const std::vector<Index> points = chop_points(a);
    if (format == OutputFormat::Json) {
        json values = json::array();
        for (Index j : points)
            values.push_back(a[static_cast<std::size_t>(j)]);
        out << json{{"indices", points}, {"values", values}}.dump() << '\n';
        return exit_ok;
    }
    if (format == OutputFormat::Tsv) {
        out << "index\tvalue\n";
        for (Index j : points)
            out << j << '\t' << a[static_cast<std::size_t>(j)] << '\n';
        return exit_ok;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        out << (i ? "," : "") << points[i];
    out << '\n';
    return exit_ok;
}

int cmd_cross(const AlgoArgs& args, std::ostream& out) {
    const OutputFormat format = format_of(args.format);
    const bool crosses = word_crosses_center(args.text);
    if (format == OutputFormat::Json)
        out << json{{"crosses", crosses}}.dump() << '\n';
    else
        out << (crosses ? "true" : "false") << '\n';
    return exit_ok;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Index-range algebra, array splitting and their brute-force checks", "idxsplit"};
    app.require_subcommand(1);
    const std::string format_help = "table|tsv|json";

    std::string table_id;
    std::string table_format = "table";
    auto* tabulate = app.add_subcommand("tabulate", "Print a landmark or bounds table");
    tabulate->add_option("table", table_id, "t1|t2|t3|t4|t01|ranges|final|loops")->required();
    tabulate->add_option("--format", table_format, format_help);

    SplitArgs split_args;
    auto* split = app.add_subcommand("split", "Split a frame under one policy");
    split->add_option("--n", split_args.n, "frame length");
    split->add_option("--b", split_args.b, "first index");
    split->add_option("--e", split_args.e, "last index (inclusive)");
    split->add_option("--policy", split_args.policy,
                      "natural|leftplus|rightplus|cutleft|cutright")
        ->required();
    split->add_option("--format", split_args.format, format_help);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the brute-force verification suites");
    verify->add_option("--max-n", verify_args.max_n, "upper bound of every n sweep");
    verify->add_option("--policy", verify_args.policies, "restrict the partition sweep");
    verify->add_option("--suite", verify_args.suites, "run only these suites");
    verify->add_option("--div-mode", verify_args.div_mode, "floor|trunc for the equivalence suite");
    verify->add_option("--seed", verify_args.seed, "seed for the random cases");
    verify->add_option("--jobs", verify_args.jobs, "threads for the partition sweep");
    verify->add_option("--format", verify_args.format, format_help);

    ExprArgs expr_args;
    auto* expr = app.add_subcommand("expr", "Evaluate and compare index expressions");
    expr->require_subcommand(1);
    auto* eval = expr->add_subcommand("eval", "Evaluate an expression or range");
    eval->add_option("text", expr_args.text, "e.g. \"(n+1)/2\" or \"0 <= i < n/2\"")->required();
    eval->add_option("--n", expr_args.n, "frame length");
    eval->add_option("--b", expr_args.b, "first index");
    eval->add_option("--div-mode", expr_args.div_mode, "floor|trunc (default: both)");
    eval->add_option("--format", expr_args.format, format_help);
    auto* equiv = expr->add_subcommand("equiv", "Compare two expressions over an n sweep");
    equiv->add_option("first", expr_args.text)->required();
    equiv->add_option("second", expr_args.other)->required();
    equiv->add_option("--min-n", expr_args.min_n, "default 0");
    equiv->add_option("--max-n", expr_args.max_n, "default 100");
    equiv->add_option("--b", expr_args.b, "first index");
    equiv->add_option("--div-mode", expr_args.div_mode, "floor|trunc (default floor)");
    equiv->add_option("--format", expr_args.format, format_help);
    auto* identity = expr->add_subcommand("identity", "Sweep a built-in identity");
    identity->add_option("which", expr_args.which, "halves|connecting|kway")->required();
    identity->add_option("--min-n", expr_args.min_n);
    identity->add_option("--max-n", expr_args.max_n);
    identity->add_option("--max-k", expr_args.max_k, "kway only, default 64");
    identity->add_option("--format", expr_args.format, format_help);

    AlgoArgs algo_args;
    auto* search = app.add_subcommand("search", "Binary search a sorted array");
    search->add_option("--array", algo_args.array, "comma-separated integers")->required();
    search->add_option("--target", algo_args.target)->required();
    search->add_option("--variant", algo_args.variant, "rightplus|cutout|compact");
    search->add_flag("--check-sorted", algo_args.check_sorted, "reject unsorted input");
    search->add_option("--format", algo_args.format, format_help);
    auto* chop = app.add_subcommand("chop", "Positions of in-sorted elements");
    chop->add_option("--array", algo_args.array, "comma-separated integers")->required();
    chop->add_option("--format", algo_args.format, format_help);
    auto* cross = app.add_subcommand("cross", "Does a word cross the center of the text");
    cross->add_option("--text", algo_args.text)->required();
    cross->add_option("--format", algo_args.format, format_help);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (tabulate->parsed()) {
            const TableId id = parse_choice<TableId>(table_id, parse_table_id, "table");
            out << render_table(id, format_of(table_format));
            return exit_ok;
        }
        if (split->parsed())
            return cmd_split(split_args, out);
        if (verify->parsed())
            return cmd_verify(verify_args, out);
        if (eval->parsed())
            return cmd_expr_eval(expr_args, out);
        if (equiv->parsed())
            return cmd_expr_equiv(expr_args, out);
        if (identity->parsed())
            return cmd_expr_identity(expr_args, out);
        if (search->parsed())
            return cmd_search(algo_args, out);
        if (chop->parsed())
            return cmd_chop(algo_args, out);
        if (cross->parsed())
            return cmd_cross(algo_args, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace idxsplit::cli
