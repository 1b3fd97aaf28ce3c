#include <doctest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "idxsplit/cli/commands.hpp"
#include "idxsplit/cli/tables.hpp"

using namespace idxsplit;
using namespace idxsplit::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::map<std::string, Index> marks(const LandmarkTable& t) {
    std::map<std::string, Index> out;
    for (const Mark& m : t.landmarks)
        out[m.label] = m.position;
    for (const Mark& m : t.expressions)
        out[m.label] = m.position;
    return out;
}

} // namespace

TEST_CASE("landmark tables") {
    using M = std::map<std::string, Index>;
    CHECK(marks(landmark_table(TableId::T1)) ==
          M{{"el", 1}, {"c", 2}, {"rs", 3}, {"(n-1)/2", 2}, {"n/2", 2}, {"(n+1)/2", 3},
            {"(s-1)/2", 1}, {"s/2", 2}, {"(s+1)/2", 2}});
    CHECK(marks(landmark_table(TableId::T2)) ==
          M{{"el", 2}, {"rs", 3}, {"(n-1)/2", 2}, {"n/2", 3}, {"(n+1)/2", 3},
            {"(s-1)/2", 2}, {"s/2", 2}, {"(s+1)/2", 3}});
    CHECK(marks(landmark_table(TableId::T3)) ==
          M{{"el", 1}, {"c", 2}, {"rs", 3}, {"n/2-1", 1}, {"n/2", 2}, {"n/2+1", 3},
            {"s/2-1", 1}, {"s/2", 2}, {"s/2+1", 3}});
    CHECK(marks(landmark_table(TableId::T4)) ==
          M{{"el", 2}, {"rs", 3}, {"n/2-1", 2}, {"n/2", 3}, {"n/2+1", 4},
            {"s/2-1", 1}, {"s/2", 2}, {"s/2+1", 3}});
    const LandmarkTable two = landmark_table(TableId::T01);
    CHECK(marks(two) == M{{"el", 0}, {"rs", 1}, {"n/2-1", 0}, {"n/2", 1}, {"n/2+1", 2},
                          {"s/2-1", -1}, {"s/2", 0}, {"s/2+1", 1}});
    CHECK(two.columns == Range(-1, 3));
    CHECK_THROWS_AS(landmark_table(TableId::Final), DomainError);
}

TEST_CASE("range table") {
    const std::vector<RangeRow> rows = range_table();
    REQUIRE(rows.size() == 4);
    const std::vector<std::vector<std::string>> want = {
        {"0", "0", "0", "1", "1", "2"},
        {"1 or 0", "1", "1*", "2", "2*", "3"},
        {"0", "0", "0", "0", "1", "1"},
        {"0", "0", "1*", "1", "2*", "2"},
    };
    for (std::size_t r = 0; r < rows.size(); ++r) {
        REQUIRE(rows[r].cells.size() == 6);
        for (std::size_t c = 0; c < 6; ++c)
            CHECK(rows[r].cells[c].text() == want[r][c]);
    }
}

TEST_CASE("final table") {
    const std::vector<BoundsRow> rows = bounds_table();
    REQUIRE(rows.size() == 5);
    const std::vector<std::pair<std::string, std::string>> want = {
        {"0 <= i < n/2", "(n+1)/2 <= i < n"},
        {"0 <= i < (n+1)/2", "(n+1)/2 <= i < n"},
        {"0 <= i < n/2", "n/2 <= i < n"},
        {"0 <= i < (n+1)/2-1", "(n+1)/2 <= i < n"},
        {"0 <= i < n/2", "n/2+1 <= i < n"},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].policy == all_policies[i]);
        CHECK(rows[i].left_range() == want[i].first);
        CHECK(rows[i].right_range() == want[i].second);
    }
}

TEST_CASE("perturbing the splitter flips table cells") {
    // Right+ with its boundary moved one step to the right.
    const oracle::SplitFn shifted = [](Extent n, SplitPolicy p) {
        Partition out = split_n(n, p);
        if (p == SplitPolicy::RightPlus && n.value() >= 2)
            out = Partition{Range(0, out.left.hi() + 1), std::nullopt,
                            Range(out.right.lo() + 1, n.value()), p};
        return out;
    };
    CHECK(render_table(TableId::Final, OutputFormat::Tsv, shifted) !=
          render_table(TableId::Final, OutputFormat::Tsv));
    CHECK(bounds_table(shifted)[2].left_bound != "n/2");

    // Natural halves that lose one element on the right.
    const oracle::SplitFn narrow = [](Extent n, SplitPolicy p) {
        Partition out = split_n(n, p);
        if (p == SplitPolicy::Natural && !out.right.empty())
            out.right = Range(out.right.lo() + 1, out.right.hi());
        return out;
    };
    CHECK(render_table(TableId::T1, OutputFormat::Tsv, narrow) !=
          render_table(TableId::T1, OutputFormat::Tsv));
}

TEST_CASE("table output formats") {
    const nlohmann::json t1 = nlohmann::json::parse(render_table(TableId::T1, OutputFormat::Json));
    REQUIRE(t1.is_array());
    bool saw = false;
    for (const auto& rec : t1)
        if (rec["label"] == "(n+1)/2") {
            CHECK(rec["position"] == 3);
            saw = true;
        }
    CHECK(saw);

    const std::string tsv = render_table(TableId::Final, OutputFormat::Tsv);
    CHECK(has(tsv, "rightplus\t0 <= i < n/2\tn/2 <= i < n\n"));
    CHECK_FALSE(has(render_table(TableId::Loops, OutputFormat::Table), "Cut left"));
    CHECK(has(render_table(TableId::Loops, OutputFormat::Table),
              "for (int i = n/2+1; i < n; i++)"));
    for (OutputFormat f : {OutputFormat::Table, OutputFormat::Tsv, OutputFormat::Json})
        CHECK(parse_format(name(f)) == f);
}

TEST_CASE("cli: tabulate") {
    const Result t3 = run_cli({"tabulate", "t3"});
    CHECK(t3.code == exit_ok);
    CHECK(has(t3.out, "n/2-1"));
    CHECK(run_cli({"tabulate", "t9"}).code == exit_usage);
    const Result json = run_cli({"tabulate", "final", "--format", "json"});
    CHECK(json.code == exit_ok);
    CHECK(nlohmann::json::parse(json.out).size() == 5);
}

TEST_CASE("cli: split") {
    const Result six = run_cli({"split", "--n", "6", "--policy", "natural"});
    CHECK(six.code == exit_ok);
    CHECK(has(six.out, "[0, 3)"));
    CHECK(has(six.out, "[3, 6)"));

    const Result based = run_cli({"split", "--b", "10", "--n", "5", "--policy", "rightplus",
                                  "--format", "json"});
    REQUIRE(based.code == exit_ok);
    const nlohmann::json rec = nlohmann::json::parse(based.out);
    CHECK(rec["policy"] == "rightplus");
    CHECK(rec["left"] == nlohmann::json::array({10, 12}));
    CHECK(rec["right"] == nlohmann::json::array({12, 15}));
    CHECK(rec["excluded"].is_null());

    const Result be = run_cli({"split", "--b", "0", "--e", "4", "--policy", "cutright",
                               "--format", "json"});
    REQUIRE(be.code == exit_ok);
    CHECK(nlohmann::json::parse(be.out)["excluded"] == 2);

    CHECK(run_cli({"split", "--n=-3", "--policy", "natural"}).code == exit_usage);
    CHECK(run_cli({"split", "--policy", "natural"}).code == exit_usage);
    CHECK(run_cli({"split", "--n", "4", "--e", "3", "--policy", "natural"}).code == exit_usage);
    CHECK(run_cli({"split", "--n", "4", "--policy", "middle"}).code == exit_usage);
    CHECK(run_cli({"split", "--n", "99999999999999999999", "--policy", "natural"}).code ==
          exit_usage);
    CHECK(run_cli({"split", "--b", "9223372036854775807", "--n", "5", "--policy", "natural"})
              .code == exit_usage);
}

TEST_CASE("cli: verify") {
    const Result ok = run_cli({"verify", "--max-n", "300"});
    CHECK(ok.code == exit_ok);
    CHECK(has(ok.out, "seed"));
    const Result trunc = run_cli({"verify", "--suite", "equivalence", "--div-mode", "trunc"});
    CHECK(trunc.code == exit_failed);
    const Result json =
        run_cli({"verify", "--suite", "partitions", "--max-n", "50", "--format", "json"});
    CHECK(json.code == exit_ok);
    CHECK(nlohmann::json::accept(json.out));
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == exit_usage);
}

TEST_CASE("cli: expr") {
    const Result eval = run_cli({"expr", "eval", "(n-1)/2+1", "--n", "0"});
    CHECK(eval.code == exit_ok);
    CHECK(has(eval.out, "floor"));
    CHECK(has(eval.out, "trunc"));
    const Result range = run_cli({"expr", "eval", "0 <= i <= n/2", "--n", "-1", "--div-mode", "trunc"});
    CHECK(range.code == exit_ok);
    CHECK(has(range.out, "[0, 1)"));

    CHECK(run_cli({"expr", "equiv", "(n-2)/2", "n/2-1"}).code == exit_ok);
    const Result bad = run_cli({"expr", "equiv", "(n-2)/2", "n/2-1", "--div-mode", "trunc"});
    CHECK(bad.code == exit_failed);
    CHECK(has(bad.out, "n=1"));
    CHECK(run_cli({"expr", "equiv", "0 <= i < n-n/2", "0 <= i < (n+1)/2", "--max-n", "1000"})
              .code == exit_ok);

    CHECK(run_cli({"expr", "identity", "halves", "--max-n", "1000"}).code == exit_ok);
    CHECK(run_cli({"expr", "identity", "connecting", "--min-n", "1"}).code == exit_ok);
    CHECK(run_cli({"expr", "identity", "connecting", "--min-n", "0"}).code == exit_usage);
    CHECK(run_cli({"expr", "identity", "kway", "--max-n", "100", "--max-k", "8"}).code == exit_ok);

    CHECK(run_cli({"expr", "eval", "n//2", "--n", "4"}).code == exit_usage);
    CHECK(run_cli({"expr", "eval", "0 <= j < n", "--n", "4"}).code == exit_usage);
}

TEST_CASE("cli: search, chop, cross") {
    const Result found =
        run_cli({"search", "--array", "1,3,5", "--target", "3", "--variant", "rightplus"});
    CHECK(found.code == exit_ok);
    CHECK(found.out == "found at 1\n");
    for (const char* v : {"rightplus", "cutout", "compact"})
        CHECK(run_cli({"search", "--array", "1,3,5", "--target", "4", "--variant", v}).out ==
              "not found (-1)\n");
    CHECK(run_cli({"search", "--array", "", "--target", "7"}).out == "not found (-1)\n");
    const Result absent = run_cli({"search", "--array", "1,3,5", "--target", "4", "--format", "json"});
    CHECK(nlohmann::json::parse(absent.out)["index"].is_null());
    CHECK(run_cli({"search", "--array", "3,1", "--target", "1", "--check-sorted"}).code ==
          exit_usage);
    CHECK(run_cli({"search", "--array", "1,x", "--target", "1"}).code == exit_usage);

    CHECK(run_cli({"chop", "--array", "1,4,3,6,13,11,15,18"}).out == "0,3,6,7\n");
    CHECK(run_cli({"cross", "--text", "Two cats above"}).out == "true\n");
    CHECK(run_cli({"cross", "--text", "One cat above"}).out == "false\n");
}

TEST_CASE("cli: usage") {
    CHECK(run_cli({}).code == exit_usage);
    CHECK(run_cli({"frobnicate"}).code == exit_usage);
    CHECK(run_cli({"--help"}).code == exit_ok);
    const Result err = run_cli({"split", "--n=-3", "--policy", "natural"});
    CHECK(has(err.err, "error"));
}
