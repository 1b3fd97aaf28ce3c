// One line per acceptance criterion: PASS or FAIL, the measured time and
// the time limit. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "idxsplit/algorithms.hpp"
#include "idxsplit/cli/tables.hpp"
#include "idxsplit/expr.hpp"
#include "idxsplit/oracle.hpp"

using namespace idxsplit;

namespace {

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

using Marks = std::map<std::string, Index>;

Marks marks(const cli::LandmarkTable& t) {
    Marks out;
    for (const cli::Mark& m : t.landmarks)
        out[m.label] = m.position;
    for (const cli::Mark& m : t.expressions)
        out[m.label] = m.position;
    return out;
}

bool tables(std::string& detail) {
    // Expected positions, frozen.
    const std::vector<std::pair<cli::TableId, Marks>> want = {
        {cli::TableId::T1, {{"el", 1}, {"c", 2}, {"rs", 3}, {"(n-1)/2", 2}, {"n/2", 2},
                            {"(n+1)/2", 3}, {"(s-1)/2", 1}, {"s/2", 2}, {"(s+1)/2", 2}}},
        {cli::TableId::T2, {{"el", 2}, {"rs", 3}, {"(n-1)/2", 2}, {"n/2", 3}, {"(n+1)/2", 3},
                            {"(s-1)/2", 2}, {"s/2", 2}, {"(s+1)/2", 3}}},
        {cli::TableId::T3, {{"el", 1}, {"c", 2}, {"rs", 3}, {"n/2-1", 1}, {"n/2", 2},
                            {"n/2+1", 3}, {"s/2-1", 1}, {"s/2", 2}, {"s/2+1", 3}}},
        {cli::TableId::T4, {{"el", 2}, {"rs", 3}, {"n/2-1", 2}, {"n/2", 3}, {"n/2+1", 4},
                            {"s/2-1", 1}, {"s/2", 2}, {"s/2+1", 3}}},
        {cli::TableId::T01, {{"el", 0}, {"rs", 1}, {"n/2-1", 0}, {"n/2", 1}, {"n/2+1", 2},
                             {"s/2-1", -1}, {"s/2", 0}, {"s/2+1", 1}}},
    };
    std::size_t cells = 0;
    for (const auto& [id, expected] : want) {
        const Marks got = marks(cli::landmark_table(id));
        if (got != expected) {
            detail = "mismatch in " + std::string(cli::name(id));
            return false;
        }
        cells += got.size();
    }
    detail = std::to_string(cells) + " cells";
    return true;
}

bool range_table(std::string& detail) {
    const char* rows[] = {"0 <= i < n/2", "0 <= i <= n/2", "n/2 < i < n", "n/2 <= i < n"};
    // Columns n = 0..4 under floor division.
    const Index counts[4][5] = {{0, 0, 1, 1, 2}, {1, 1, 2, 2, 3}, {0, 0, 0, 1, 1}, {0, 1, 1, 2, 2}};
    // Whether the range holds the center, for n = 1 and n = 3.
    const bool starred[4] = {false, true, false, true};
    // n = -1: trunc and floor counts.
    const Index minus_one[4][2] = {{0, 0}, {1, 0}, {0, 0}, {0, 0}};

    for (int r = 0; r < 4; ++r) {
        const dsl::RangeExpr re = dsl::parse_range(rows[r]);
        for (Index n = 0; n <= 4; ++n) {
            const Range got = dsl::eval_range(re, dsl::Bindings{n, 0}, DivMode::Floor);
            if (got.length().value() != counts[r][n]) {
                detail = std::string(rows[r]) + " at n=" + std::to_string(n);
                return false;
            }
            if (n % 2 == 1 && contains(got, n / 2) != starred[r]) {
                detail = std::string(rows[r]) + " center at n=" + std::to_string(n);
                return false;
            }
        }
        const Index trunc =
            dsl::eval_range(re, dsl::Bindings{-1, 0}, DivMode::Trunc).length().value();
        const Index floor =
            dsl::eval_range(re, dsl::Bindings{-1, 0}, DivMode::Floor).length().value();
        if (trunc != minus_one[r][0] || floor != minus_one[r][1]) {
            detail = std::string(rows[r]) + " at n=-1";
            return false;
        }
    }
    const std::vector<cli::RangeRow> rendered = cli::range_table();
    if (rendered.size() != 4 || rendered[1].cells.front().text() != "1 or 0") {
        detail = "rendered table lacks the 1 or 0 cell";
        return false;
    }
    detail = "24 cells";
    return true;
}

bool report_ok(const oracle::VerificationReport& r, std::string& detail) {
    detail = std::to_string(r.checked()) + " checks, " + std::to_string(r.failed()) + " failures";
    if (!r.note().empty())
        detail += ", " + r.note();
    if (!r.failures().empty())
        detail += "; first: " + r.failures().front().what;
    return r.passed();
}

bool partitions(std::string& detail) {
    return report_ok(oracle::verify_partitions(Extent(10000), all_policies), detail);
}

bool identities(std::string& detail) {
    const dsl::EquivalenceReport halves = dsl::check_identity(dsl::Identity::Halves, Range(0, 1000001));
    const dsl::EquivalenceReport connecting =
        dsl::check_identity(dsl::Identity::Connecting, Range(1, 1000001));
    const dsl::EquivalenceReport kway =
        dsl::check_identity(dsl::Identity::KwaySum, Range(0, 5001), Range(1, 65));
    detail = std::to_string(halves.checked() + connecting.checked() + kway.checked()) + " checks";
    const bool sized = halves.checked() == 1000001 && connecting.checked() == 1000000 &&
                       kway.checked() == 5001 * 64;
    return sized && halves.holds() && connecting.holds() && kway.holds();
}

bool equivalences(std::string& detail) {
    struct Pair {
        const char* a;
        const char* b;
        Index trunc_failure;
    };
    const Pair pairs[] = {{"(n-2)/2", "n/2-1", 1}, {"(n-1)/2+1", "(n+1)/2", 0}};
    for (const Pair& p : pairs) {
        const dsl::Expr a = dsl::parse_expr(p.a);
        const dsl::Expr b = dsl::parse_expr(p.b);
        const auto floor = dsl::check_equiv(a, b, Range(0, 101), DivMode::Floor);
        const auto trunc = dsl::check_equiv(a, b, Range(0, 101), DivMode::Trunc);
        if (!floor.holds() || floor.checked() != 101) {
            detail = std::string(p.a) + " fails under floor";
            return false;
        }
        if (trunc.failures() != 1 || trunc.counterexamples().size() != 1 ||
            trunc.counterexamples()[0].at.n != p.trunc_failure) {
            detail = std::string(p.a) + " trunc counterexamples wrong";
            return false;
        }
    }
    detail = "floor holds on [0, 100]; trunc fails at n=1 and n=0 only";
    return true;
}

bool duality(std::string& detail) {
    return report_ok(oracle::verify_duality(Extent(2000)), detail);
}

bool search(std::string& detail) {
    return report_ok(oracle::verify_search(oracle::SearchSuite{}), detail);
}

bool sorting(std::string& detail) {
    return report_ok(oracle::verify_sort(oracle::SortSuite{}), detail);
}

bool worked_examples(std::string& detail) {
    const std::vector<Value> chop = {1, 4, 3, 6, 13, 11, 15, 18};
    std::vector<Value> values;
    for (Index j : chop_points(chop))
        values.push_back(chop[static_cast<std::size_t>(j)]);
    if (values != std::vector<Value>{1, 6, 15, 18}) {
        detail = "chop";
        return false;
    }
    if (word_crosses_center("One cat above") || !word_crosses_center("Two cats above")) {
        detail = "cross";
        return false;
    }
    const oracle::VerificationReport r = oracle::verify_word_cross(Extent(12));
    if (r.checked() != 8191) {
        detail = "expected 8191 strings, checked " + std::to_string(r.checked());
        return false;
    }
    return report_ok(r, detail);
}

bool coordinates(std::string& detail) {
    return report_ok(oracle::verify_coordinates(Range(-50, 51), Range(1, 201)), detail);
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "landmark tables", 1.0, tables},
        {"AC2", "ranges with central position", 1.0, range_table},
        {"AC3", "partitions n in [0, 10000]", 10.0, partitions},
        {"AC4", "identities", 10.0, identities},
        {"AC5", "equivalence claims", 1.0, equivalences},
        {"AC6", "duality n in [1, 2000]", 1.0, duality},
        {"AC7", "binary search", 30.0, search},
        {"AC8", "sorting", 30.0, sorting},
        {"AC9", "worked examples", 5.0, worked_examples},
        {"AC10", "coordinate agreement", 5.0, coordinates},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.limit_seconds) {
            ok = false;
            detail += "; over time";
        }
        failed += ok ? 0 : 1;
        std::printf("%-4s %s  %-30s %8.3f s (limit %.0f s)  %s\n", c.id, ok ? "PASS" : "FAIL",
                    c.title, seconds, c.limit_seconds, detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
