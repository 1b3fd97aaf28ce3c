#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idxsplit/oracle.hpp"
#include "idxsplit/split.hpp"

namespace idxsplit::cli {

enum class OutputFormat { Table, Tsv, Json };

std::string_view name(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view text);

enum class TableId {
    T1,      // landmarks of 01234 through (n+-1)/2 and (s+-1)/2
    T2,      // same for 012345
    T3,      // landmarks of 01234 through n/2+-1 and s/2+-1
    T4,      // same for 012345
    T01,     // n/2+-1 and s/2+-1 on the two-element array 01
    Ranges,  // element counts of the naive n/2 ranges for n in -1..4
    Final,   // left/right half bounds for every policy
    Loops,   // the same bounds as C for-loops
};

std::string_view name(TableId id);
std::optional<TableId> parse_table_id(std::string_view text);

// Every table below is computed from the live splitter (through `split`) and
// the expression evaluator; nothing is stored as finished text.

struct Mark {
    std::string label;
    Index position = 0;
};

struct LandmarkTable {
    std::string title;
    Index n = 0;
    Range columns;                 // positions shown, may extend past [0, n)
    std::vector<Mark> landmarks;   // el, c, rs
    std::vector<Mark> expressions;
};

LandmarkTable landmark_table(TableId id, const oracle::SplitFn& split = split_n);

struct RangeCell {
    Index n = 0;
    Index floor_count = 0;
    Index trunc_count = 0;
    bool includes_center = false;  // under floor division

    // "1*", or "1 or 0" where the two division modes disagree.
    std::string text() const;
};

struct RangeRow {
    int number = 0;
    std::string range;
    std::vector<RangeCell> cells;
};

std::vector<RangeRow> range_table();

struct BoundsRow {
    SplitPolicy policy = SplitPolicy::Natural;
    std::string left_bound;   // upper bound of the left half, e.g. "n/2"
    std::string right_bound;  // lower bound of the right half

    std::string left_range() const;   // "0 <= i < n/2"
    std::string right_range() const;  // "(n+1)/2 <= i < n"
};

// For each policy, the first expression among n/2, (n+1)/2, n/2+1 and
// (n+1)/2-1 reproducing the live split for n in [0, 64]; "?" if none does.
std::vector<BoundsRow> bounds_table(const oracle::SplitFn& split = split_n);

std::string render_table(TableId id, OutputFormat format,
                         const oracle::SplitFn& split = split_n);

} // namespace idxsplit::cli
