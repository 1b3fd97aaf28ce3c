#include "idxsplit/cli/tables.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "idxsplit/expr.hpp"

namespace idxsplit::cli {
namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string aligned(const Grid& grid) {
    std::vector<std::size_t> width;
    for (const auto& row : grid) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + '\n';
    }
    return out;
}

std::string tsv(const Grid& grid) {
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += '\t';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

struct LandmarkSpec {
    TableId id;
    const char* title;
    Index n;
    std::array<const char*, 6> expressions;
};

constexpr std::array<LandmarkSpec, 5> landmark_specs = {{
    {TableId::T1, "The summary for 01234", 5,
     {"(n-1)/2", "n/2", "(n+1)/2", "(s-1)/2", "s/2", "(s+1)/2"}},
    {TableId::T2, "The summary for 012345", 6,
     {"(n-1)/2", "n/2", "(n+1)/2", "(s-1)/2", "s/2", "(s+1)/2"}},
    {TableId::T3, "The summary for 01234", 5, {"n/2-1", "n/2", "n/2+1", "s/2-1", "s/2", "s/2+1"}},
    {TableId::T4, "The summary for 012345", 6, {"n/2-1", "n/2", "n/2+1", "s/2-1", "s/2", "s/2+1"}},
    {TableId::T01, "The summary for 01", 2, {"n/2-1", "n/2", "n/2+1", "s/2-1", "s/2", "s/2+1"}},
}};

constexpr std::array<const char*, 4> bound_candidates = {"n/2", "(n+1)/2", "n/2+1",
                                                         "(n+1)/2-1"};

constexpr Index bounds_probe_max_n = 64;

std::string display_name(SplitPolicy p) {
    switch (p) {
    case SplitPolicy::Natural: return "Natural";
    case SplitPolicy::LeftPlus: return "Left+";
    case SplitPolicy::RightPlus: return "Right+";
    case SplitPolicy::CutLeft: return "Cut left";
    case SplitPolicy::CutRight: return "Cut right";
    }
    return "?";
}

template <typename Side>
std::string first_matching_bound(const oracle::SplitFn& split, SplitPolicy policy, Side side) {
    for (const char* text : bound_candidates) {
        const dsl::Expr bound = dsl::parse_expr(text);
        bool all = true;
        for (Index n = 0; n <= bounds_probe_max_n && all; ++n) {
            const Index v = dsl::eval_expr(bound, dsl::Bindings{n, 0}, DivMode::Floor);
            all = side(split(Extent(n), policy), n, v);
        }
        if (all)
            return text;
    }
    return "?";
}

std::string render_landmarks(const LandmarkTable& t, OutputFormat format) {
    if (format == OutputFormat::Table) {
        Grid grid;
        std::vector<std::string> header = {""};
        for (Index p = t.columns.lo(); p < t.columns.hi(); ++p)
            header.push_back(std::to_string(p));
        grid.push_back(header);
        auto strip = [&](const std::string& label, const std::vector<Mark>& marks) {
            std::vector<std::string> row(header.size());
            row[0] = label;
            for (const Mark& m : marks) {
                auto& cell = row[static_cast<std::size_t>(m.position - t.columns.lo() + 1)];
                cell += cell.empty() ? m.label : " " + m.label;
            }
            grid.push_back(row);
        };
        strip("landmarks", t.landmarks);
        for (const Mark& m : t.expressions)
            strip(m.label, {m});
        return t.title + " (n=" + std::to_string(t.n) + ")\n" + aligned(grid);
    }
    if (format == OutputFormat::Tsv) {
        Grid grid = {{"n", "kind", "label", "position"}};
        for (const Mark& m : t.landmarks)
            grid.push_back({std::to_string(t.n), "landmark", m.label, std::to_string(m.position)});
        for (const Mark& m : t.expressions)
            grid.push_back(
                {std::to_string(t.n), "expression", m.label, std::to_string(m.position)});
        return tsv(grid);
    }
    nlohmann::json records = nlohmann::json::array();
    for (const Mark& m : t.landmarks)
        records.push_back({{"n", t.n}, {"kind", "landmark"}, {"label", m.label},
                           {"position", m.position}});
    for (const Mark& m : t.expressions)
        records.push_back({{"n", t.n}, {"kind", "expression"}, {"label", m.label},
                           {"position", m.position}});
    return records.dump() + "\n";
}

std::string render_ranges(OutputFormat format) {
    const std::vector<RangeRow> rows = range_table();
    if (format == OutputFormat::Table) {
        Grid grid;
        std::vector<std::string> header = {"", "number of elements"};
        for (const RangeCell& c : rows.front().cells)
            header.push_back("n=" + std::to_string(c.n));
        grid.push_back(header);
        for (const RangeRow& r : rows) {
            std::vector<std::string> line = {std::to_string(r.number), r.range};
            for (const RangeCell& c : r.cells)
                line.push_back(c.text());
            grid.push_back(line);
        }
        return "Ranges with central position included\n" + aligned(grid) +
               "*includes central position\n";
    }
    if (format == OutputFormat::Tsv) {
        Grid grid = {{"row", "range", "n", "floor", "trunc", "center"}};
        for (const RangeRow& r : rows)
            for (const RangeCell& c : r.cells)
                grid.push_back({std::to_string(r.number), r.range, std::to_string(c.n),
                                std::to_string(c.floor_count), std::to_string(c.trunc_count),
                                c.includes_center ? "1" : "0"});
        return tsv(grid);
    }
    nlohmann::json records = nlohmann::json::array();
    for (const RangeRow& r : rows)
        for (const RangeCell& c : r.cells)
            records.push_back({{"row", r.number},
                               {"range", r.range},
                               {"n", c.n},
                               {"floor", c.floor_count},
                               {"trunc", c.trunc_count},
                               {"center", c.includes_center}});
    return records.dump() + "\n";
}

std::string loop(const std::string& lo, const std::string& hi) {
    return "for (int i = " + lo + "; i < " + hi + "; i++)";
}

std::string render_bounds(const std::vector<BoundsRow>& rows, bool loops, OutputFormat format) {
    auto left = [&](const BoundsRow& r) {
        return loops ? loop("0", r.left_bound) : r.left_range();
    };
    auto right = [&](const BoundsRow& r) {
        return loops ? loop(r.right_bound, "n") : r.right_range();
    };
    if (format == OutputFormat::Table) {
        Grid grid = {{"", "left half", "right half"}};
        for (const BoundsRow& r : rows)
            grid.push_back({display_name(r.policy), left(r), right(r)});
        return std::string(loops ? "Example of for loop in C/C++ for all divisions"
                                 : "Adjustment for comparators < and <=") +
               "\n" + aligned(grid);
    }
    if (format == OutputFormat::Tsv) {
        Grid grid = {{"policy", "left", "right"}};
        for (const BoundsRow& r : rows)
            grid.push_back({std::string(name(r.policy)), left(r), right(r)});
        return tsv(grid);
    }
    nlohmann::json records = nlohmann::json::array();
    for (const BoundsRow& r : rows)
        records.push_back({{"policy", name(r.policy)}, {"left", left(r)}, {"right", right(r)}});
    return records.dump() + "\n";
}

} // namespace

std::string_view name(OutputFormat f) {
    switch (f) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Tsv: return "tsv";
    case OutputFormat::Json: return "json";
    }
    return "?";
}

std::optional<OutputFormat> parse_format(std::string_view text) {
    for (OutputFormat f : {OutputFormat::Table, OutputFormat::Tsv, OutputFormat::Json})
        if (name(f) == text)
            return f;
    return std::nullopt;
}

std::string_view name(TableId id) {
    switch (id) {
    case TableId::T1: return "t1";
    case TableId::T2: return "t2";
    case TableId::T3: return "t3";
    case TableId::T4: return "t4";
    case TableId::T01: return "t01";
    case TableId::Ranges: return "ranges";
    case TableId::Final: return "final";
    case TableId::Loops: return "loops";
    }
    return "?";
}

std::optional<TableId> parse_table_id(std::string_view text) {
    for (TableId id : {TableId::T1, TableId::T2, TableId::T3, TableId::T4, TableId::T01,
                       TableId::Ranges, TableId::Final, TableId::Loops})
        if (name(id) == text)
            return id;
    return std::nullopt;
}

LandmarkTable landmark_table(TableId id, const oracle::SplitFn& split) {
    const auto spec = std::find_if(landmark_specs.begin(), landmark_specs.end(),
                                   [id](const LandmarkSpec& s) { return s.id == id; });
    if (spec == landmark_specs.end())
        throw DomainError("not a landmark table: " + std::string(name(id)));

    LandmarkTable t;
    t.title = spec->title;
    t.n = spec->n;

    // el, c and rs as the live Natural split places them.
    const Partition natural = split(Extent(t.n), SplitPolicy::Natural);
    if (!natural.left.empty())
        t.landmarks.push_back({"el", natural.left.hi() - 1});
    if (natural.excluded)
        t.landmarks.push_back({"c", *natural.excluded});
    if (!natural.right.empty())
        t.landmarks.push_back({"rs", natural.right.lo()});

    Index lo = 0;
    Index hi = t.n;
    for (const char* text : spec->expressions) {
        const Index v =
            dsl::eval_expr(dsl::parse_expr(text), dsl::Bindings{t.n, 0}, DivMode::Floor);
        t.expressions.push_back({text, v});
        lo = std::min(lo, v);
        hi = std::max(hi, v + 1);
    }
    t.columns = Range(lo, hi);
    return t;
}

std::string RangeCell::text() const {
    if (floor_count != trunc_count)
        return std::to_string(trunc_count) + " or " + std::to_string(floor_count);
    return std::to_string(floor_count) + (includes_center ? "*" : "");
}

std::vector<RangeRow> range_table() {
    constexpr std::array<const char*, 4> ranges = {"0 <= i < n/2", "0 <= i <= n/2",
                                                   "n/2 < i < n", "n/2 <= i < n"};
    std::vector<RangeRow> rows;
    int number = 0;
    for (const char* text : ranges) {
        const dsl::RangeExpr re = dsl::parse_range(text);
        RangeRow row{++number, text, {}};
        for (Index n = -1; n <= 4; ++n) {
            const dsl::Bindings env{n, 0};
            const Range f = dsl::eval_range(re, env, DivMode::Floor);
            const Range t = dsl::eval_range(re, env, DivMode::Trunc);
            RangeCell cell;
            cell.n = n;
            cell.floor_count = f.length().value();
            cell.trunc_count = t.length().value();
            if (n >= 0) {
                const auto c = center_index(Extent(n));
                cell.includes_center = c && contains(f, *c);
            }
            row.cells.push_back(cell);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string BoundsRow::left_range() const { return "0 <= i < " + left_bound; }

std::string BoundsRow::right_range() const { return right_bound + " <= i < n"; }

std::vector<BoundsRow> bounds_table(const oracle::SplitFn& split) {
    std::vector<BoundsRow> rows;
    for (SplitPolicy policy : all_policies) {
        BoundsRow row;
        row.policy = policy;
        row.left_bound = first_matching_bound(split, policy, [](const Partition& p, Index, Index v) {
            return same_elements(p.left, make_range(inclusive(0), exclusive(v)));
        });
        row.right_bound =
            first_matching_bound(split, policy, [](const Partition& p, Index n, Index v) {
                return same_elements(p.right, make_range(inclusive(v), exclusive(n)));
            });
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_table(TableId id, OutputFormat format, const oracle::SplitFn& split) {
    switch (id) {
    case TableId::Ranges:
        return render_ranges(format);
    case TableId::Final:
        return render_bounds(bounds_table(split), false, format);
    case TableId::Loops: {
        // The for-loop listing covers the three balanced divisions and the
        // right cut only.
        std::vector<BoundsRow> rows = bounds_table(split);
        std::erase_if(rows, [](const BoundsRow& r) { return r.policy == SplitPolicy::CutLeft; });
        return render_bounds(rows, true, format);
    }
    default:
        return render_landmarks(landmark_table(id, split), format);
    }
}

} // namespace idxsplit::cli
