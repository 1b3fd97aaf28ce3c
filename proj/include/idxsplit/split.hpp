#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idxsplit/range.hpp"

namespace idxsplit {

// How the (possible) center of a frame is treated when splitting in two.
//   Natural   - equal halves of n/2; an odd center belongs to neither.
//   LeftPlus  - an odd center joins the left half.
//   RightPlus - an odd center joins the right half.
//   CutLeft   - always drop one element: the center, or el when n is even.
//   CutRight  - always drop one element: the center, or rs when n is even.
enum class SplitPolicy { Natural, LeftPlus, RightPlus, CutLeft, CutRight };

inline constexpr std::array<SplitPolicy, 5> all_policies = {
    SplitPolicy::Natural, SplitPolicy::LeftPlus, SplitPolicy::RightPlus,
    SplitPolicy::CutLeft, SplitPolicy::CutRight};

std::string_view name(SplitPolicy policy);
std::optional<SplitPolicy> parse_policy(std::string_view text);

struct Partition {
    Range left;
    std::optional<Index> excluded;
    Range right;
    SplitPolicy policy = SplitPolicy::Natural;

    friend bool operator==(const Partition&, const Partition&) = default;
};

// Same policy, same excluded index, and halves denoting the same sets.
bool equivalent(const Partition& a, const Partition& b);

Partition rebase(const Partition& p, Index b);

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

// End of the left half, center (odd n only) and start of the right half.
struct Landmarks {
    Index el = 0;
    std::optional<Index> center;
    Index rs = 0;

    friend bool operator==(const Landmarks&, const Landmarks&) = default;
};

// Frame [0, n). Bounds use only n/2, (n+1)/2, n/2+1 and (n+1)/2-1.
Partition split_n(Extent n, SplitPolicy policy);

// Frame [b, b+n).
Partition split_based(Index b, Extent n, SplitPolicy policy);

// Frame b <= i <= e, expressed through m = b+e. Requires e >= b.
Partition split_be(Index b, Index e, SplitPolicy policy);

// Frame b <= i < ex. Only Natural, RightPlus and CutRight have a
// formulation here; other policies are a DomainError.
Partition split_bex(Index b, Index ex, SplitPolicy policy);
bool supports_bex(SplitPolicy policy);

// el = n/2-1, rs = (n+1)/2, center = n/2 for odd n. Requires n >= 2.
Landmarks landmarks(Extent n);

// [n/2, (n+1)/2): the center when n is odd, empty otherwise.
Range center_band(Extent n);
std::optional<Index> center_index(Extent n);

// k elements on each side of the center band: [n/2-k, (n+1)/2+k).
Range center_window(Extent n, Extent k);

// k contiguous parts of [0, n); part r has floor((n+r)/k) elements.
std::vector<Range> kway_split(Extent n, Extent k);

} // namespace idxsplit
