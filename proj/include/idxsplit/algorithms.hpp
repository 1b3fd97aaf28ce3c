#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "idxsplit/split.hpp"

namespace idxsplit {

using Value = std::int64_t;

enum class SearchVariant {
    RightPlusSplit,  // narrow to one element, compare once at the end
    CutOutCenter,    // compare at the cut element, keep the side that can match
    CutOutCompact,   // CutOutCenter with the two length updates folded together
};

std::string_view name(SearchVariant v);
std::optional<SearchVariant> parse_search_variant(std::string_view text);

// Called with the live frame at the top of every loop iteration.
using FrameObserver = std::function<void(Range)>;

struct SearchOptions {
    bool check_sorted = false;  // O(n) pre-pass; throws ContractError
    FrameObserver observe;
};

// Binary search over a sorted sequence of length n reached only through
// at(i). Returns some index holding target, or nullopt.
template <typename Access>
std::optional<Index> binary_search_by(Access&& at, Extent n, Value target, SearchVariant variant,
                                      const FrameObserver& observe = {}) {
    Range frame(0, n.value());
    switch (variant) {
    case SearchVariant::RightPlusSplit:
        if (frame.empty())
            return std::nullopt;
        while (frame.length() > Extent(1)) {
            if (observe)
                observe(frame);
            // The right half of a Right+ split is never empty for n > 1.
            const Partition p = split_based(frame.lo(), frame.length(), SplitPolicy::RightPlus);
            frame = at(p.right.lo()) > target ? p.left : p.right;
        }
        if (at(frame.lo()) == target)
            return frame.lo();
        return std::nullopt;

    case SearchVariant::CutOutCenter:
        while (!frame.empty()) {
            if (observe)
                observe(frame);
            const Partition p = split_based(frame.lo(), frame.length(), SplitPolicy::CutRight);
            const Index r = *p.excluded;
            const Value v = at(r);
            if (v == target)
                return r;
            frame = v < target ? p.right : p.left;
        }
        return std::nullopt;

    case SearchVariant::CutOutCompact: {
        Index b = 0;
        Index len = n.value();
        while (len > 0) {
            if (observe)
                observe(Range(b, b + len));
            const Index r = b + len / 2;
            const Value v = at(r);
            if (v == target)
                return r;
            if (v < target) {
                b = r + 1;
                len = len - 1;
            }
            // (len-1)/2 on the right, len/2 on the left.
            len = len / 2;
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

std::optional<Index> binary_search(std::span<const Value> a, Value target, SearchVariant variant,
                                   const SearchOptions& options = {});

// Top-down merge sort on Left+ halves, so neither half is empty for n >= 2.
std::vector<Value> merge_sort(std::span<const Value> a);

// First-element-pivot quicksort: sort the k elements below the pivot, then
// the n-k-1 elements after it.
std::vector<Value> quicksort(std::span<const Value> a);

// Ascending positions j where a[j] >= everything before it and
// a[j] <= everything after it.
std::vector<Index> chop_points(std::span<const Value> a);

// True when the non-space run through the center spans both halves (and
// the center for odd n): positions n/2-1 .. (n+1)/2 are all non-space.
bool word_crosses_center(std::string_view text);

} // namespace idxsplit
