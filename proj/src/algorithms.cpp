#include "idxsplit/algorithms.hpp"

#include <algorithm>
#include <utility>

namespace idxsplit {
namespace {

void merge_sort_into(std::span<Value> a, std::span<Value> scratch) {
    const Extent n(static_cast<Index>(a.size()));
    if (n < Extent(2))
        return;
    const Partition p = split_n(n, SplitPolicy::LeftPlus);
    const auto left = a.subspan(0, static_cast<std::size_t>(p.left.hi()));
    const auto right = a.subspan(static_cast<std::size_t>(p.right.lo()));
    merge_sort_into(left, scratch);
    merge_sort_into(right, scratch);
    const auto out = scratch.subspan(0, a.size());
    std::merge(left.begin(), left.end(), right.begin(), right.end(), out.begin());
    std::copy(out.begin(), out.end(), a.begin());
}

void quicksort_frame(std::span<Value> a) {
    while (!a.empty()) {
        const Value pivot = a[0];
        std::size_t k = 0;
        const std::size_t n = a.size();
        // a[k] holds the pivot and everything before k is smaller.
        for (std::size_t i = 1; i < n; ++i) {
            if (a[i] < pivot) {
                std::swap(a[k], a[i]);
                ++k;
                std::swap(a[k], a[i]);
            }
        }
        a[k] = pivot;
        // Position k becomes the length of the lower frame; the upper frame
        // starts past the pivot and has n-k-1 elements.
        quicksort_frame(a.subspan(0, k));
        a = a.subspan(k + 1, n - k - 1);
    }
}

} // namespace

std::string_view name(SearchVariant v) {
    switch (v) {
    case SearchVariant::RightPlusSplit: return "rightplus";
    case SearchVariant::CutOutCenter: return "cutout";
    case SearchVariant::CutOutCompact: return "compact";
    }
    return "?";
}

std::optional<SearchVariant> parse_search_variant(std::string_view text) {
    for (SearchVariant v : {SearchVariant::RightPlusSplit, SearchVariant::CutOutCenter,
                            SearchVariant::CutOutCompact})
        if (name(v) == text)
            return v;
    return std::nullopt;
}

std::optional<Index> binary_search(std::span<const Value> a, Value target, SearchVariant variant,
                                   const SearchOptions& options) {
    if (options.check_sorted && !std::is_sorted(a.begin(), a.end()))
        throw ContractError("binary search input is not sorted");
    return binary_search_by(
        [a](Index i) { return a[static_cast<std::size_t>(i)]; },
        Extent(static_cast<Index>(a.size())), target, variant, options.observe);
}

std::vector<Value> merge_sort(std::span<const Value> a) {
    std::vector<Value> out(a.begin(), a.end());
    std::vector<Value> scratch(a.size());
    merge_sort_into(out, scratch);
    return out;
}

std::vector<Value> quicksort(std::span<const Value> a) {
    std::vector<Value> out(a.begin(), a.end());
    quicksort_frame(out);
    return out;
}

std::vector<Index> chop_points(std::span<const Value> a) {
    const std::size_t n = a.size();
    std::vector<Value> suffix_min(n);
    for (std::size_t i = n; i-- > 0;)
        suffix_min[i] = i + 1 < n ? std::min(a[i], suffix_min[i + 1]) : a[i];

    std::vector<Index> out;
    Value prefix_max = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if ((j == 0 || prefix_max <= a[j]) && a[j] <= suffix_min[j])
            out.push_back(static_cast<Index>(j));
        prefix_max = j == 0 ? a[j] : std::max(prefix_max, a[j]);
    }
    return out;
}

bool word_crosses_center(std::string_view text) {
    const Extent n(static_cast<Index>(text.size()));
    if (n < Extent(2))
        return false;
    const Landmarks l = landmarks(n);
    const Range span = make_range(inclusive(l.el), inclusive(l.rs));
    for (Index i = span.lo(); i < span.hi(); ++i)
        if (text[static_cast<std::size_t>(i)] == ' ')
            return false;
    return true;
}

} // namespace idxsplit
