#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "idxsplit/checked.hpp"

namespace idxsplit {

// A count of elements. Kept distinct from Index so that a position can
// never be passed where a length is expected without saying so.
class Extent {
public:
    constexpr Extent() = default;
    constexpr explicit Extent(Index v) : value_(v) {
        if (v < 0)
            throw DomainError("extent must be non-negative, got " + std::to_string(v));
    }

    constexpr Index value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Extent, Extent) = default;

private:
    Index value_ = 0;
};

// Half-open interval [lo, hi). Every bound style is normalized to this.
class Range {
public:
    constexpr Range() = default;
    constexpr Range(Index lo, Index hi) : lo_(lo), hi_(hi) {
        if (hi < lo)
            throw DomainError("malformed range [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + ")");
    }

    constexpr Index lo() const noexcept { return lo_; }
    constexpr Index hi() const noexcept { return hi_; }
    constexpr bool empty() const noexcept { return lo_ == hi_; }
    Extent length() const { return Extent(narrow(Wide(hi_) - lo_, "range length")); }

    // Structural equality: [1,1) and [0,0) differ. Use same_elements()
    // when only the denoted set matters.
    friend constexpr bool operator==(const Range&, const Range&) = default;

private:
    Index lo_ = 0;
    Index hi_ = 0;
};

struct BoundSpec {
    Index value = 0;
    bool inclusive = true;
};

constexpr BoundSpec inclusive(Index v) { return {v, true}; }
constexpr BoundSpec exclusive(Index v) { return {v, false}; }

enum class Pivot { Include, Exclude };

Extent length(Range r);
bool contains(Range r, Index i);

// True when both ranges denote the same set of integers.
bool same_elements(Range a, Range b);

// lo (<|<=) i (<|<=) hi  ->  [lo', hi'). A description with no solutions
// yields the empty range anchored at lo'.
Range make_range(BoundSpec lo, BoundSpec hi);

Range drop_front(Range r, Extent g);
Range drop_back(Range r, Extent h);

// k elements ending at p (p itself included or not).
Range left_window(Index p, Extent k, Pivot pivot);
// k elements starting at p (p itself included or not).
Range right_window(Index p, Extent k, Pivot pivot);

Range rebase(Range r, Index b);

// The largest range contained in both; empty results sit at max(lo).
Range intersect(Range a, Range b);

// i -> n-1-i on [0, n).
Index mirror_index(Index i, Extent n);
// Image of r under mirror_index; r must lie within [0, n).
Range mirror(Range r, Extent n);

std::string to_string(Range r);
std::ostream& operator<<(std::ostream& os, Range r);
std::ostream& operator<<(std::ostream& os, Extent n);

} // namespace idxsplit
