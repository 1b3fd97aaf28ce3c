#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "idxsplit/errors.hpp"

namespace idxsplit {

using Index = std::int64_t;

// Intermediate width for boundary formulas. Every expression such as
// b + (n+1)/2 or (b+e)/2 is evaluated here and narrowed once at the end,
// so a midpoint of two large indices never wraps.
__extension__ typedef __int128 Wide;

inline Index narrow(Wide v, const char* what = "index arithmetic") {
    if (v < std::numeric_limits<Index>::min() || v > std::numeric_limits<Index>::max())
        throw OverflowError(std::string(what) + " overflows 64-bit index");
    return static_cast<Index>(v);
}

inline Index checked_add(Index a, Index b) {
    Index r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Index checked_sub(Index a, Index b) {
    Index r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline Index checked_mul(Index a, Index b) {
    Index r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

} // namespace idxsplit
