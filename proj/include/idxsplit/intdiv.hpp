#pragma once

#include <optional>
#include <string_view>

#include "idxsplit/checked.hpp"

namespace idxsplit {

// Floor rounds toward negative infinity (Python's //); Trunc rounds toward
// zero (C/C++ /). They disagree only on inexact negative quotients:
// (-1)/2 is -1 under Floor and 0 under Trunc.
enum class DivMode { Floor, Trunc };

std::string_view name(DivMode mode);
std::optional<DivMode> parse_div_mode(std::string_view text);

// Throws DivisionByZeroError for d == 0 and OverflowError for MIN / -1.
Index idiv(Index a, Index d, DivMode mode);

// Floor division for the splitter's wide intermediates. d must be non-zero.
template <typename T>
constexpr T floor_div(T a, T d) {
    T q = a / d;
    if ((a % d != 0) && ((a < 0) != (d < 0)))
        --q;
    return q;
}

} // namespace idxsplit
