#include "idxsplit/intdiv.hpp"

#include <limits>
#include <string>

namespace idxsplit {

std::string_view name(DivMode mode) {
    return mode == DivMode::Floor ? "floor" : "trunc";
}

std::optional<DivMode> parse_div_mode(std::string_view text) {
    if (text == "floor")
        return DivMode::Floor;
    if (text == "trunc")
        return DivMode::Trunc;
    return std::nullopt;
}

Index idiv(Index a, Index d, DivMode mode) {
    if (d == 0)
        throw DivisionByZeroError("division of " + std::to_string(a) + " by zero");
    if (a == std::numeric_limits<Index>::min() && d == -1)
        throw OverflowError("overflow in " + std::to_string(a) + " / -1");
    return mode == DivMode::Trunc ? a / d : floor_div(a, d);
}

} // namespace idxsplit
