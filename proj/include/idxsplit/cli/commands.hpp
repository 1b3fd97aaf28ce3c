#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace idxsplit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;  // a verification or equivalence check failed
inline constexpr int exit_usage = 2;   // bad arguments or a domain error

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace idxsplit::cli
