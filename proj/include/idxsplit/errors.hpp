#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idxsplit {

// Root of every error this library reports. Nothing here wraps around or
// returns a sentinel on failure; it throws one of these instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument outside the operation's domain (negative extent, e < b, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Asked to drop more elements than a range holds.
class RangeUnderflowError : public Error {
public:
    using Error::Error;
};

// Index arithmetic left the representable width.
class OverflowError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// A caller-side precondition was checked and found violated
// (e.g. unsorted input to binary search in diagnostic mode).
class ContractError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace idxsplit
