#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cantorval {

// All recoverable failures carry a short machine-readable code
// ("no-k0", "not-a-gap", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Bad input (malformed rationals, codes, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

// An operation's precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An internal cross-check failed; indicates a genuine inconsistency,
// not a caller mistake.
class StructuralError : public Error {
public:
    using Error::Error;
};

}  // namespace cantorval
