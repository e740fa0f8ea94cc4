#pragma once

#include <stdexcept>
#include <string>

namespace meander {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed meander or certificate text.
class ParseError : public Error {
public:
    enum class Kind { Syntax, Invariant };

    ParseError(Kind kind, int line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    Kind kind_;
    int line_;
};

/// An operation was called outside of its documented domain.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// A postcondition of a rewrite did not hold. Signals a modeling gap.
class AssertionFailure : public Error {
public:
    using Error::Error;
};

/// An extremal point is the first or last crossing and has no L-neighbor.
class NeighborMissing : public Error {
public:
    using Error::Error;
};

/// Enumeration above the configured size limit.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace meander
