#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gms {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed instance or solution text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An element that does not belong to the problem's element universe.
class UniverseError : public Error {
public:
    using Error::Error;
};

/// A solver or enumerator was asked to handle a problem kind outside its scope.
class UnsupportedKind : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Enumeration produced more sets than the configured guard allows.
class EnumerationOverflow : public Error {
public:
    using Error::Error;
};

class OracleTooLarge : public Error {
public:
    OracleTooLarge() : Error("instance too large for oracle") {}
    explicit OracleTooLarge(const std::string& detail)
        : Error("instance too large for oracle: " + detail) {}
};

} // namespace gms
