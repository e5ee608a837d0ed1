#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dhero {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vertex index or vertex set fell outside the host.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An argument broke a documented contract (partial coloring, loop, digon, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Hypotheses of a constructive procedure do not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search would exceed a configured resource ceiling.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what, std::optional<int> upper_bound = std::nullopt)
        : Error(what), upper_bound_(upper_bound) {}

    /// Best value known when the search was refused, if any.
    std::optional<int> upper_bound() const noexcept { return upper_bound_; }

private:
    std::optional<int> upper_bound_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Something the theory guarantees did not happen. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace dhero
