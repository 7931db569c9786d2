#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polcd {

/// Base for every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was not met by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class RejectedEdgeError : public ParseError {
public:
    using ParseError::ParseError;
};

class EmptyGraphError : public Error {
public:
    using Error::Error;
};

/// Inputs are well-formed but inconsistent with each other (label mismatch, bad option value).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Every pairwise risk is zero, so the polarization measure has no normalizer.
class DegeneratePolarizationError : public Error {
public:
    using Error::Error;
};

/// Every pairwise dialogue value is zero.
class DegenerateDialogueError : public Error {
public:
    using Error::Error;
};

class UndefinedScoreError : public Error {
public:
    using Error::Error;
};

class UndefinedModularityError : public Error {
public:
    using Error::Error;
};

class SizeLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace polcd
