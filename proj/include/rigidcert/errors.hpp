#pragma once

#include <stdexcept>
#include <string>

namespace rigidcert {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A stated hypothesis of an operation does not hold (gate failures,
/// span/alternation/symmetry preconditions, out-of-range arguments).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Matrix dimensions exceed the supported desk-scale cap.
class ScaleExceededError : public Error {
public:
    using Error::Error;
};

/// A randomized construction ran out of re-sampling attempts.
class RetryExhaustedError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Conditions that cannot occur for well-formed inputs (exact-division
/// failure, unbounded LP in a bounded encoding). Indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace rigidcert
