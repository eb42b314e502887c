#pragma once

#include <stdexcept>
#include <string>

namespace bfr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A root bracket whose endpoints do not straddle zero.
class NoSignChange : public Error {
public:
    using Error::Error;
};

class MaxIterExceeded : public Error {
public:
    using Error::Error;
};

/// Quadrature could not reach the requested tolerance within its budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// The Bayes factor never crosses unity, so there is no flip point to locate.
class NoFlipPoint : public Error {
public:
    using Error::Error;
};

/// A candidate pair of prior scales fails to produce opposite verdicts.
class NotAReversal : public Error {
public:
    using Error::Error;
};

}  // namespace bfr
