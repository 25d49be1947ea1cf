#pragma once

#include <stdexcept>
#include <string>

namespace sphtrop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series has no stored nonzero term inside its truncation window.
class IndeterminateOrder : public Error {
public:
    using Error::Error;
};

/// Every generic-translate trial ran past the truncation bound.
class InconclusiveValuation : public Error {
public:
    using Error::Error;
};

/// A point, curve, or argument violates a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Operation is not available for the requested family.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// Floating-point breakdown: overflow, non-convergence, retry exhaustion.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace sphtrop
