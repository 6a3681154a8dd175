#pragma once

#include <stdexcept>
#include <string>

namespace submultiset {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: a bad multiplicity vector, a composition that violates
// its bounds, an argument outside the operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A method cannot serve the instance at this size (e.g. inclusion-exclusion
// with more than 63 elements).
class CapacityError : public Error {
public:
    using Error::Error;
};

// The brute-force oracle would visit more compositions than allowed.
class BudgetExceeded : public CapacityError {
public:
    using CapacityError::CapacityError;
};

// A rank outside [0, count).
class OutOfRange : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed. Never a valid outcome.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace submultiset
