#pragma once

#include <stdexcept>
#include <string>

namespace vgp {

// Base of every numerical failure raised by the library.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public NumericError {
public:
    using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

// Argument lies outside the regime a method can handle; the caller should switch methods.
class RegimeError : public NumericError {
public:
    using NumericError::NumericError;
};

class SingularityError : public NumericError {
public:
    using NumericError::NumericError;
};

class OverflowError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace vgp
