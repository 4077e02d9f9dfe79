#pragma once

#include <stdexcept>
#include <string>

namespace pptball {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a type contract (non-Hermitian, bad trace, index out of range...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A parameter lies outside the domain where the requested quantity is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A construction that would divide by zero or produce an empty object.
class DegenerateError : public Error {
public:
    using Error::Error;
};

}  // namespace pptball
