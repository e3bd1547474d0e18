#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (weight specs, function specs, config).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Quadrature construction or evaluation failed (reported, never degraded).
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// A computed quantity violated a structural invariant or cross-check.
class CheckError : public Error {
public:
    using Error::Error;
};

} // namespace bergman
