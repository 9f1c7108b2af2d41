#pragma once

#include <stdexcept>
#include <string>

namespace plumbline {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different jet rings, or shapes do not line up.
class StructuralError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidAlkane : public Error {
public:
    using Error::Error;
};

class InvalidMark : public Error {
public:
    using Error::Error;
};

class InvalidConfiguration : public Error {
public:
    using Error::Error;
};

class DegenerateFrame : public Error {
public:
    using Error::Error;
};

/// A Plücker coordinate vanished, so y -> y^-2 is undefined there.
class ConeChartViolation : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public StructuralError {
public:
    using StructuralError::StructuralError;
};

/// An internal consistency identity failed. Indicates a bug.
class FormulaViolation : public Error {
public:
    using Error::Error;
};

} // namespace plumbline
