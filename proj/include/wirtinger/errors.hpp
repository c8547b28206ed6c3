#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wirtinger {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation at or numerically indistinguishable from a pole (|denominator| below the pole floor).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Evaluation outside a primitive's domain: branch point, log of zero, or a
/// point where the function is not differentiable in the real sense.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An arithmetic result left the finite doubles.
class NonFiniteError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A primitive with no rule at the requested derivative order.
class UnsupportedPrimitive : public Error {
public:
    using Error::Error;
};

/// Malformed expression text. `offset()` is the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifier : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class ArityError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class StepTooSmall : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EmptyData : public Error {
public:
    using Error::Error;
};

class SingularHessian : public Error {
public:
    using Error::Error;
};

/// A cost that should be real-valued produced an imaginary part above tolerance.
class NonRealCost : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input (vector literals, least-squares data files).
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace wirtinger
