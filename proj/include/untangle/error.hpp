#pragma once

#include <stdexcept>
#include <string>

namespace untangle {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (drawing, moves or instance files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An algorithmic precondition does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotOuterplanar : public PreconditionError {
public:
    NotOuterplanar() : PreconditionError("graph is not outerplanar") {}
    explicit NotOuterplanar(const std::string& what) : PreconditionError(what) {}
};

class NotAlmostPlanar : public PreconditionError {
public:
    NotAlmostPlanar() : PreconditionError("drawing is not almost-planar") {}
};

class UnknownVertex : public PreconditionError {
public:
    explicit UnknownVertex(const std::string& name) : PreconditionError("unknown vertex '" + name + "'") {}
};

class UnknownEdge : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidArgument : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidInstance : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotDistinct : public PreconditionError {
public:
    NotDistinct() : PreconditionError("chunk entries are not globally distinct") {}
};

class NotAWitness : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class Unsupported : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A brute-force routine was asked to exceed its explicit budget.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// One of the structural facts the algorithms rely on was observed to be false.
/// Signals a non-outerplanar input that slipped through or a bug.
class StructuralAssertionFailed : public Error {
public:
    using Error::Error;
};

class ConstructionFailed : public Error {
public:
    using Error::Error;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

class PropertyViolation : public Error {
public:
    using Error::Error;
};

}  // namespace untangle
