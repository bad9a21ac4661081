#pragma once

#include <stdexcept>
#include <string>

namespace reeb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (wrong keys, wrong types, unknown class names).
class SchemaError : public Error {
public:
    using Error::Error;
};

class InvalidComplex : public Error {
public:
    using Error::Error;
};

/// An arc whose two endpoints coincide in the tie-break order.
class NonMonotoneArc : public Error {
public:
    using Error::Error;
};

class UnknownNode : public Error {
public:
    using Error::Error;
};

/// A chain with nonzero boundary was passed where a cycle is required.
class NotACycle : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

class InvalidWitness : public Error {
public:
    using Error::Error;
};

class NonPositiveEpsilon : public Error {
public:
    using Error::Error;
};

/// Points with infinite death cannot be put in bijection across two diagrams.
class InfiniteMismatch : public Error {
public:
    using Error::Error;
};

/// A brute-force search would exceed its node-count cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace reeb
