#pragma once

#include <stdexcept>

namespace snccc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatches, out-of-range arguments, malformed values.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A requested construction cannot exist for the given parameters.
class Infeasible : public Error {
public:
    using Error::Error;
};

/// An exhaustive search finished without a witness.
class NotFound : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

/// Malformed document text; the message carries the line/field locus.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed document whose content breaks a declared constraint.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace snccc
