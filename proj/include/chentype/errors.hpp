#pragma once

#include <stdexcept>
#include <string>

namespace chentype {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A denominator that is not a monomial in delta, cos(phi), kappa, r was met.
class NonRationalStructure : public Error {
public:
    using Error::Error;
};

class MissingSymbol : public Error {
public:
    using Error::Error;
};

class DivisionNearZero : public Error {
public:
    using Error::Error;
};

/// Canonical form and numeric cross-validation disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class DegenerateForm : public Error {
public:
    using Error::Error;
};

class ExpressionBudgetExceeded : public Error {
public:
    using Error::Error;
};

class MixedFrames : public Error {
public:
    using Error::Error;
};

class IllConditionedSamples : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace chentype
