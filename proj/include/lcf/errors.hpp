#pragma once

#include <stdexcept>
#include <string>

namespace lcf {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

// An input violates a documented precondition or type invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class NonHermitianInput : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonUnitTrace : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotPositiveSemidefinite : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Assembled matrix fails a requested positivity check.
class NotPositive : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotUnitDeterminant : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateNormalization : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonUnitDirection : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class PoleEvaluation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroProbabilityOutcome : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotTetrad : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotTriad : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Spectral pipeline could not produce a consistent G-eigensystem.
class SpectralError : public Error {
public:
    using Error::Error;
};

class SpectralFailure : public SpectralError {
public:
    using SpectralError::SpectralError;
};

// A G-eigenvalue is negative beyond tolerance: the input does not
// parametrize a physical two-qubit state.
class NegativeEigenvalue : public SpectralError {
public:
    using SpectralError::SpectralError;
};

}  // namespace lcf
