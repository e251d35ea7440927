#pragma once

#include <stdexcept>
#include <string>

namespace ria {

/// Malformed input: bad shapes, mixed backends, unparsable data.
/// CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class BackendMismatch : public InputError {
public:
    using InputError::InputError;
};

class NotHermitian : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// A mathematically well-posed negative outcome raised by operations whose
/// contract requires a nonempty feasible/solution set. CLI exit code 1.
class NegativeResult : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The LMI (or constraint) admits no Hermitian solution.
class InfeasibleConstraint : public NegativeResult {
public:
    using NegativeResult::NegativeResult;
};

/// The matrix equation admits no solution of the requested kind.
class InconsistentEquation : public NegativeResult {
public:
    using NegativeResult::NegativeResult;
};

/// Rejection sampling gave up after the configured bound.
class GenerationExhausted : public NegativeResult {
public:
    using NegativeResult::NegativeResult;
};

/// An asserted identity between two computation routes failed.  Either a bug
/// in this library or a genuine formula discrepancy; carries a witness dump.
/// CLI exit code 3.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, std::string witness = {})
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

} // namespace ria
