#pragma once

#include <stdexcept>
#include <string>

namespace qlr {

// Base class for all data-validation failures.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A probability is zero or negative (strict positivity is required throughout).
class NonPositiveError : public ValidationError {
public:
    explicit NonPositiveError(const std::string& msg) : ValidationError(msg) {}
};

// A marginal distribution or matrix column fails to sum to 1 within tolerance.
class NotNormalizedError : public ValidationError {
public:
    explicit NotNormalizedError(const std::string& msg) : ValidationError(msg) {}
};

// A transition-matrix row fails to sum to 1 within tolerance.
class NotDoublyStochasticError : public ValidationError {
public:
    explicit NotDoublyStochasticError(const std::string& msg) : ValidationError(msg) {}
};

// A scalar argument lies outside its admissible interval.
class OutOfRangeError : public ValidationError {
public:
    explicit OutOfRangeError(const std::string& msg) : ValidationError(msg) {}
};

// The interference coefficients exceed 1 in modulus; no complex amplitude exists.
class NotTrigonometricError : public std::runtime_error {
public:
    explicit NotTrigonometricError(const std::string& msg) : std::runtime_error(msg) {}
};

// The two relative phases do not differ by pi (mod 2pi).
class PhaseConstraintError : public ValidationError {
public:
    explicit PhaseConstraintError(const std::string& msg) : ValidationError(msg) {}
};

// A Bloch point at a pole cannot be inverted to strictly positive marginals.
class DegenerateError : public ValidationError {
public:
    explicit DegenerateError(const std::string& msg) : ValidationError(msg) {}
};

// An internal cross-check failed; indicates inconsistent data slipped past validation.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace qlr
