#pragma once

#include <stdexcept>
#include <string>

namespace vacfric {

// Bad inputs: violated preconditions, malformed files, out-of-range flags.
// The CLI maps these to exit code 2.
class ValidationError : public std::domain_error {
public:
    explicit ValidationError(const std::string& what) : std::domain_error(what) {}
};

// Numerical guards that fired during an otherwise valid computation.
// The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// An angular density failed its normalization check.
class NormalizationError : public NumericalError {
public:
    explicit NormalizationError(const std::string& what) : NumericalError(what) {}
};

// A closed form that assumes g(-n) = g(n) was asked to run on a pattern
// whose rest-frame recoil does not vanish.
class ParityViolationError : public NumericalError {
public:
    explicit ParityViolationError(const std::string& what) : NumericalError(what) {}
};

// An iteration failed to reach its residual target within the cap.
class ConvergenceError : public NumericalError {
public:
    explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

// The requested effect is below 64-bit resolution (e.g. a trap frequency
// splitting with epsilon < 1e-15).
class DegenerateSplittingError : public NumericalError {
public:
    explicit DegenerateSplittingError(const std::string& what) : NumericalError(what) {}
};

}  // namespace vacfric
