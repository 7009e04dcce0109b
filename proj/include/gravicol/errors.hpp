#pragma once

#include <stdexcept>
#include <string>

namespace gravicol {

// Bad physical input (non-positive mass, negative radius, ...).
// The CLI maps these to exit code 2.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonPositiveMass : public DomainError {
public:
    NonPositiveMass() : DomainError("mass must be > 0") {}
};

class NonPositiveLength : public DomainError {
public:
    NonPositiveLength() : DomainError("length must be > 0") {}
};

class NonPositiveInput : public DomainError {
public:
    explicit NonPositiveInput(const std::string& what) : DomainError(what + " must be > 0") {}
};

class NegativeRadius : public DomainError {
public:
    NegativeRadius() : DomainError("radius must be >= 0") {}
};

// A solver or integrator failed to meet its tolerance.
// The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BracketFailure : public NumericalError {
public:
    explicit BracketFailure(const std::string& what) : NumericalError(what) {}
};

class MaxSubdivisionsExceeded : public NumericalError {
public:
    explicit MaxSubdivisionsExceeded(const std::string& what) : NumericalError(what) {}
};

class StepSizeUnderflow : public NumericalError {
public:
    explicit StepSizeUnderflow(const std::string& what) : NumericalError(what) {}
};

class NonFiniteState : public NumericalError {
public:
    explicit NonFiniteState(const std::string& what) : NumericalError(what) {}
};

} // namespace gravicol
