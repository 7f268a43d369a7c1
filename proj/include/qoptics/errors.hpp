#pragma once

#include <stdexcept>
#include <string>

namespace qoptics {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Raised when a first-order MCWF step loses too much norm for the jump
// probability to be meaningful.
class StepTooLargeError : public Error {
public:
    StepTooLargeError(double t, double jump_probability);

    double time() const noexcept { return time_; }
    double jump_probability() const noexcept { return jump_probability_; }

private:
    double time_;
    double jump_probability_;
};

}  // namespace qoptics
