#pragma once

#include <stdexcept>

namespace randwalk {

// Caller-supplied values violate a documented precondition (wrong lag,
// empty input, series too short, ...).
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The series carries no usable variation: constant changes, all ties, or a
// run distribution with zero variance.
class DegenerateSeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A regression design matrix is rank deficient.
class SingularDesignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file. The message carries row/column coordinates.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace randwalk
