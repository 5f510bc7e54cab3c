#pragma once

#include <stdexcept>
#include <string>

namespace partrend {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameter values (bandwidths out of range, bad grids, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed or unusable input data (ragged tables, non-positive values
// under a log transform, panels that are too small).
class DataError : public Error {
public:
    using Error::Error;
};

// Numerical failure inside an estimation stage (singular local design,
// covariance factorization failure, undefined GCV score).
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace partrend
