#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varextropy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside its domain (bad shape, bad window, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The observations themselves are unusable.
class DataError : public Error {
public:
    using Error::Error;
};

/// Two order statistics that bound a spacing window coincide.
class TieError : public DataError {
public:
    TieError(std::size_t index, double value);

    /// 1-based order-statistic index whose window has zero width.
    std::size_t index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

private:
    std::size_t index_;
    double value_;
};

/// Observation outside the unit interval given to the uniformity test.
class SupportError : public DataError {
public:
    using DataError::DataError;
};

/// Malformed numeric input file.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Numerical integration failed to reach its tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// The quantile representation is not implemented for this law.
class NoQuantileForm : public Error {
public:
    using Error::Error;
};

}  // namespace varextropy
