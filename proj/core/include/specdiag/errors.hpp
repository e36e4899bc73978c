#pragma once

#include <stdexcept>
#include <string>

namespace specdiag {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters, domains or configuration. Maps to CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Failure of a numerical procedure at runtime. Maps to CLI exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

// Evaluation point outside the family's domain.
class DomainError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Family/norm parameters outside their validity region (alpha, beta, p).
class ParameterError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// A coefficient magnitude left the representable range.
class OverflowError : public NumericError {
public:
    using NumericError::NumericError;
};

// z too close to an eigenvalue on the support; carries the offending index.
class SingularResolventError : public NumericError {
public:
    SingularResolventError(const std::string& what, int index)
        : NumericError(what), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

// Quadrature rule construction or application failed.
class QuadratureError : public NumericError {
public:
    using NumericError::NumericError;
};

// A refinement loop failed to converge; carries the last two estimates.
class AccuracyError : public NumericError {
public:
    AccuracyError(const std::string& what, double previous, double last)
        : NumericError(what), previous_(previous), last_(last) {}
    double previous_estimate() const noexcept { return previous_; }
    double last_estimate() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

}  // namespace specdiag
