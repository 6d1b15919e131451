#pragma once

#include <stdexcept>
#include <string>

namespace freebound {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: non-positive argument, out-of-range parameter, malformed config.
class DomainError : public Error {
public:
    using Error::Error;
};

/// |mu - r| too small; the log/time change divides by theta^2.
class DegenerateMarket : public DomainError {
public:
    using DomainError::DomainError;
};

/// The requested family has no classification formulas (only power and non-HARA do).
class UnsupportedFamily : public DomainError {
public:
    using DomainError::DomainError;
};

/// K > 0 and A_1 > 0 fails; the closed-form boundary is not applicable.
/// `quantity` names the offending value ("K" or "A1").
class AssumptionViolated : public Error {
public:
    AssumptionViolated(std::string quantity, double value);

    const std::string& quantity() const noexcept { return quantity_; }
    double value() const noexcept { return value_; }

private:
    std::string quantity_;
    double value_;
};

/// Base for numerical failures (CLI exit code 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

class NoSignChange : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class MaxIterExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BracketFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Adaptive quadrature hit its depth cap before meeting the tolerance.
class QuadratureFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Decade scan for a dual root left [1e-12, 1e12] without a sign change.
class ScanFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Binomial risk-neutral probability outside (0, 1): step too coarse for (beta - r, theta).
class ProbabilityOutOfRange : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class PsorNotConverged : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace freebound
