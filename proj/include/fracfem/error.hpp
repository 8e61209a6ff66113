#pragma once

#include <stdexcept>
#include <string>

namespace fracfem {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. Gamma at x <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent arguments (mesh size, index, stencil length, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A PowerSum of the wrong side was passed to a left-sided operator.
class UnsupportedFormError : public Error {
public:
    using Error::Error;
};

/// No closed form is available for the requested source term.
class UnsupportedSourceError : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    QuadratureFailure(const std::string& what, double residual_estimate)
        : Error(what), residual_estimate_(residual_estimate) {}
    double residual_estimate() const noexcept { return residual_estimate_; }

private:
    double residual_estimate_;
};

/// 1 + I^alpha(q u_s)(1) vanished: the splitting with the x^2 companion is unusable.
class DegenerateSplittingError : public Error {
public:
    DegenerateSplittingError(const std::string& what, double denominator)
        : Error(what), denominator_(denominator) {}
    double denominator() const noexcept { return denominator_; }

private:
    double denominator_;
};

class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& what, double pivot)
        : Error(what), pivot_(pivot) {}
    double pivot() const noexcept { return pivot_; }

private:
    double pivot_;
};

class IterativeFailure : public Error {
public:
    IterativeFailure(const std::string& what, int iterations, double residual)
        : Error(what), iterations_(iterations), residual_(residual) {}
    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

}  // namespace fracfem
