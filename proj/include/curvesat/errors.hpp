#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvesat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input errors.

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NotHomogeneous : public Error {
public:
    NotHomogeneous(int first, int second)
        : Error("polynomial is not homogeneous: terms of degree " + std::to_string(first) +
                " and " + std::to_string(second)),
          first_(first), second_(second) {}
    int first_degree() const noexcept { return first_; }
    int second_degree() const noexcept { return second_; }

private:
    int first_, second_;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("polynomial is zero") {}
};

class NotLinear : public Error {
public:
    NotLinear(std::size_t line, int degree)
        : Error("form #" + std::to_string(line + 1) + " has degree " + std::to_string(degree) +
                ", expected a linear form"),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ProportionalLines : public Error {
public:
    ProportionalLines(std::size_t i, std::size_t j, const std::string& a, const std::string& b)
        : Error("lines #" + std::to_string(i + 1) + " (" + a + ") and #" + std::to_string(j + 1) +
                " (" + b + ") are proportional; the curve is not reduced"),
          first_(i), second_(j) {}
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_, second_;
};

class UnknownCatalogEntry : public Error {
public:
    explicit UnknownCatalogEntry(const std::string& name)
        : Error("unknown catalog entry '" + name + "'") {}
};

class InputFileError : public Error {
public:
    explicit InputFileError(const std::string& path) : Error("cannot open input file '" + path + "'") {}
};

// Mathematical preconditions that fail on the given input.

class NonReducedInput : public Error {
public:
    NonReducedInput(int k, std::size_t a, std::size_t b)
        : Error("Milnor algebra dimensions do not stabilize (" + std::to_string(a) + " in degree " +
                std::to_string(k) + ", " + std::to_string(b) + " in degree " +
                std::to_string(k + 1) + "); the curve has a repeated factor"),
          degree_(k) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

class SmoothCurve : public Error {
public:
    SmoothCurve() : Error("the curve is smooth (tau = 0); the coincidence threshold is unbounded") {}
};

class NotCodimensionTwo : public Error {
public:
    using Error::Error;
};

class BaseWindowNotFound : public Error {
public:
    using Error::Error;
};

class BadExponent : public Error {
public:
    using Error::Error;
};

class WrongShape : public Error {
public:
    using Error::Error;
};

// Internal consistency failures: these indicate a bug or an exhausted scan bound.

class SubspaceNotContained : public Error {
public:
    SubspaceNotContained() : Error("subspace is not contained in the ambient span") {}
};

class FreenessCheckFailed : public Error {
public:
    using Error::Error;
};

class KmaxExhausted : public Error {
public:
    using Error::Error;
};

class InconsistentClassification : public Error {
public:
    using Error::Error;
};

}  // namespace curvesat
