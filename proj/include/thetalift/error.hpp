#pragma once

#include <stdexcept>
#include <string>

namespace thetalift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a documented invariant (bad Gram matrix, bad form file, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Hecke data does not cover a prime that the computation needs.
class InsufficientDataError : public Error {
public:
    InsufficientDataError(long long prime)
        : Error("insufficient Hecke data: no eigenvalue for p = " + std::to_string(prime)),
          prime_(prime) {}
    long long prime() const noexcept { return prime_; }

private:
    long long prime_;
};

/// A numerical procedure stopped before reaching its target accuracy.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what + " (achieved " + std::to_string(achieved) + ")"), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace thetalift
