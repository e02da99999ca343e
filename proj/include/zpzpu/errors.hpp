#pragma once

#include <stdexcept>
#include <string>

namespace zpu {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
public:
    ModulusMismatch(unsigned lhs, unsigned rhs)
        : Error("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NotPrime : public Error {
public:
    explicit NotPrime(unsigned long long p) : Error(std::to_string(p) + " is not prime") {}
};

class NotAUnit : public Error {
public:
    explicit NotAUnit(const std::string& what) : Error(what + " is not a unit") {}
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// An enumeration or scan would exceed the configured word budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, unsigned long long bound)
        : Error(what + " exceeds the budget of " + std::to_string(bound) + " words"),
          bound_(bound) {}
    unsigned long long bound() const noexcept { return bound_; }

private:
    unsigned long long bound_;
};

/// A quantity is undefined for the given input (e.g. minimum distance of {0}).
class Undefined : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero polynomial") {}
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class NotCyclic : public Error {
public:
    NotCyclic() : Error("code is not closed under the cyclic shift") {}
};

} // namespace zpu
