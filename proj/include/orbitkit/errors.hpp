#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// A point failed the pairing constraint <x,y> = 1. Carries the actual pairing as "p/q".
class ConstraintViolated : public Error {
public:
    ConstraintViolated(const std::string& what, std::string pairing)
        : Error(what), pairing_(std::move(pairing)) {}
    const std::string& pairing() const noexcept { return pairing_; }

private:
    std::string pairing_;
};

/// A chart or section map was evaluated outside its open set.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotMember : public Error {
public:
    using Error::Error;
};

class EmptyOrbit : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure: two exact expressions that must agree did not.
class InconsistentState : public Error {
public:
    using Error::Error;
};

}  // namespace orbitkit
