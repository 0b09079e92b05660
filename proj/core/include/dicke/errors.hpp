#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

// Base for every error raised by the library. The CLI maps the derived
// categories onto exit codes (validation 2, numerical 3).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter or argument outside its documented domain.
class DomainError : public Error {
public:
    DomainError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class TruncationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class HermiticityError : public Error {
public:
    using Error::Error;
};

class CommutationError : public Error {
public:
    using Error::Error;
};

}  // namespace dicke
