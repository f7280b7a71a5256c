#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace c2b {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed definition: bad membership parameters, duplicate names, ...
class InvalidDefinition : public Error {
public:
    using Error::Error;
};

/// A crisp value fell outside the domain of the variable it was given for.
class DomainError : public Error {
public:
    DomainError(std::string variable, double value, double lo, double hi);

    const std::string& variable() const noexcept { return variable_; }
    double value() const noexcept { return value_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    std::string variable_;
    double value_;
    double lo_;
    double hi_;
};

/// The aggregated output curve of a variable is identically zero.
class NoRuleFiredError : public Error {
public:
    explicit NoRuleFiredError(std::string variable);
    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

/// An input profile lacks a value, or names a variable the system does not have.
class ProfileError : public Error {
public:
    ProfileError(std::string variable, const std::string& what);
    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

/// Invalid training data: too small, non-numeric, out of domain.
class DatasetError : public Error {
public:
    using Error::Error;
};

/// Curve fitting could not make progress.
class FitError : public Error {
public:
    using Error::Error;
};

/// A catalog document does not follow the schema. `path()` is a JSON pointer.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace c2b
