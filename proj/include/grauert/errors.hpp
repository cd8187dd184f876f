#pragma once

#include <stdexcept>
#include <string>

namespace grauert {

/// Argument outside the domain of a metric, profile or field.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// A root or threshold search could not bracket a sign change.
class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace grauert
