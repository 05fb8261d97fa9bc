#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical or physical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quadrature, series or Matsubara sum failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Material description could not be parsed or violates a model invariant.
/// The message is prefixed with "path:line:column" when a location is known.
class MaterialFileError : public std::runtime_error {
public:
    MaterialFileError(const std::string& location, const std::string& what)
        : std::runtime_error(location.empty() ? what : location + ": " + what),
          location_(location) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

}  // namespace casimir
