#pragma once

#include <stdexcept>
#include <string>

namespace nanores {

/// Argument outside the domain of a function (pole, branch cut, invalid scatterer).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Root finder failed to produce a certified root.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Request that a routine does not support (unsupported moment order, too-high Taylor order...).
class UnsupportedError : public std::invalid_argument {
public:
  explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace nanores
