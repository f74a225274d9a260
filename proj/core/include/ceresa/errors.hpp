#pragma once

#include <stdexcept>
#include <string>

namespace ceresa {

/// Raised when an input lies outside an operation's domain (singular
/// curves, zero discriminant, malformed group data, ...). The CLI maps it
/// to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Eigenvalue data that cannot come from a genuine finite group action.
class MalformedProfile : public DomainError {
 public:
  explicit MalformedProfile(const std::string& what) : DomainError("malformed profile: " + what) {}
};

/// Unknown stratum label or preset name.
class LookupError : public DomainError {
 public:
  explicit LookupError(const std::string& what) : DomainError(what) {}
};

}  // namespace ceresa
