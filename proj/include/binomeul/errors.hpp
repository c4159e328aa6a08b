#pragma once

#include <stdexcept>
#include <string>

namespace binomeul {

/// Raised when an operation is applied outside its mathematical domain
/// (zero polynomial has no center, non-palindromic gamma input, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an exact identity that must hold by construction fails,
/// e.g. a series numerator that should be divisible by (1 - t) is not.
class IdentityError : public DomainError {
 public:
  explicit IdentityError(const std::string& what) : DomainError(what) {}
};

}  // namespace binomeul
