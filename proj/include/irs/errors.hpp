#pragma once

#include <stdexcept>
#include <string>

namespace irs {

// Invalid input or a violated precondition. The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured budget (vertex count, enumeration size) was exceeded. Exit code 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an oracle breaks the one-in/one-out-per-label property.
class ValidityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInZError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInYError : public DomainError {
 public:
  using DomainError::DomainError;
};

class AmbiguityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Thrown by partial oracles (explicit balls) when asked for an edge they do not hold.
class OutsideBallError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace irs
