#pragma once

#include <stdexcept>
#include <string>

namespace kch {

// Bad user input or a failed precondition (CLI exit code 1).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operands built over incompatible rings or algebra modes.
class ConfigError : public DomainError {
  public:
    using DomainError::DomainError;
};

// A computation refused because it exceeds a configured cap (CLI exit code 2).
class ResourceLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An internal identity that must hold by construction did not.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace kch
