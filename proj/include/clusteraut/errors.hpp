#pragma once

#include <stdexcept>
#include <string>

namespace clusteraut {

/// Base class of every domain failure. name() is the typed error name the
/// CLI prints next to the message.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept = 0;
};

class InvalidMatrix : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "InvalidMatrix"; }
};

class IndexOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "IndexOutOfRange"; }
};

class FrozenIndex : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "FrozenIndex"; }
};

/// Raised when an exchange relation does not divide exactly. Never expected
/// on valid input.
class LaurentViolation : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "LaurentViolation"; }
};

class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "CapExceeded"; }
};

class MismatchError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "MismatchError"; }
};

class ShapeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "ShapeMismatch"; }
};

class SelfFoldedUnsupported : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "SelfFoldedUnsupported"; }
};

class InvalidIncidence : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "InvalidIncidence"; }
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "ParseError"; }
};

}  // namespace clusteraut
