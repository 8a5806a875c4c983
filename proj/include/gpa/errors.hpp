#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpa {

/// Base class for all workbench errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different coefficient rings.
class MismatchedRing : public Error {
 public:
  using Error::Error;
};

/// Elements live over different groupoids or rings.
class MismatchedCarrier : public Error {
 public:
  using Error::Error;
};

/// Malformed input (bad indices, wrong dimensions, unparsable text).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A structure failed an axiom check.  The witness names the failing
/// instance so callers can report it verbatim.
class ValidationError : public Error {
 public:
  ValidationError(std::string axiom, std::string witness)
      : Error(axiom + (witness.empty() ? "" : ": " + witness)),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

/// An enumeration would exceed the configured budget.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t required, std::uint64_t cap)
      : Error("enumeration budget exceeded: needs " + std::to_string(required) +
              " candidates, cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Two routines that must agree by theorem disagreed.  Always a bug in
/// this library, never a property of the input.
class InternalDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace gpa
