#pragma once

#include <stdexcept>
#include <string>

namespace gtheta {

// Arithmetic outside the domain of an operation (division by zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller violated an operation's precondition (basis mismatch, bad flag).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A reconstructed table or form disagrees with its reference.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Verlinde sum could not be rounded to a certified integer.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, double residual, long bits)
      : std::runtime_error(what), residual_(residual), bits_(bits) {}

  double residual() const noexcept { return residual_; }
  long precision_bits() const noexcept { return bits_; }

 private:
  double residual_;
  long bits_;
};

}  // namespace gtheta
