// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rhf {

// Operand shapes do not conform.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the operation's domain (e.g. m < 2 for a simplex).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input fails a structural check (not unitary, not a simplex, not an EITFF, ...).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested object does not exist. `bound()` names the violated inequality,
// e.g. "n <= rho+2".
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string bound, const std::string& detail)
      : std::runtime_error(bound + " violated (" + detail + ")"), bound_(std::move(bound)) {}
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

// Existence is an open question for these parameters.
class UnknownFeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rhf
