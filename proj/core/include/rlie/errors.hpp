#pragma once

#include <stdexcept>
#include <string>

namespace rlie {

/// Operands live in different rings or spaces (variable count, characteristic, matrix shape).
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A request exceeds the desk-scale size limits (p <= 7, p^n <= 81, group order <= 24, ...).
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input (polynomials, algebra/action/group files, points).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation's documented precondition does not hold for the given inputs.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal identity that must hold failed; indicates a bug, not bad input.
class VerificationFailure : public std::logic_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rlie
