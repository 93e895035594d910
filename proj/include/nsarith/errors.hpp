#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsarith {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value would fall outside the model (negative exponent, fractional
/// constant, negative element, mixed dimensions).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was not met by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class Underflow : public Error {
 public:
  Underflow() : Error("underflow: subtrahend exceeds minuend") {}
};

/// Operations that are partial in this model. The CLI maps these to exit 3.
class PartialityError : public Error {
 public:
  using Error::Error;
};

class NonTerminatingQuotient : public PartialityError {
 public:
  explicit NonTerminatingQuotient(std::size_t budget)
      : PartialityError("quotient expansion exceeds budget of " + std::to_string(budget) +
                        " positive-exponent terms"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class CoefficientNotRepresentable : public PartialityError {
 public:
  using PartialityError::PartialityError;
};

class StandardInput : public PreconditionError {
 public:
  StandardInput() : PreconditionError("equivalence relations are defined on nonstandard elements only") {}
};

/// Negative outcomes of operations that promise a positive one. Exit 1.
class NegativeResult : public Error {
 public:
  using Error::Error;
};

class NotEquivalent : public NegativeResult {
 public:
  explicit NotEquivalent(int level)
      : NegativeResult("elements are not E" + std::to_string(level) + "-equivalent"), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

class CannotProve : public NegativeResult {
 public:
  CannotProve() : NegativeResult("neither E2 nor E3 holds; no constructive route to an automorphism") {}
};

class ValidationFailure : public NegativeResult {
 public:
  ValidationFailure(std::string check, std::string first, std::string second)
      : NegativeResult("validation failed (" + check + ") at probe pair [" + first + ", " + second + "]"),
        check_(std::move(check)),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::string& check() const noexcept { return check_; }
  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string check_;
  std::string first_;
  std::string second_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace nsarith
