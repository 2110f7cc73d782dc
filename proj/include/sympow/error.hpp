#pragma once

#include <stdexcept>
#include <string>

namespace sympow {

/// Base class for every error raised by the engine.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid field declaration, mixed-field operands, division by zero.
class FieldError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// An input violates the hypotheses an operation relies on
/// (wrong number of generators, mixed degrees, non-ACM data, ...).
class HypothesisError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Computed resolution does not have the predicted shape.
class ShapeMismatch : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// The requested method is not valid in this characteristic.
class CharacteristicError : public AlgebraError {
 public:
  CharacteristicError(unsigned characteristic, const std::string& what)
      : AlgebraError(what), characteristic_(characteristic) {}
  unsigned characteristic() const { return characteristic_; }

 private:
  unsigned characteristic_;
};

}  // namespace sympow
