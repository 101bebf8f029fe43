#pragma once

#include <stdexcept>
#include <string>

namespace polar {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series or expansion was not computed far enough to decide a value.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Input germ has a multiple component.
class NotReducedError : public Error {
 public:
  using Error::Error;
};

/// Jacobian ideal is not of finite colength at the origin.
class NonIsolatedSingularityError : public Error {
 public:
  using Error::Error;
};

/// x or y divides a polynomial where the operation needs them stripped.
class AxisFactorError : public Error {
 public:
  using Error::Error;
};

/// Two normal forms are not comparable (different lambda, v0, v1 or support).
class IncomparableNormalFormsError : public Error {
 public:
  using Error::Error;
};

/// Family parameter violates a side condition of its row.
class SideConditionError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in the branch DSL, with a 0-based byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polar
