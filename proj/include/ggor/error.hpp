#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ggor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Height/dimension requested for the unit ideal.
class UnitIdealError : public Error {
 public:
  UnitIdealError() : Error("the ideal is the unit ideal") {}
};

/// A Groebner/syzygy computation exceeded its time or size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ggor
