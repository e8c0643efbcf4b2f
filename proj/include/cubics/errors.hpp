#pragma once

#include <stdexcept>
#include <string>

namespace cubics {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular") {}
};

struct DegenerateFrame : Error {
  explicit DegenerateFrame(const std::string& msg = "quadruple is not a projective frame")
      : Error(msg) {}
};

struct EqualPoints : Error {
  EqualPoints() : Error("points coincide; no unique line") {}
};

/// A singular point (or direction) lives in a field extension of Q(eps) that
/// the exact layer does not represent.
struct UnsupportedExtension : Error {
  explicit UnsupportedExtension(const std::string& msg) : Error(msg) {}
};

struct NonDivisor : Error {
  NonDivisor() : Error("given form does not divide the cubic") {}
};

struct NotAffine : Error {
  NotAffine() : Error("flex permutation is not induced by an affine map") {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& msg) : Error(msg) {}
};

struct ClosureOverflow : Error {
  ClosureOverflow() : Error("group closure exceeded the expected bound") {}
};

struct NumericFailure : Error {
  explicit NumericFailure(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace cubics
