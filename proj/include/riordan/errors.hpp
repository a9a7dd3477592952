#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riordan {

enum class ErrorKind {
  PrecisionMismatch,
  CoefficientOutOfRange,
  InvalidPrecision,
  SubstitutionOutsideIdeal,
  NotAUnit,
  NotCompositionallyInvertible,
  NotInIdeal,
  NotGroupElement,
  NotStarInvertible,
  BaseMismatch,
  InsufficientPrecision,
  PreconditionViolation,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by the algebra modules. The kind names the violated
/// contract; the message says which input broke it.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind)
  {}

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }

private:
  ErrorKind kind_;
};

/// Malformed series or pair text. Carries the byte offset of the failure
/// and the set of tokens that would have been accepted there.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

} // namespace riordan
