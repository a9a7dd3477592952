#include "riordan/errors.hpp"

namespace riordan {

std::string_view error_name(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::PrecisionMismatch: return "PrecisionMismatch";
  case ErrorKind::CoefficientOutOfRange: return "CoefficientOutOfRange";
  case ErrorKind::InvalidPrecision: return "InvalidPrecision";
  case ErrorKind::SubstitutionOutsideIdeal: return "SubstitutionOutsideIdeal";
  case ErrorKind::NotAUnit: return "NotAUnit";
  case ErrorKind::NotCompositionallyInvertible: return "NotCompositionallyInvertible";
  case ErrorKind::NotInIdeal: return "NotInIdeal";
  case ErrorKind::NotGroupElement: return "NotGroupElement";
  case ErrorKind::NotStarInvertible: return "NotStarInvertible";
  case ErrorKind::BaseMismatch: return "BaseMismatch";
  case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
  case ErrorKind::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

namespace {

std::string format_parse_error(std::size_t offset, const std::vector<std::string>& expected,
                               const std::string& detail)
{
  std::string msg = "parse error at offset " + std::to_string(offset) + ": " + detail;
  if (!expected.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i)
        msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ")";
  }
  return msg;
}

} // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& detail)
    : std::runtime_error(format_parse_error(offset, expected, detail)),
      offset_(offset), expected_(std::move(expected))
{}

} // namespace riordan
