#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fourvec {

enum class ErrorKind {
  ZeroNorm,
  NotPure,
  NotRotor,
  NotUnitNormal,
  BadAxis,
  BadParameter,
  EmptyChain,
  NoSolution,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotRotor: return "NotRotor";
    case ErrorKind::NotUnitNormal: return "NotUnitNormal";
    case ErrorKind::BadAxis: return "BadAxis";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::EmptyChain: return "EmptyChain";
    case ErrorKind::NoSolution: return "NoSolution";
  }
  return "Unknown";
}

/// Raised when an operation's precondition on its operand values fails
/// (non-invertible element, non-unit rotor, impure vector, ...).
class DomainError : public std::domain_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::domain_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed fourvector literal. position() is the byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : std::invalid_argument("at position " + std::to_string(position) +
                              ": expected " + expected),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fourvec
