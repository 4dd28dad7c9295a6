#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zkit {

enum class ErrorKind {
  UnknownVariable,
  NonInvertibleDenominator,
  InvalidRing,
  RingMismatch,
  BaseMismatch,
  CodomainNotFinite,
  NotWellDefined,
  NotUnimodular,
  InvalidWitness,
  UnsupportedBase,
  IncompatibleFamily,
  ResourceExceeded,
  SyntaxError,
  UnknownName,
  TypeMismatch,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace zkit
