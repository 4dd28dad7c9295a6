#include "zkit/limits.hpp"

#include "zkit/error.hpp"

namespace zkit {

namespace {
thread_local Limits tls_limits;
}

const Limits& current_limits() { return tls_limits; }

void check_deadline() {
  if (tls_limits.deadline && std::chrono::steady_clock::now() > *tls_limits.deadline) {
    fail(ErrorKind::ResourceExceeded, "time limit exceeded");
  }
}

ScopedLimits::ScopedLimits(const Limits& limits) : saved_(tls_limits) { tls_limits = limits; }

ScopedLimits::~ScopedLimits() { tls_limits = saved_; }

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonInvertibleDenominator: return "NonInvertibleDenominatorInCoefficient";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::CodomainNotFinite: return "CodomainNotFinite";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::UnsupportedBase: return "UnsupportedBase";
    case ErrorKind::IncompatibleFamily: return "IncompatibleFamily";
    case ErrorKind::ResourceExceeded: return "ResourceExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace zkit
