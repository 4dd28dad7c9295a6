#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace zkit {

/// Work caps for the decision procedures. Exceeding any of them raises
/// Error(ResourceExceeded) instead of letting a computation run away.
struct Limits {
  std::size_t max_pairs = 200000;   // S-pairs processed per Buchberger run
  std::size_t max_basis = 5000;     // intermediate basis size
  unsigned max_exponent = 64;       // least-exponent searches
  std::size_t max_terms = 2000000;  // power-certificate multinomial terms
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Limits in force on the calling thread.
const Limits& current_limits();

/// Throws ResourceExceeded when the thread's deadline has passed.
void check_deadline();

/// Installs limits for the lifetime of the object (per thread).
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& limits);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace zkit
