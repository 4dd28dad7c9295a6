#pragma once

#include <cstddef>
#include <vector>

#include "zkit/poly.hpp"

namespace zkit {

struct Division {
  std::vector<Poly> quotients;  // one per divisor
  Poly remainder;
};

/// Multivariate division with full (tail) reduction:
/// f = sum quotients[k] * divisors[k] + remainder, no term of the remainder
/// divisible by a leading term of a divisor.
Division divide(const PolyRing& ring, const Poly& f, const std::vector<Poly>& divisors);

Poly normal_form(const PolyRing& ring, const Poly& f, const std::vector<Poly>& basis);

struct GroebnerInput {
  /// Reduced Gröbner basis of an ideal J taken as already closed. Its elements
  /// carry zero cofactors: tracked identities hold modulo J.
  std::vector<Poly> background;
  std::vector<Poly> generators;
  bool track = false;
};

struct GroebnerOutput {
  /// Reduced Gröbner basis of J + <generators>, sorted by ascending leading term.
  std::vector<Poly> basis;
  /// When tracked: basis[k] == sum_i cofactors[k][i] * generators[i] (mod J),
  /// with cofactors in normal form modulo J.
  std::vector<std::vector<Poly>> cofactors;
};

/// Buchberger's algorithm with normal selection and Gebauer-Möller pair
/// pruning. Honors the thread's Limits (pairs, basis size, deadline).
GroebnerOutput buchberger(const PolyRing& ring, const GroebnerInput& input);

/// Post-hoc check that every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const PolyRing& ring, const std::vector<Poly>& basis);

/// When enabled, every buchberger() call verifies its result with
/// satisfies_buchberger_criterion and throws std::logic_error on failure.
void set_groebner_self_check(bool enabled);
/// Number of self-checks executed since process start.
std::size_t groebner_self_checks_run();

}  // namespace zkit
