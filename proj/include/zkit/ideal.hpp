#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "zkit/groebner.hpp"
#include "zkit/ring.hpp"

namespace zkit {

/// Reduced Gröbner basis of a finitely generated ideal, computed in the
/// ambient free ring together with the ring's relations. Over Z and Z/n the
/// basis is the single gcd generator.
struct GroebnerBasis {
  Ring ring;
  MonomialOrder order = MonomialOrder::GRevLex;
  std::vector<Poly> basis;
  /// basis[k] == sum_i cofactors[k][i] * generators[i] modulo the relations.
  std::vector<std::vector<Poly>> cofactors;
  /// Integer/Residue surrogate: gcd(generators) resp. gcd(generators, n),
  /// with gcd == sum_i gcd_cofactors[i] * generators[i].
  mpz_class gcd;
  std::vector<mpz_class> gcd_cofactors;
};

class FinGenIdeal {
 public:
  /// An empty generator list denotes the zero ideal. Throws RingMismatch.
  FinGenIdeal(Ring ring, std::vector<Element> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& generators() const { return generators_; }
  /// Computed on first use and cached; copies share the cache.
  const GroebnerBasis& groebner() const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Element> generators_;
  std::shared_ptr<Cache> cache_;
};

GroebnerBasis groebner(const FinGenIdeal& ideal);

struct Membership {
  bool member = false;
  /// On membership: a == sum_i cofactors[i] * generators[i].
  std::vector<Element> cofactors;
};

Membership ideal_member(const Element& a, const FinGenIdeal& ideal);

/// a^k in I for some k >= 1.
bool radical_member(const Element& a, const FinGenIdeal& ideal);

struct RadicalWitness {
  unsigned exponent = 1;
  std::vector<Element> cofactors;  // a^exponent == sum cofactors[i] * generators[i]
};

/// Least-exponent witness for a positive radical membership.
std::optional<RadicalWitness> radical_witness(const Element& a, const FinGenIdeal& ideal);

struct Saturation {
  bool member = false;
  unsigned exponent = 0;  // least k with a * f^k == 0
};

/// Decides whether a * f^k == 0 for some k and finds the least such k.
Saturation saturation_member(const Element& a, const Element& f);

/// Explicit witness of 1 in <f_1..f_n>.
struct BezoutCertificate {
  std::vector<Element> generators;
  std::vector<Element> cofactors;

  bool verify() const;
};

std::optional<BezoutCertificate> unimodular_certificate(const std::vector<Element>& elements);

/// Certificate for (f_1^M, ..., f_n^M) obtained by expanding
/// (sum a_i f_i)^(n(M-1)+1) and assigning every multinomial term to the first
/// index whose exponent reaches M.
BezoutCertificate power_certificate(const BezoutCertificate& cert, unsigned power);

}  // namespace zkit
