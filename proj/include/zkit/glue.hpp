#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zkit/hom.hpp"
#include "zkit/ideal.hpp"
#include "zkit/localization.hpp"

namespace zkit {

/// A Zariski cover R -> R[1/f_i] given by a unimodular vector with its
/// Bezout certificate.
struct UnimodularCover {
  Ring ring;
  std::vector<Element> elements;
  BezoutCertificate certificate;

  std::size_t size() const { return elements.size(); }
  LocalizedRing localization(std::size_t i) const { return LocalizedRing(ring, elements[i]); }
};

/// Throws NotUnimodular.
UnimodularCover make_cover(const std::vector<Element>& elements);
/// Re-verifies the certificate; throws InvalidWitness.
UnimodularCover cover_from_certificate(const BezoutCertificate& certificate);

/// psi_i : R[1/f_i] -> A[1/phi(f_i)], r/f_i^n -> phi(r)/phi(f_i)^n.
class ConnectingMap {
 public:
  ConnectingMap(LocalizedRing source, LocalizedRing target, RingHom phi)
      : source_(std::move(source)), target_(std::move(target)), phi_(std::move(phi)) {}
  const LocalizedRing& source() const { return source_; }
  const LocalizedRing& target() const { return target_; }
  Fraction apply(const Fraction& x) const;

 private:
  LocalizedRing source_, target_;
  RingHom phi_;
};

struct PulledBackCover {
  UnimodularCover cover;
  std::vector<ConnectingMap> maps;
};

PulledBackCover pullback_cover(const UnimodularCover& cover, const RingHom& phi);

struct PairWitness {
  std::size_t i = 0, j = 0;
  unsigned exponent = 0;
};

struct Refutation {
  std::size_t i = 0, j = 0;
  std::string detail;
};

struct CompatibleFamily {
  UnimodularCover cover;
  std::vector<Fraction> elements;  // elements[i] in R[1/f_i]
  std::vector<PairWitness> witnesses;
};

struct CompatibilityResult {
  std::optional<CompatibleFamily> family;
  std::optional<Refutation> refutation;
};

/// Decides chi_left(x_i) == chi_right(x_j) in R[1/(f_i f_j)] for all i < j.
CompatibilityResult check_compatibility(const UnimodularCover& cover,
                                        const std::vector<Fraction>& elements);

CompatibleFamily restrict_element(const UnimodularCover& cover, const Element& g);

/// The unique g in R restricting to the family. Throws IncompatibleFamily.
Element glue_element(const CompatibleFamily& family);

struct CompatibleHomFamily {
  UnimodularCover cover;
  Ring algebra;
  std::vector<FractionHom> homs;  // homs[i] : algebra -> R[1/f_i]
  /// witnesses[g] holds the pair exponents for generator g.
  std::vector<std::vector<PairWitness>> witnesses;
};

struct HomCompatibilityResult {
  std::optional<CompatibleHomFamily> family;
  std::optional<Refutation> refutation;
};

HomCompatibilityResult check_compatibility(const UnimodularCover& cover, const Ring& algebra,
                                           const std::vector<FractionHom>& homs);

/// phi_i = (-/1) after psi.
CompatibleHomFamily restrict_hom(const UnimodularCover& cover, const RingHom& psi);

/// Throws IncompatibleFamily or NotWellDefined.
RingHom glue_hom(const CompatibleHomFamily& family);

}  // namespace zkit
