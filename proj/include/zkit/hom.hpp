#pragma once

#include <vector>

#include "zkit/ring.hpp"

namespace zkit {

/// A ring homomorphism given by finite data: the image of each generator of
/// the domain. Maps out of Z and Z/n carry no data.
class RingHom {
 public:
  /// Verifies base compatibility and that every relation generator of the
  /// domain maps to zero. Throws NotWellDefined or RingMismatch.
  static RingHom make(Ring domain, Ring codomain, std::vector<Element> images);
  static RingHom identity(const Ring& ring);

  const Ring& domain() const { return domain_; }
  const Ring& codomain() const { return codomain_; }
  const std::vector<Element>& images() const { return images_; }
  /// Images of the domain's relation generators; all zero by construction.
  const std::vector<Element>& evidence() const { return evidence_; }

  Element apply(const Element& a) const;
  /// Image of a raw polynomial over the domain's free ring.
  Element apply_poly(const Poly& p) const;

  std::string describe() const;

  friend bool operator==(const RingHom& a, const RingHom& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }

 private:
  RingHom(Ring domain, Ring codomain, std::vector<Element> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {}
  Element map_coefficient(const mpq_class& c) const;

  Ring domain_;
  Ring codomain_;
  std::vector<Element> images_;
  std::vector<Element> evidence_;

  friend std::vector<RingHom> enumerate_homs(const Ring&, const Ring&);
};

Element hom_apply(const RingHom& phi, const Element& a);

/// psi after phi; requires codomain(phi) == domain(psi).
RingHom hom_compose(const RingHom& psi, const RingHom& phi);

/// All homomorphisms into a finite ring, in lexicographic order of the
/// generator assignments (first generator most significant).
/// Throws CodomainNotFinite.
std::vector<RingHom> enumerate_homs(const Ring& domain, const Ring& codomain);

}  // namespace zkit
