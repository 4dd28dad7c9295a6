#include "zkit/glue.hpp"

#include <algorithm>

#include "zkit/error.hpp"

namespace zkit {

UnimodularCover make_cover(const std::vector<Element>& elements) {
  auto cert = unimodular_certificate(elements);
  if (!cert) {
    std::string list;
    for (const auto& e : elements) list += (list.empty() ? "" : ", ") + e.to_string();
    fail(ErrorKind::NotUnimodular, "1 is not in <" + list + ">");
  }
  return UnimodularCover{elements.front().ring(), elements, std::move(*cert)};
}

UnimodularCover cover_from_certificate(const BezoutCertificate& certificate) {
  if (!certificate.verify()) fail(ErrorKind::InvalidWitness, "cover certificate does not verify");
  return UnimodularCover{certificate.generators.front().ring(), certificate.generators,
                         certificate};
}

Fraction ConnectingMap::apply(const Fraction& x) const {
  if (x.ring() != source_) {
    fail(ErrorKind::BaseMismatch, x.to_string() + " is not in " + source_.describe());
  }
  return Fraction(target_, phi_.apply(x.numerator()), x.exponent());
}

PulledBackCover pullback_cover(const UnimodularCover& cover, const RingHom& phi) {
  if (phi.domain() != cover.ring) {
    fail(ErrorKind::RingMismatch, "cover of " + cover.ring.describe() + " pulled back along a map out of " +
                                      phi.domain().describe());
  }
  BezoutCertificate cert;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    cert.generators.push_back(phi.apply(cover.elements[i]));
    cert.cofactors.push_back(phi.apply(cover.certificate.cofactors[i]));
  }
  PulledBackCover out{cover_from_certificate(cert), {}};
  for (std::size_t i = 0; i < cover.size(); ++i) {
    out.maps.emplace_back(cover.localization(i), out.cover.localization(i), phi);
  }
  return out;
}

namespace {

void require_shape(const UnimodularCover& cover, const std::vector<Fraction>& elements) {
  if (elements.size() != cover.size()) {
    fail(ErrorKind::IncompatibleFamily, "family of " + std::to_string(elements.size()) +
                                            " elements over a cover of size " +
                                            std::to_string(cover.size()));
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (elements[i].ring() != cover.localization(i)) {
      fail(ErrorKind::BaseMismatch, "family element " + elements[i].to_string() + " is not in " +
                                        cover.localization(i).describe());
    }
  }
}

}  // namespace

CompatibilityResult check_compatibility(const UnimodularCover& cover,
                                        const std::vector<Fraction>& elements) {
  require_shape(cover, elements);
  CompatibilityResult result;
  std::vector<PairWitness> witnesses;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      DoubleLocalization chi(cover.elements[i], cover.elements[j]);
      Fraction a = chi.chi_left(elements[i]);
      Fraction b = chi.chi_right(elements[j]);
      auto k = frac_eq_witness(a, b);
      if (!k) {
        result.refutation = Refutation{i, j, a.to_string() + " != " + b.to_string() + " in " +
                                                 chi.target().describe()};
        return result;
      }
      witnesses.push_back(PairWitness{i, j, *k});
    }
  }
  result.family = CompatibleFamily{cover, elements, std::move(witnesses)};
  return result;
}

CompatibleFamily restrict_element(const UnimodularCover& cover, const Element& g) {
  if (g.ring() != cover.ring) {
    fail(ErrorKind::RingMismatch, g.to_string() + " is not in " + cover.ring.describe());
  }
  std::vector<Fraction> elements;
  for (std::size_t i = 0; i < cover.size(); ++i) elements.push_back(cover.localization(i).canonical(g));
  auto checked = check_compatibility(cover, elements);
  if (!checked.family) {
    fail(ErrorKind::IncompatibleFamily, "restrictions of a global element: " + checked.refutation->detail);
  }
  return std::move(*checked.family);
}

Element glue_element(const CompatibleFamily& family) {
  const UnimodularCover& cover = family.cover;
  require_shape(cover, family.elements);
  const std::size_t n = cover.size();
  unsigned N = 0;
  for (const auto& x : family.elements) N = std::max(N, x.exponent());
  // x_i = r_i / f_i^N.
  std::vector<Element> r;
  for (std::size_t i = 0; i < n; ++i) {
    const Fraction& x = family.elements[i];
    r.push_back(x.numerator() * cover.elements[i].pow(N - x.exponent()));
  }
  unsigned k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element& fi = cover.elements[i];
      const Element& fj = cover.elements[j];
      Saturation s = saturation_member(r[i] * fj.pow(N) - r[j] * fi.pow(N), fi * fj);
      if (!s.member) {
        fail(ErrorKind::IncompatibleFamily, "elements " + std::to_string(i) + " and " +
                                                std::to_string(j) + " disagree on the overlap");
      }
      k = std::max(k, s.exponent);
    }
  }
  if (N + k == 0) k = 1;  // a larger k still annihilates every overlap difference
  BezoutCertificate b = power_certificate(cover.certificate, N + k);
  Element g = cover.ring.zero();
  for (std::size_t i = 0; i < n; ++i) g = g + b.cofactors[i] * r[i] * cover.elements[i].pow(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (!frac_eq(cover.localization(i).canonical(g), family.elements[i])) {
      fail(ErrorKind::IncompatibleFamily,
           "glued element " + g.to_string() + " does not restrict to " + family.elements[i].to_string());
    }
  }
  return g;
}

namespace {

std::size_t generator_count(const Ring& algebra) {
  return algebra.kind() == RingKind::PolyQuotient ? algebra.nvars() : 0;
}

}  // namespace

HomCompatibilityResult check_compatibility(const UnimodularCover& cover, const Ring& algebra,
                                           const std::vector<FractionHom>& homs) {
  if (homs.size() != cover.size()) {
    fail(ErrorKind::IncompatibleFamily, "family of " + std::to_string(homs.size()) +
                                            " maps over a cover of size " + std::to_string(cover.size()));
  }
  for (const auto& h : homs) {
    if (h.domain() != algebra) {
      fail(ErrorKind::RingMismatch, "map out of " + h.domain().describe() + ", expected " + algebra.describe());
    }
  }
  HomCompatibilityResult result;
  CompatibleHomFamily family{cover, algebra, homs, {}};
  for (std::size_t g = 0; g < generator_count(algebra); ++g) {
    std::vector<Fraction> values;
    for (const auto& h : homs) values.push_back(h.images()[g]);
    auto checked = check_compatibility(cover, values);
    if (!checked.family) {
      checked.refutation->detail = "generator " + algebra.variables()[g] + ": " + checked.refutation->detail;
      result.refutation = std::move(checked.refutation);
      return result;
    }
    family.witnesses.push_back(std::move(checked.family->witnesses));
  }
  result.family = std::move(family);
  return result;
}

CompatibleHomFamily restrict_hom(const UnimodularCover& cover, const RingHom& psi) {
  if (psi.codomain() != cover.ring) {
    fail(ErrorKind::RingMismatch, "map into " + psi.codomain().describe() + " restricted along a cover of " +
                                      cover.ring.describe());
  }
  std::vector<FractionHom> homs;
  for (std::size_t i = 0; i < cover.size(); ++i) homs.push_back(compose_canonical(cover.localization(i), psi));
  auto checked = check_compatibility(cover, psi.domain(), homs);
  if (!checked.family) {
    fail(ErrorKind::IncompatibleFamily, "restrictions of a global map: " + checked.refutation->detail);
  }
  return std::move(*checked.family);
}

RingHom glue_hom(const CompatibleHomFamily& family) {
  const UnimodularCover& cover = family.cover;
  const std::size_t m = generator_count(family.algebra);
  std::vector<Element> images;
  for (std::size_t g = 0; g < m; ++g) {
    std::vector<Fraction> values;
    for (const auto& h : family.homs) values.push_back(h.images()[g]);
    auto checked = check_compatibility(cover, values);
    if (!checked.family) {
      fail(ErrorKind::IncompatibleFamily,
           "generator " + family.algebra.variables()[g] + ": " + checked.refutation->detail);
    }
    images.push_back(glue_element(*checked.family));
  }
  RingHom glued = RingHom::make(family.algebra, cover.ring, std::move(images));
  for (std::size_t i = 0; i < cover.size(); ++i) {
    FractionHom back = compose_canonical(cover.localization(i), glued);
    for (std::size_t g = 0; g < m; ++g) {
      if (!frac_eq(back.images()[g], family.homs[i].images()[g])) {
        fail(ErrorKind::IncompatibleFamily, "glued map does not restrict to member " + std::to_string(i));
      }
    }
  }
  return glued;
}

}  // namespace zkit
