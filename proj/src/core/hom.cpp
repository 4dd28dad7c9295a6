#include "zkit/hom.hpp"

#include <functional>
#include <sstream>

#include "zkit/error.hpp"

namespace zkit {

namespace {

// Whether some homomorphism domain -> codomain can exist at the level of
// coefficients (characteristic and Q-algebra structure).
bool base_compatible(const Ring& domain, const Ring& codomain) {
  if (codomain.is_zero_ring()) return true;
  switch (domain.kind()) {
    case RingKind::Integer: return true;
    case RingKind::Residue: return codomain.from_integer(domain.modulus()).is_zero();
    case RingKind::PolyQuotient: break;
  }
  const Field& f = domain.base_field();
  if (f.is_rational()) {
    return codomain.kind() == RingKind::PolyQuotient && codomain.base_field().is_rational();
  }
  return codomain.from_integer(f.characteristic()).is_zero();
}

Element evaluate(const Ring& codomain, const Poly& p,
                 const std::vector<Element>& images,
                 const std::function<Element(const mpq_class&)>& coeff) {
  Element acc = codomain.zero();
  std::vector<std::vector<Element>> powers(images.size());
  for (const auto& t : p.terms) {
    Element term = coeff(t.coeff);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      std::uint32_t e = t.exponents[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(codomain.one());
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      term = term * cache[e];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

RingHom RingHom::make(Ring domain, Ring codomain, std::vector<Element> images) {
  const std::size_t n = domain.kind() == RingKind::PolyQuotient ? domain.nvars() : 0;
  if (images.size() != n) {
    fail(ErrorKind::NotWellDefined, "expected " + std::to_string(n) + " generator images, got " +
                                        std::to_string(images.size()));
  }
  for (const auto& img : images) {
    if (img.ring() != codomain) {
      fail(ErrorKind::RingMismatch, "generator image does not lie in " + codomain.describe());
    }
  }
  if (!base_compatible(domain, codomain)) {
    fail(ErrorKind::NotWellDefined,
         "no ring map " + domain.describe() + " -> " + codomain.describe() + " (coefficients)");
  }
  RingHom h(std::move(domain), std::move(codomain), std::move(images));
  if (h.domain_.kind() == RingKind::PolyQuotient) {
    for (const auto& rel : h.domain_.relations()) {
      Element img = h.apply_poly(rel);
      if (!img.is_zero()) {
        fail(ErrorKind::NotWellDefined,
             "relation " + h.domain_.free_ring().to_string(rel, h.domain_.variables()) +
                 " maps to " + img.to_string() + ", not 0");
      }
      h.evidence_.push_back(std::move(img));
    }
  }
  return h;
}

RingHom RingHom::identity(const Ring& ring) {
  std::vector<Element> images;
  if (ring.kind() == RingKind::PolyQuotient) {
    for (std::size_t i = 0; i < ring.nvars(); ++i) images.push_back(ring.variable(i));
  }
  return make(ring, ring, std::move(images));
}

Element RingHom::map_coefficient(const mpq_class& c) const {
  if (codomain_.is_zero_ring()) return codomain_.zero();
  return codomain_.from_rational(c);
}

Element RingHom::apply_poly(const Poly& p) const {
  return evaluate(codomain_, p, images_,
                  [this](const mpq_class& c) { return map_coefficient(c); });
}

Element RingHom::apply(const Element& a) const {
  if (a.ring() != domain_) {
    fail(ErrorKind::RingMismatch,
         "element of " + a.ring().describe() + " applied to a map out of " + domain_.describe());
  }
  if (domain_.kind() != RingKind::PolyQuotient) return codomain_.from_integer(a.integer());
  return apply_poly(a.poly());
}

std::string RingHom::describe() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ", ";
    out << domain_.variables()[i] << " -> " << images_[i].to_string();
  }
  out << "}";
  return out.str();
}

Element hom_apply(const RingHom& phi, const Element& a) { return phi.apply(a); }

RingHom hom_compose(const RingHom& psi, const RingHom& phi) {
  if (phi.codomain() != psi.domain()) {
    fail(ErrorKind::RingMismatch, "cannot compose: codomain " + phi.codomain().describe() +
                                      " differs from domain " + psi.domain().describe());
  }
  std::vector<Element> images;
  for (const auto& img : phi.images()) images.push_back(psi.apply(img));
  return RingHom::make(phi.domain(), psi.codomain(), std::move(images));
}

std::vector<RingHom> enumerate_homs(const Ring& domain, const Ring& codomain) {
  if (!codomain.is_finite()) {
    fail(ErrorKind::CodomainNotFinite, codomain.describe() + " is not a finite ring");
  }
  std::vector<RingHom> out;
  if (!base_compatible(domain, codomain)) return out;
  if (domain.kind() != RingKind::PolyQuotient) {
    out.push_back(RingHom::make(domain, codomain, {}));
    return out;
  }
  const std::vector<Element> values = codomain.elements();
  const std::size_t n = domain.nvars();
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    std::vector<Element> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(values[digits[i]]);
    RingHom h(domain, codomain, std::move(images));
    bool ok = true;
    for (const auto& rel : domain.relations()) {
      Element img = h.apply_poly(rel);
      if (!img.is_zero()) {
        ok = false;
        break;
      }
      h.evidence_.push_back(std::move(img));
    }
    if (ok) out.push_back(std::move(h));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < values.size()) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace zkit
