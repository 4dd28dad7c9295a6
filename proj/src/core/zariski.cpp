#include "zkit/zariski.hpp"

#include <algorithm>

#include "zkit/error.hpp"

namespace zkit {

namespace {

void require_same(const Ring& a, const Ring& b) {
  if (a != b) {
    fail(ErrorKind::RingMismatch,
         "lattice elements over " + a.describe() + " and " + b.describe());
  }
}

void require_same(const LocalizedRing& a, const LocalizedRing& b) {
  if (a != b) {
    fail(ErrorKind::BaseMismatch,
         "lattice elements over " + a.describe() + " and " + b.describe());
  }
}

template <class T, class Key>
void sort_unique(std::vector<T>& items, Key key) {
  std::vector<std::pair<std::string, T>> keyed;
  for (auto& it : items) keyed.emplace_back(key(it), std::move(it));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  items.clear();
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i && keyed[i].first == keyed[i - 1].first) continue;
    items.push_back(std::move(keyed[i].second));
  }
}

std::string join_strings(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

}  // namespace

ZarElt::ZarElt(Ring ring, std::vector<Element> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.ring() != ring_) {
      fail(ErrorKind::RingMismatch, g.to_string() + " is not in " + ring_.describe());
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
  sort_unique(generators_, [](const Element& e) { return e.to_string(); });
}

ZarElt ZarElt::top(const Ring& ring) { return ZarElt(ring, {ring.one()}); }
ZarElt ZarElt::bottom(const Ring& ring) { return ZarElt(ring, {}); }

std::string ZarElt::to_string() const {
  std::vector<std::string> parts;
  for (const auto& g : generators_) parts.push_back(g.to_string());
  return "D(" + join_strings(parts) + ")";
}

ZarElt support_D(const Element& f) { return ZarElt(f.ring(), {f}); }

ZarElt zar_join(const ZarElt& u, const ZarElt& v) {
  require_same(u.ring(), v.ring());
  std::vector<Element> gens = u.generators();
  gens.insert(gens.end(), v.generators().begin(), v.generators().end());
  return ZarElt(u.ring(), std::move(gens));
}

ZarElt zar_meet(const ZarElt& u, const ZarElt& v) {
  require_same(u.ring(), v.ring());
  std::vector<Element> gens;
  for (const auto& a : u.generators()) {
    for (const auto& b : v.generators()) gens.push_back(a * b);
  }
  return ZarElt(u.ring(), std::move(gens));
}

bool zar_leq(const ZarElt& u, const ZarElt& v) {
  require_same(u.ring(), v.ring());
  FinGenIdeal ideal(v.ring(), v.generators());
  for (const auto& g : u.generators()) {
    if (!radical_member(g, ideal)) return false;
  }
  return true;
}

bool zar_eq(const ZarElt& u, const ZarElt& v) { return zar_leq(u, v) && zar_leq(v, u); }

std::optional<BezoutCertificate> zar_eq_top(const ZarElt& u) {
  if (u.generators().empty()) {
    // Only the zero ring has top == bottom; 0 * 0 == 1 there.
    if (!u.ring().is_zero_ring()) return std::nullopt;
    return BezoutCertificate{{u.ring().zero()}, {u.ring().zero()}};
  }
  return unimodular_certificate(u.generators());
}

std::optional<std::vector<RadicalWitness>> zar_leq_witness(const ZarElt& u, const ZarElt& v) {
  require_same(u.ring(), v.ring());
  FinGenIdeal ideal(v.ring(), v.generators());
  std::vector<RadicalWitness> out;
  for (const auto& g : u.generators()) {
    auto w = radical_witness(g, ideal);
    if (!w) return std::nullopt;
    out.push_back(std::move(*w));
  }
  return out;
}

ZarElt lattice_morphism(const RingHom& phi, const ZarElt& u) {
  if (u.ring() != phi.domain()) {
    fail(ErrorKind::RingMismatch, "lattice element over " + u.ring().describe() +
                                      " pushed along a map out of " + phi.domain().describe());
  }
  std::vector<Element> gens;
  for (const auto& g : u.generators()) gens.push_back(phi.apply(g));
  return ZarElt(phi.codomain(), std::move(gens));
}

LocalZarElt::LocalZarElt(LocalizedRing ring, std::vector<Fraction> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same(g.ring(), ring_);
    if (!g.numerator().is_zero()) generators_.push_back(std::move(g));
  }
  sort_unique(generators_, [](const Fraction& e) { return e.to_string(); });
}

LocalZarElt LocalZarElt::top(const LocalizedRing& ring) {
  return LocalZarElt(ring, {ring.canonical(ring.base().one())});
}

LocalZarElt LocalZarElt::bottom(const LocalizedRing& ring) { return LocalZarElt(ring, {}); }

std::string LocalZarElt::to_string() const {
  std::vector<std::string> parts;
  for (const auto& g : generators_) parts.push_back(g.to_string());
  return "D(" + join_strings(parts) + ")";
}

LocalZarElt local_join(const LocalZarElt& u, const LocalZarElt& v) {
  require_same(u.ring(), v.ring());
  std::vector<Fraction> gens = u.generators();
  gens.insert(gens.end(), v.generators().begin(), v.generators().end());
  return LocalZarElt(u.ring(), std::move(gens));
}

LocalZarElt local_meet(const LocalZarElt& u, const LocalZarElt& v) {
  require_same(u.ring(), v.ring());
  std::vector<Fraction> gens;
  for (const auto& a : u.generators()) {
    for (const auto& b : v.generators()) gens.push_back(a * b);
  }
  return LocalZarElt(u.ring(), std::move(gens));
}

bool local_leq(const LocalZarElt& u, const LocalZarElt& v) {
  require_same(u.ring(), v.ring());
  const Ring& base = u.ring().base();
  const Element& f = u.ring().f();
  std::vector<Element> numerators;
  for (const auto& s : v.generators()) numerators.push_back(s.numerator());
  FinGenIdeal ideal(base, std::move(numerators));
  for (const auto& r : u.generators()) {
    if (!radical_member(r.numerator() * f, ideal)) return false;
  }
  return true;
}

bool local_eq(const LocalZarElt& u, const LocalZarElt& v) {
  return local_leq(u, v) && local_leq(v, u);
}

bool LocalBezout::verify() const {
  if (generators.empty() || generators.size() != cofactors.size()) return false;
  const LocalizedRing& L = generators.front().ring();
  Fraction sum = L.canonical(L.base().zero());
  for (std::size_t i = 0; i < generators.size(); ++i) sum = sum + cofactors[i] * generators[i];
  return frac_eq(sum, L.canonical(L.base().one()));
}

std::optional<LocalBezout> local_eq_top(const LocalZarElt& u) {
  const LocalizedRing& L = u.ring();
  const Ring& base = L.base();
  std::vector<Fraction> gens = u.generators();
  if (gens.empty()) {
    // Top equals bottom only in a zero localization.
    if (!frac_eq(L.canonical(base.one()), L.canonical(base.zero()))) return std::nullopt;
    gens.push_back(L.canonical(base.zero()));
  }
  std::vector<Element> numerators;
  for (const auto& g : gens) numerators.push_back(g.numerator());
  // 1 in <r_i/1> iff f^N in <r_i> for some N.
  auto w = radical_witness(L.f(), FinGenIdeal(base, numerators));
  if (!w) return std::nullopt;
  LocalBezout cert{gens, {}};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cert.cofactors.push_back(
        Fraction(L, w->cofactors[i] * L.f().pow(gens[i].exponent()), w->exponent));
  }
  if (!cert.verify()) fail(ErrorKind::InvalidWitness, "local Bezout certificate failed re-verification");
  return cert;
}

ZarElt to_presentation(const LocalZarElt& u) {
  std::vector<Element> gens;
  for (const auto& g : u.generators()) gens.push_back(to_presentation(g));
  return ZarElt(u.ring().presentation(), std::move(gens));
}

LocalZarElt from_presentation(const LocalizedRing& ring, const ZarElt& u) {
  if (u.ring() != ring.presentation()) {
    fail(ErrorKind::RingMismatch, u.to_string() + " is not over " + ring.presentation().describe());
  }
  std::vector<Fraction> gens;
  for (const auto& g : u.generators()) gens.push_back(from_presentation(ring, g));
  return LocalZarElt(ring, std::move(gens));
}

LocalZarElt restrict(const LocalizedRing& ring, const ZarElt& u) {
  if (u.ring() != ring.base()) {
    fail(ErrorKind::RingMismatch, u.to_string() + " is not over " + ring.base().describe());
  }
  std::vector<Fraction> gens;
  for (const auto& g : u.generators()) gens.push_back(ring.canonical(g));
  return LocalZarElt(ring, std::move(gens));
}

LocalZarElt restrict(const Element& f, const ZarElt& u) {
  return restrict(LocalizedRing(f.ring(), f), u);
}

ZarElt pushdown(const LocalZarElt& v) {
  const Element& f = v.ring().f();
  std::vector<Element> gens;
  for (const auto& g : v.generators()) gens.push_back(g.numerator() * f);
  return ZarElt(v.ring().base(), std::move(gens));
}

ZarElt pushdown(const LocalizedRing& ring, const ZarElt& v) {
  return pushdown(from_presentation(ring, v));
}

}  // namespace zkit
