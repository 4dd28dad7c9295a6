#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zkit/hom.hpp"
#include "zkit/ideal.hpp"
#include "zkit/localization.hpp"

namespace zkit {

/// D(f_1, ..., f_n) in the Zariski lattice of a ring. The generator list is
/// normalized syntactically (zeros and duplicates dropped, sorted); semantic
/// equality is zar_eq, never list comparison.
class ZarElt {
 public:
  ZarElt(Ring ring, std::vector<Element> generators);
  static ZarElt top(const Ring& ring);
  static ZarElt bottom(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& generators() const { return generators_; }
  bool is_syntactic_bottom() const { return generators_.empty(); }
  /// "D(x, y - 1)"; the empty list prints as "D()".
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Element> generators_;
};

ZarElt support_D(const Element& f);
ZarElt zar_join(const ZarElt& u, const ZarElt& v);
ZarElt zar_meet(const ZarElt& u, const ZarElt& v);
bool zar_leq(const ZarElt& u, const ZarElt& v);
bool zar_eq(const ZarElt& u, const ZarElt& v);
std::optional<BezoutCertificate> zar_eq_top(const ZarElt& u);

/// Per generator f_i of u, a witness f_i^k in <generators of v>.
std::optional<std::vector<RadicalWitness>> zar_leq_witness(const ZarElt& u, const ZarElt& v);

ZarElt lattice_morphism(const RingHom& phi, const ZarElt& u);

/// Element of the Zariski lattice of R[1/f], generated by fractions.
/// Decisions are made in R: D(r/f^n) <= D(s_1.., s_m) iff r*f lies in the
/// radical of <s_1, .., s_m>.
class LocalZarElt {
 public:
  LocalZarElt(LocalizedRing ring, std::vector<Fraction> generators);
  static LocalZarElt top(const LocalizedRing& ring);
  static LocalZarElt bottom(const LocalizedRing& ring);

  const LocalizedRing& ring() const { return ring_; }
  const std::vector<Fraction>& generators() const { return generators_; }
  std::string to_string() const;

 private:
  LocalizedRing ring_;
  std::vector<Fraction> generators_;
};

LocalZarElt local_join(const LocalZarElt& u, const LocalZarElt& v);
LocalZarElt local_meet(const LocalZarElt& u, const LocalZarElt& v);
bool local_leq(const LocalZarElt& u, const LocalZarElt& v);
bool local_eq(const LocalZarElt& u, const LocalZarElt& v);

/// Fraction cofactors c_i with sum c_i * g_i == 1/1 in R[1/f].
struct LocalBezout {
  std::vector<Fraction> generators;
  std::vector<Fraction> cofactors;
  bool verify() const;
};

std::optional<LocalBezout> local_eq_top(const LocalZarElt& u);

/// The same element read in the lattice of the presentation ring.
ZarElt to_presentation(const LocalZarElt& u);
LocalZarElt from_presentation(const LocalizedRing& ring, const ZarElt& u);

/// D(g_1/1, ..., g_m/1).
LocalZarElt restrict(const LocalizedRing& ring, const ZarElt& u);
LocalZarElt restrict(const Element& f, const ZarElt& u);

/// D(r_i/f^n_i) -> join of D(r_i) meet D(f) = D(r_i * f).
ZarElt pushdown(const LocalZarElt& v);
/// Presentation-form input; converted through from_presentation first.
ZarElt pushdown(const LocalizedRing& ring, const ZarElt& v);

}  // namespace zkit
