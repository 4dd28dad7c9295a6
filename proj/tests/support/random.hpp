#pragma once

#include <random>
#include <string>
#include <vector>

#include "zkit/ring.hpp"
#include "zkit/run.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Element from DSL text, e.g. el(R, "x^2 - y").
inline zkit::Element el(const zkit::Ring& R, const std::string& text) {
  return zkit::dsl::element_from_text(R, text);
}

/// Relation menus kept small so Gröbner bases stay cheap.
inline const std::vector<std::vector<std::string>>& relation_menu() {
  static const std::vector<std::vector<std::string>> menu = {
      {}, {"x*y"}, {"x^2 - y"}, {"x^2 - 1"}, {"x*y - 1"}, {"y^2 - x^3"}, {"x^2", "x*y"},
  };
  return menu;
}

enum class Family { Integers, Residues, RationalPoly, PrimePoly };

/// K[vars]/(rels), relations given as text.
inline zkit::Ring poly_ring(zkit::Field field, const std::vector<std::string>& rels,
                            std::vector<std::string> vars = {"x", "y"},
                            zkit::MonomialOrder order = zkit::MonomialOrder::GRevLex) {
  zkit::Ring free = zkit::Ring::polynomial(field, vars, {}, order);
  std::vector<zkit::Poly> polys;
  for (const auto& r : rels) polys.push_back(zkit::dsl::element_from_text(free, r).poly());
  return zkit::Ring::polynomial(field, std::move(vars), std::move(polys), order);
}

inline zkit::Ring random_ring(Rng& rng, Family fam) {
  switch (fam) {
    case Family::Integers: return zkit::Ring::integers();
    case Family::Residues: return zkit::Ring::residues(uniform(rng, 2, 64));
    case Family::RationalPoly: {
      const auto& m = relation_menu();
      return poly_ring(zkit::Field::rationals(), m[uniform(rng, 0, m.size() - 1)]);
    }
    case Family::PrimePoly: {
      static const long primes[] = {2, 3, 5, 7};
      const auto& m = relation_menu();
      return poly_ring(zkit::Field::prime(primes[uniform(rng, 0, 3)]), m[uniform(rng, 0, m.size() - 1)]);
    }
  }
  return zkit::Ring::integers();
}

inline Family random_family(Rng& rng) { return static_cast<Family>(uniform(rng, 0, 3)); }

/// Integers in [-30, 30]; residues uniformly; polynomials with up to four
/// terms of total degree at most `deg` and small coefficients.
inline zkit::Element random_element(const zkit::Ring& R, Rng& rng, unsigned deg = 3) {
  switch (R.kind()) {
    case zkit::RingKind::Integer: return R.from_integer(uniform(rng, -30, 30));
    case zkit::RingKind::Residue: return R.from_integer(uniform(rng, 0, R.modulus().get_si() - 1));
    case zkit::RingKind::PolyQuotient: break;
  }
  zkit::Element e = R.zero();
  const long terms = uniform(rng, 0, 4);
  for (long t = 0; t < terms; ++t) {
    zkit::Element m = R.from_integer(uniform(rng, -3, 3));
    unsigned budget = static_cast<unsigned>(uniform(rng, 0, deg));
    for (std::size_t v = 0; v < R.nvars() && budget > 0; ++v) {
      const unsigned k = static_cast<unsigned>(uniform(rng, 0, budget));
      m = m * R.variable(v).pow(k);
      budget -= k;
    }
    e = e + m;
  }
  return e;
}

}  // namespace gen
