#include <doctest.h>

#include "../support/random.hpp"
#include "zkit/error.hpp"
#include "zkit/glue.hpp"

using namespace zkit;
using gen::el;

namespace {

Ring qx() { return gen::poly_ring(Field::rationals(), {}, {"x"}); }

// a, b, 1 - a c - b d is unimodular by construction.
UnimodularCover random_cover(const Ring& R, gen::Rng& rng) {
  Element a = gen::random_element(R, rng, 1), b = gen::random_element(R, rng, 1);
  if (gen::uniform(rng, 0, 1) == 0) return make_cover({a, R.one() - a});
  Element c = gen::random_element(R, rng, 1), d = gen::random_element(R, rng, 1);
  return make_cover({a, b, R.one() - a * c - b * d});
}

// Re-represent x as (x f^pad) / f^(n + pad).
Fraction pad(const Fraction& x, unsigned k) {
  return Fraction(x.ring(), x.numerator() * x.ring().f().pow(k), x.exponent() + k);
}

}  // namespace

TEST_CASE("cover construction") {
  Ring Z = Ring::integers();
  UnimodularCover c = make_cover({Z.from_integer(2), Z.from_integer(3)});
  CHECK(c.certificate.verify());
  try {
    Ring R = qx();
    make_cover({el(R, "x"), el(R, "x^2")});
    FAIL("expected NotUnimodular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnimodular);
  }
  BezoutCertificate bad{{Z.from_integer(2), Z.from_integer(3)}, {Z.from_integer(1), Z.from_integer(1)}};
  CHECK_THROWS_AS(cover_from_certificate(bad), Error);
  BezoutCertificate good{{Z.from_integer(2), Z.from_integer(3)}, {Z.from_integer(-1), Z.from_integer(1)}};
  CHECK(cover_from_certificate(good).size() == 2);
}

TEST_CASE("pulling back covers") {
  Ring Z = Ring::integers(), Z7 = Ring::residues(7);
  PulledBackCover pb = pullback_cover(make_cover({Z.from_integer(2), Z.from_integer(3)}), RingHom::make(Z, Z7, {}));
  CHECK(pb.cover.ring == Z7);
  CHECK(pb.cover.elements[0].integer() == 2);
  CHECK(pb.cover.elements[1].integer() == 3);
  CHECK(pb.cover.certificate.verify());

  Ring R = qx();
  RingHom shift = RingHom::make(R, R, {el(R, "x + 1")});
  PulledBackCover ps = pullback_cover(make_cover({el(R, "x"), el(R, "1 - x")}), shift);
  CHECK(ps.cover.elements[0] == el(R, "x + 1"));
  CHECK(ps.cover.elements[1] == el(R, "-x"));
  CHECK(ps.cover.certificate.verify());

  // psi_i(r/1) == phi(r)/1
  gen::Rng rng(60);
  for (int t = 0; t < 30; ++t) {
    Ring A = gen::random_ring(rng, gen::Family::RationalPoly);
    RingHom phi = RingHom::make(R, A, {gen::random_element(A, rng, 2)});
    UnimodularCover cov = random_cover(R, rng);
    PulledBackCover p = pullback_cover(cov, phi);
    for (std::size_t i = 0; i < cov.size(); ++i) {
      Element r = gen::random_element(R, rng, 2);
      CHECK(frac_eq(p.maps[i].apply(cov.localization(i).canonical(r)), p.maps[i].target().canonical(phi.apply(r))));
    }
  }
}

TEST_CASE("gluing examples") {
  Ring Z = Ring::integers();
  UnimodularCover c = make_cover({Z.from_integer(2), Z.from_integer(3)});
  auto res = check_compatibility(c, {c.localization(0).fraction(Z.from_integer(10), 1),
                                     c.localization(1).fraction(Z.from_integer(15), 1)});
  REQUIRE(res.family);
  CHECK(glue_element(*res.family).integer() == 5);

  auto bad = check_compatibility(c, {c.localization(0).canonical(Z.one()), c.localization(1).canonical(Z.zero())});
  CHECK_FALSE(bad.family);
  REQUIRE(bad.refutation);
  CHECK(bad.refutation->i == 0);
  CHECK(bad.refutation->j == 1);

  Ring Z8 = Ring::residues(8);
  UnimodularCover c8 = make_cover({Z8.from_integer(3), Z8.from_integer(5)});
  CompatibleFamily fam = restrict_element(c8, Z8.from_integer(6));
  CHECK(fam.elements[0].numerator().integer() == 6);
  CHECK(check_compatibility(c8, fam.elements).family);
  CHECK(glue_element(fam).integer() == 6);

  Ring R = qx();
  UnimodularCover cx = make_cover({el(R, "x"), el(R, "1 - x")});
  auto fx = check_compatibility(cx, {cx.localization(0).fraction(el(R, "x^2"), 1),
                                     cx.localization(1).fraction(el(R, "x - x^2"), 1)});
  REQUIRE(fx.family);
  CHECK(glue_element(*fx.family) == el(R, "x"));
}

TEST_CASE("hom gluing example: Q[t] -> Q[x], t -> x") {
  Ring A = gen::poly_ring(Field::rationals(), {}, {"t"});
  Ring R = qx();
  UnimodularCover c = make_cover({el(R, "x"), el(R, "1 - x")});
  std::vector<FractionHom> homs;
  for (std::size_t i = 0; i < 2; ++i) {
    LocalizedRing L = c.localization(i);
    homs.push_back(FractionHom::make(A, L, {L.canonical(el(R, "x"))}));
  }
  auto res = check_compatibility(c, A, homs);
  REQUIRE(res.family);
  RingHom g = glue_hom(*res.family);
  CHECK(g.images()[0] == el(R, "x"));
}

TEST_CASE("element gluing round-trips") {
  gen::Rng rng(61);
  for (int t = 0; t < 80; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    UnimodularCover cover = random_cover(R, rng);
    Element g = gen::random_element(R, rng);
    CHECK(glue_element(restrict_element(cover, g)) == g);

    std::vector<Fraction> padded;
    for (std::size_t i = 0; i < cover.size(); ++i)
      padded.push_back(pad(cover.localization(i).canonical(g), static_cast<unsigned>(gen::uniform(rng, 0, 3))));
    auto res = check_compatibility(cover, padded);
    REQUIRE(res.family);
    Element h = glue_element(*res.family);
    for (std::size_t i = 0; i < cover.size(); ++i) CHECK(frac_eq(cover.localization(i).canonical(h), padded[i]));
  }
}

TEST_CASE("hom gluing round-trips") {
  gen::Rng rng(62);
  for (int t = 0; t < 30; ++t) {
    Ring A = gen::poly_ring(Field::rationals(), t % 2 ? std::vector<std::string>{"s*t"} : std::vector<std::string>{},
                            {"s", "t"});
    Ring R = gen::random_ring(rng, gen::Family::RationalPoly);
    std::vector<Element> images = {gen::random_element(R, rng, 2), gen::random_element(R, rng, 2)};
    if (t % 2) images[1] = R.zero();  // respect s*t = 0
    RingHom psi = RingHom::make(A, R, images);
    UnimodularCover cover = random_cover(R, rng);
    CompatibleHomFamily fam = restrict_hom(cover, psi);
    CHECK(glue_hom(fam) == psi);

    // Perturbed representatives still glue to maps restricting to the family.
    std::vector<FractionHom> homs;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      std::vector<Fraction> imgs;
      for (const auto& x : fam.homs[i].images()) imgs.push_back(pad(x, static_cast<unsigned>(gen::uniform(rng, 0, 2))));
      homs.push_back(FractionHom::make(A, cover.localization(i), imgs));
    }
    auto res = check_compatibility(cover, A, homs);
    REQUIRE(res.family);
    RingHom glued = glue_hom(*res.family);
    for (std::size_t i = 0; i < cover.size(); ++i)
      for (std::size_t g = 0; g < 2; ++g)
        CHECK(frac_eq(cover.localization(i).canonical(glued.images()[g]), homs[i].images()[g]));
  }
}

TEST_CASE("incompatible hom families are refuted") {
  Ring A = gen::poly_ring(Field::rationals(), {}, {"t"});
  Ring R = qx();
  UnimodularCover c = make_cover({el(R, "x"), el(R, "1 - x")});
  std::vector<FractionHom> homs = {FractionHom::make(A, c.localization(0), {c.localization(0).canonical(R.one())}),
                                   FractionHom::make(A, c.localization(1), {c.localization(1).canonical(R.zero())})};
  auto res = check_compatibility(c, A, homs);
  CHECK_FALSE(res.family);
  CHECK(res.refutation);
}
