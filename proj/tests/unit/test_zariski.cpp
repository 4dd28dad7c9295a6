#include <doctest.h>

#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "zkit/zariski.hpp"

using namespace zkit;
using gen::el;

namespace {

Ring qx() { return gen::poly_ring(Field::rationals(), {}, {"x"}); }

ZarElt random_latt(const Ring& R, gen::Rng& rng) {
  std::vector<Element> gens;
  const long n = gen::uniform(rng, 0, 3);
  for (long i = 0; i < n; ++i) gens.push_back(gen::random_element(R, rng, 2));
  return ZarElt(R, gens);
}

// Oracle for Z and Z/n: D(a..) <= D(b..) iff every a lies in the radical of
// the gcd of the b's (and the modulus).
bool int_leq(const ZarElt& u, const ZarElt& v) {
  std::vector<long> bs;
  for (const auto& b : v.generators()) bs.push_back(b.integer().get_si());
  if (u.ring().kind() == RingKind::Residue) bs.push_back(u.ring().modulus().get_si());
  const long g = std::labs(oracle::z_gcd(bs));
  for (const auto& a : u.generators())
    if (!oracle::z_radical_member(a.integer().get_si(), g)) return false;
  return true;
}

}  // namespace

TEST_CASE("support of 0 is bottom and support of 1 is top") {
  gen::Rng rng(40);
  for (int f = 0; f < 4; ++f) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(f));
    CHECK(zar_eq(support_D(R.zero()), ZarElt::bottom(R)));
    CHECK(support_D(R.zero()).is_syntactic_bottom());
    CHECK(zar_eq(support_D(R.one()), ZarElt::top(R)));
  }
}

TEST_CASE("lattice examples") {
  Ring Z = Ring::integers();
  auto D = [&](std::initializer_list<long> xs) {
    std::vector<Element> g;
    for (long x : xs) g.push_back(Z.from_integer(x));
    return ZarElt(Z, g);
  };
  CHECK(zar_eq(D({-6}), D({6})));
  CHECK(zar_eq(zar_join(D({2}), D({3})), ZarElt::top(Z)));
  CHECK(zar_eq(zar_join(D({2}), D({3})), D({2, 3})));
  CHECK_FALSE(zar_leq(D({2}), D({12})));
  CHECK(zar_leq(D({6}), D({12})));
  CHECK(D({0, 4, 4}).to_string() == "D(4)");

  auto cert = zar_eq_top(D({4, 9}));
  REQUIRE(cert);
  CHECK(cert->cofactors[0].integer() == -2);
  CHECK(cert->cofactors[1].integer() == 1);
  auto one = zar_eq_top(D({1}));
  REQUIRE(one);
  CHECK(one->cofactors[0].integer() == 1);
  CHECK_FALSE(zar_eq_top(D({2, 4})));

  Ring R = qx();
  CHECK(zar_eq(support_D(el(R, "x^2")), support_D(el(R, "x"))));
  auto c = zar_eq_top(ZarElt(R, {el(R, "x"), el(R, "x - 1")}));
  REQUIRE(c);
  CHECK(c->verify());
  CHECK(zar_eq(zar_meet(support_D(el(R, "x")), support_D(el(R, "x - 1"))), support_D(el(R, "x^2 - x"))));
}

TEST_CASE("lattice morphism examples and universality at generators") {
  Ring Z = Ring::integers(), Z8 = Ring::residues(8);
  RingHom phi = RingHom::make(Z, Z8, {});
  ZarElt img = lattice_morphism(phi, support_D(Z.from_integer(2)));
  CHECK(img.ring() == Z8);
  CHECK(zar_eq(img, ZarElt::bottom(Z8)));

  gen::Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    Ring R = gen::poly_ring(Field::prime(5), {}, {"x", "y"});
    Ring S = gen::random_ring(rng, gen::Family::PrimePoly);
    if (S.base_field().characteristic() != 5) continue;
    RingHom psi = RingHom::make(R, S, {gen::random_element(S, rng, 1), gen::random_element(S, rng, 1)});
    Element f = gen::random_element(R, rng, 2);
    CHECK(zar_eq(lattice_morphism(psi, support_D(f)), support_D(psi.apply(f))));
    ZarElt u = random_latt(R, rng), v = random_latt(R, rng);
    CHECK(zar_eq(lattice_morphism(psi, zar_join(u, v)), zar_join(lattice_morphism(psi, u), lattice_morphism(psi, v))));
    CHECK(zar_eq(lattice_morphism(psi, zar_meet(u, v)), zar_meet(lattice_morphism(psi, u), lattice_morphism(psi, v))));
    CHECK(zar_eq(lattice_morphism(psi, ZarElt::top(R)), ZarElt::top(S)));
  }
}

TEST_CASE("zar_leq agrees with the factorization oracle over Z and Z/n") {
  gen::Rng rng(42);
  for (int t = 0; t < 400; ++t) {
    Ring R = t % 2 ? Ring::integers() : Ring::residues(gen::uniform(rng, 2, 64));
    ZarElt u = random_latt(R, rng), v = random_latt(R, rng);
    CHECK(zar_leq(u, v) == int_leq(u, v));
  }
}

TEST_CASE("distributive lattice axioms up to zar_eq") {
  gen::Rng rng(43);
  for (int t = 0; t < 80; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    ZarElt a = random_latt(R, rng), b = random_latt(R, rng), c = random_latt(R, rng);
    CHECK(zar_eq(zar_join(a, b), zar_join(b, a)));
    CHECK(zar_eq(zar_meet(a, b), zar_meet(b, a)));
    CHECK(zar_eq(zar_join(zar_join(a, b), c), zar_join(a, zar_join(b, c))));
    CHECK(zar_eq(zar_meet(zar_meet(a, b), c), zar_meet(a, zar_meet(b, c))));
    CHECK(zar_eq(zar_join(a, zar_meet(a, b)), a));
    CHECK(zar_eq(zar_meet(a, zar_join(a, b)), a));
    CHECK(zar_eq(zar_meet(a, zar_join(b, c)), zar_join(zar_meet(a, b), zar_meet(a, c))));
    CHECK(zar_eq(zar_join(a, ZarElt::bottom(R)), a));
    CHECK(zar_eq(zar_meet(a, ZarElt::top(R)), a));
    CHECK(zar_leq(zar_meet(a, b), a));
    CHECK(zar_leq(a, zar_join(a, b)));
  }
}

TEST_CASE("support laws") {
  gen::Rng rng(44);
  for (int t = 0; t < 120; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    Element f = gen::random_element(R, rng), g = gen::random_element(R, rng);
    CHECK(zar_eq(support_D(f * g), zar_meet(support_D(f), support_D(g))));
    CHECK(zar_leq(support_D(f + g), zar_join(support_D(f), support_D(g))));
  }
}

TEST_CASE("zar_eq_top agrees with comparison against top; witnesses verify") {
  gen::Rng rng(45);
  for (int t = 0; t < 120; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    ZarElt u = random_latt(R, rng), v = random_latt(R, rng);
    auto c = zar_eq_top(u);
    CHECK(c.has_value() == zar_eq(u, ZarElt::top(R)));
    if (c) CHECK(c->verify());
    auto w = zar_leq_witness(u, v);
    CHECK(w.has_value() == zar_leq(u, v));
    if (w) {
      for (std::size_t i = 0; i < u.generators().size(); ++i) {
        Element s = R.zero();
        for (std::size_t j = 0; j < v.generators().size(); ++j) s = s + (*w)[i].cofactors[j] * v.generators()[j];
        CHECK(s == u.generators()[i].pow((*w)[i].exponent));
      }
    }
  }
}

TEST_CASE("order/unit bridge") {
  gen::Rng rng(46);
  for (int t = 0; t < 120; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    Element f = gen::random_element(R, rng, 2), g = gen::random_element(R, rng, 2);
    LocalizedRing L(R, g);
    CHECK(zar_leq(support_D(g), support_D(f)) == is_unit(L.canonical(f)).has_value());
  }
}

TEST_CASE("restriction and pushdown examples") {
  Ring R = qx();
  LocalizedRing L(R, el(R, "x"));
  LocalZarElt v(L, {L.fraction(el(R, "x^2"), 1)});
  CHECK(zar_eq(pushdown(v), support_D(el(R, "x"))));

  Ring Z = Ring::integers();
  LocalizedRing Z2(Z, Z.from_integer(2));
  LocalZarElt six = restrict(Z2, support_D(Z.from_integer(6)));
  CHECK(local_eq(six, LocalZarElt(Z2, {Z2.canonical(Z.from_integer(3))})));
  CHECK_FALSE(local_eq(six, LocalZarElt::top(Z2)));

  gen::Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    Ring S = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    Element f = gen::random_element(S, rng, 2);
    LocalizedRing Lf(S, f);
    auto top = local_eq_top(restrict(f, support_D(f)));
    REQUIRE(top);
    CHECK(top->verify());
  }
}

TEST_CASE("pushdown of a restriction is the meet with D(f)") {
  gen::Rng rng(48);
  for (int t = 0; t < 100; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    Element f = gen::random_element(R, rng, 2);
    ZarElt u = random_latt(R, rng);
    CHECK(zar_eq(pushdown(restrict(f, u)), zar_meet(u, support_D(f))));
  }
}

TEST_CASE("presentation and fraction forms of local lattice elements agree") {
  gen::Rng rng(49);
  for (int t = 0; t < 40; ++t) {
    Ring R = gen::random_ring(rng, t % 2 ? gen::Family::RationalPoly : gen::Family::PrimePoly);
    Element f = gen::random_element(R, rng, 2);
    LocalizedRing L(R, f);
    LocalZarElt u = restrict(L, random_latt(R, rng));
    LocalZarElt v = restrict(L, random_latt(R, rng));
    CHECK(local_eq(from_presentation(L, to_presentation(u)), u));
    CHECK(zar_leq(to_presentation(u), to_presentation(v)) == local_leq(u, v));
    CHECK(zar_eq(pushdown(L, to_presentation(u)), pushdown(u)));
  }
}

TEST_CASE("Zariski separatedness") {
  gen::Rng rng(50);
  int distinct = 0;
  for (int t = 0; t < 100; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    Element s = gen::random_element(R, rng, 1);
    std::vector<Element> cover = {s, R.one() - s};
    ZarElt u = random_latt(R, rng);
    ZarElt v = t % 2 ? u : random_latt(R, rng);
    bool all_equal = true;
    for (const auto& fi : cover) all_equal = all_equal && local_eq(restrict(fi, u), restrict(fi, v));
    CHECK(all_equal == zar_eq(u, v));
    if (!zar_eq(u, v)) ++distinct;
  }
  CHECK(distinct > 10);
}
