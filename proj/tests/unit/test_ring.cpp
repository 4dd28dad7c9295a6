#include <doctest.h>

#include <algorithm>

#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "zkit/error.hpp"
#include "zkit/hom.hpp"

using namespace zkit;
using gen::el;

namespace {

Ring qxy_x2y() { return gen::poly_ring(Field::rationals(), {"x^2 - y"}); }
Ring qx(const std::vector<std::string>& rels = {}) { return gen::poly_ring(Field::rationals(), rels, {"x"}); }

}  // namespace

TEST_CASE("normalize and arithmetic examples") {
  Ring R = qxy_x2y();
  // x^2 - y is its own Gröbner basis, so x^2 reduces to y.
  CHECK(el(R, "x^2") == R.variable("y"));
  CHECK(R.variable("x") * R.variable("x") == R.variable("y"));
  CHECK(el(R, "x^3").to_string() == "x*y");

  Ring Z = Ring::integers();
  CHECK(Z.normalize(mpz_class(7)).to_string() == "7");
  Ring Z8 = Ring::residues(8);
  CHECK(Z8.normalize(mpz_class(13)).to_string() == "5");
  CHECK(Z8.normalize(mpz_class(-3)).to_string() == "5");
  CHECK((Z8.from_integer(2) * Z8.from_integer(4)).is_zero());
}

TEST_CASE("invalid rings are rejected") {
  CHECK_THROWS_AS(Ring::residues(1), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  try {
    Field::prime(9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRing);
  }
}

TEST_CASE("cross-ring arithmetic is a RingMismatch") {
  Ring a = Ring::residues(8), b = Ring::residues(9);
  try {
    (void)(a.one() + b.one());
    FAIL("expected RingMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RingMismatch);
  }
}

TEST_CASE("unknown variables") {
  Ring R = qx();
  try {
    R.variable("z");
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
}

TEST_CASE("is_unit examples") {
  Ring Z8 = Ring::residues(8);
  auto w = is_unit(Z8.from_integer(3));
  REQUIRE(w);
  // 3 * 3 = 9 = 1 mod 8
  CHECK(w->integer() == 3);
  CHECK_FALSE(is_unit(Ring::integers().from_integer(2)));
  CHECK(is_unit(Ring::integers().from_integer(-1))->integer() == -1);

  Ring R = qx({"x^2 - 1"});
  auto inv = is_unit(R.variable("x"));
  REQUIRE(inv);
  CHECK(*inv == R.variable("x"));
  CHECK_FALSE(is_unit(qx().variable("x")));
  CHECK(is_unit(el(qx(), "3/2"))->to_string() == "2/3");
}

TEST_CASE("hom_apply and hom_compose examples") {
  Ring R = qx();
  RingHom phi = RingHom::make(R, R, {el(R, "x + 1")});
  CHECK(phi.apply(el(R, "x^2")) == el(R, "x^2 + 2*x + 1"));
  RingHom id = RingHom::identity(R);
  Element a = el(R, "3*x^3 - x + 7/2");
  CHECK(id.apply(a) == a);

  RingHom psi = RingHom::make(R, R, {el(R, "2*x")});
  // (psi o phi)(x) = psi(x + 1) = 2x + 1
  CHECK(hom_compose(psi, phi).images()[0] == el(R, "2*x + 1"));
  CHECK(hom_compose(phi, psi).images()[0] == el(R, "2*x + 2"));

  Ring Z = Ring::integers(), Z8 = Ring::residues(8);
  RingHom red = RingHom::make(Z, Z8, {});
  CHECK(red.apply(Z.from_integer(13)).integer() == 5);
}

TEST_CASE("ill-defined homs are rejected") {
  Ring A = qx({"x^2 - 1"});
  Ring Q = Ring::field(Field::rationals());
  CHECK_NOTHROW(RingHom::make(A, Q, {Q.from_integer(-1)}));
  try {
    RingHom::make(A, Q, {Q.from_integer(2)});
    FAIL("expected NotWellDefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotWellDefined);
  }
  // No map Z/8 -> Z/3 and no map Q -> F_5.
  CHECK_THROWS_AS(RingHom::make(Ring::residues(8), Ring::residues(3), {}), Error);
  CHECK_THROWS_AS(RingHom::make(qx(), Ring::field(Field::prime(5)), {Ring::field(Field::prime(5)).one()}), Error);
  CHECK_NOTHROW(RingHom::make(Ring::residues(8), Ring::residues(4), {}));
}

TEST_CASE("enumerate_homs matches brute-force zero counts") {
  Ring F5 = Ring::field(Field::prime(5));
  auto homs = enumerate_homs(gen::poly_ring(Field::prime(5), {"x^2 - 1"}, {"x"}), F5);
  REQUIRE(homs.size() == 2);
  CHECK(homs[0].images()[0].to_string() == "1");
  CHECK(homs[1].images()[0].to_string() == "4");

  Ring F7 = Ring::field(Field::prime(7));
  Ring fermat = gen::poly_ring(Field::prime(7), {"x^3 + y^3 - z^3"}, {"x", "y", "z"});
  CHECK(enumerate_homs(fermat, F7).size() == oracle::fermat_count(7, 3));

  gen::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const long ps[] = {2, 3, 5, 7};
    const long p = ps[gen::uniform(rng, 0, 3)];
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    std::vector<std::string> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = std::string(1, "xyz"[i]);
    Ring free = gen::poly_ring(Field::prime(p), {}, vars);
    std::vector<Poly> rels;
    const long nrel = gen::uniform(rng, 0, 2);
    for (long r = 0; r < nrel; ++r) rels.push_back(gen::random_element(free, rng).poly());
    Ring R = Ring::polynomial(Field::prime(p), vars, rels);
    Ring Fp = Ring::field(Field::prime(p));
    auto zs = oracle::zeros(rels, p, n);
    auto hs = enumerate_homs(R, Fp);
    REQUIRE(hs.size() == zs.size());
    // Same assignments, same order.
    for (std::size_t k = 0; k < hs.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) CHECK(hs[k].images()[i].to_string() == std::to_string(zs[k][i]));
  }
}

TEST_CASE("enumerate_homs into a non-finite ring fails") {
  try {
    enumerate_homs(qx(), Ring::field(Field::rationals()));
    FAIL("expected CodomainNotFinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CodomainNotFinite);
  }
}

TEST_CASE("normalize is idempotent and ring axioms hold") {
  gen::Rng rng(1);
  for (int f = 0; f < 4; ++f) {
    for (int inst = 0; inst < 3; ++inst) {
      Ring R = gen::random_ring(rng, static_cast<gen::Family>(f));
      for (int i = 0; i < 500; ++i) {
        Element a = gen::random_element(R, rng);
        if (R.kind() == RingKind::PolyQuotient) {
          CHECK(R.normalize(a.poly()) == a);
        } else {
          CHECK(R.normalize(a.integer()) == a);
        }
      }
      for (int i = 0; i < 60; ++i) {
        Element a = gen::random_element(R, rng), b = gen::random_element(R, rng), c = gen::random_element(R, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * R.one() == a);
        CHECK(a + R.zero() == a);
        CHECK((a - a).is_zero());
        CHECK(a + (-a) == R.zero());
      }
    }
  }
}

TEST_CASE("is_unit witnesses verify; zero is never a unit in a nonzero ring") {
  gen::Rng rng(2);
  for (int f = 0; f < 4; ++f) {
    for (int inst = 0; inst < 4; ++inst) {
      Ring R = gen::random_ring(rng, static_cast<gen::Family>(f));
      if (!R.is_zero_ring()) CHECK_FALSE(is_unit(R.zero()));
      for (int i = 0; i < 30; ++i) {
        Element a = gen::random_element(R, rng);
        if (auto b = is_unit(a)) CHECK((a * *b).is_one());
      }
    }
  }
  // Independent check over Z/n: units are exactly the residues coprime to n.
  for (long n = 2; n <= 40; ++n) {
    Ring R = Ring::residues(n);
    for (long a = 0; a < n; ++a) CHECK(is_unit(R.from_integer(a)).has_value() == (std::gcd(a, n) == 1));
  }
}

TEST_CASE("homs respect +, * and 1") {
  gen::Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    Ring R = gen::poly_ring(Field::rationals(), {}, {"x", "y"});
    Ring S = gen::random_ring(rng, gen::Family::RationalPoly);
    RingHom phi = RingHom::make(R, S, {gen::random_element(S, rng, 2), gen::random_element(S, rng, 2)});
    CHECK(phi.apply(R.one()).is_one());
    for (int i = 0; i < 10; ++i) {
      Element a = gen::random_element(R, rng, 2), b = gen::random_element(R, rng, 2);
      CHECK(phi.apply(a + b) == phi.apply(a) + phi.apply(b));
      CHECK(phi.apply(a * b) == phi.apply(a) * phi.apply(b));
    }
  }
}

TEST_CASE("monomial orders give the same quotient ring") {
  for (auto order : {MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GRevLex}) {
    Ring R = gen::poly_ring(Field::rationals(), {"x^2 - y", "y^2 - 1"}, {"x", "y"}, order);
    CHECK(el(R, "x^4").is_one());
    CHECK(el(R, "x^2*y").is_one());
  }
}

TEST_CASE("describe round-trips through the ring parser") {
  std::vector<Ring> rings = {Ring::integers(), Ring::residues(8), Ring::field(Field::rationals()),
                             gen::poly_ring(Field::prime(7), {"x*y + 4"}),
                             gen::poly_ring(Field::rationals(), {"x^2 - 3/2*y"}, {"x", "y"}, MonomialOrder::Lex)};
  for (const auto& R : rings) CHECK(dsl::ring_from_text(R.describe()) == R);
  CHECK(rings[3].describe() == "Fp(7)[x,y]/(x*y + 4)");
}

TEST_CASE("finite rings enumerate their elements") {
  CHECK(Ring::residues(6).elements().size() == 6);
  Ring R = gen::poly_ring(Field::prime(3), {"x^2", "y^2 - y"});
  CHECK(R.is_finite());
  CHECK(R.elements().size() == 81);
  CHECK_FALSE(gen::poly_ring(Field::prime(3), {"x*y"}).is_finite());
  CHECK(gen::poly_ring(Field::rationals(), {"1"}).is_zero_ring());
}
