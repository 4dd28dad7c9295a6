#include <doctest.h>

#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "zkit/error.hpp"
#include "zkit/ideal.hpp"
#include "zkit/limits.hpp"

using namespace zkit;
using gen::el;

namespace {

Ring qx(const std::vector<std::string>& rels = {}) { return gen::poly_ring(Field::rationals(), rels, {"x"}); }

}  // namespace

TEST_CASE("Gröbner basis of <x^2 - y, x^3>") {
  const std::size_t before = groebner_self_checks_run();
  Ring R = gen::poly_ring(Field::rationals(), {});
  FinGenIdeal I(R, {el(R, "x^2 - y"), el(R, "x^3")});
  const auto& gb = I.groebner();
  const PolyRing& P = R.free_ring();
  bool has_y2 = false;
  for (const auto& g : gb.basis) has_y2 = has_y2 || g == el(R, "y^2").poly();
  CHECK(has_y2);
  CHECK(satisfies_buchberger_criterion(P, gb.basis));
  CHECK(groebner_self_checks_run() > before);
  // Cofactors reproduce every basis element.
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    Poly s = P.zero();
    for (std::size_t i = 0; i < I.generators().size(); ++i)
      s = P.add(s, P.mul(gb.cofactors[k][i], I.generators()[i].poly()));
    CHECK(s == gb.basis[k]);
  }
  // x*y and y^2 lie in I; y does not.
  CHECK(ideal_member(el(R, "x*y"), I).member);
  CHECK_FALSE(ideal_member(el(R, "y"), I).member);
}

TEST_CASE("integer surrogates and membership examples") {
  Ring Z = Ring::integers();
  FinGenIdeal I(Z, {Z.from_integer(4), Z.from_integer(6)});
  CHECK(I.groebner().gcd == 2);
  auto m = ideal_member(Z.from_integer(10), I);
  REQUIRE(m.member);
  CHECK(m.cofactors[0] * Z.from_integer(4) + m.cofactors[1] * Z.from_integer(6) == Z.from_integer(10));
  CHECK_FALSE(ideal_member(Z.from_integer(3), I).member);

  Ring R = qx();
  CHECK_FALSE(ideal_member(el(R, "x"), FinGenIdeal(R, {el(R, "x^2")})).member);
  CHECK(ideal_member(el(R, "x^3 - x^2"), FinGenIdeal(R, {el(R, "x^2")})).member);
}

TEST_CASE("radical membership examples") {
  Ring R = qx();
  CHECK(radical_member(el(R, "x"), FinGenIdeal(R, {el(R, "x^2")})));
  auto w = radical_witness(el(R, "x"), FinGenIdeal(R, {el(R, "x^2")}));
  REQUIRE(w);
  CHECK(w->exponent == 2);

  Ring Z = Ring::integers();
  FinGenIdeal twelve(Z, {Z.from_integer(12)});
  CHECK_FALSE(radical_member(Z.from_integer(2), twelve));
  CHECK(radical_member(Z.from_integer(6), twelve));
  auto w6 = radical_witness(Z.from_integer(6), twelve);
  REQUIRE(w6);
  // 6^2 = 36 = 3 * 12
  CHECK(w6->exponent == 2);
  CHECK(w6->cofactors[0].integer() == 3);
}

TEST_CASE("saturation examples") {
  Ring Z8 = Ring::residues(8);
  auto s = saturation_member(Z8.one(), Z8.from_integer(2));
  CHECK(s.member);
  CHECK(s.exponent == 3);

  Ring R = gen::poly_ring(Field::rationals(), {"x*y"});
  auto t = saturation_member(el(R, "x"), el(R, "y"));
  CHECK(t.member);
  CHECK(t.exponent == 1);
  CHECK_FALSE(saturation_member(el(R, "x + 1"), el(R, "y")).member);
  CHECK(saturation_member(R.zero(), el(R, "y")).exponent == 0);

  Ring Z = Ring::integers();
  CHECK_FALSE(saturation_member(Z.from_integer(5), Z.from_integer(2)).member);
  CHECK(saturation_member(Z.from_integer(5), Z.zero()).member);
}

TEST_CASE("saturation agrees with direct powering over Z/n") {
  for (long n = 2; n <= 40; ++n) {
    Ring R = Ring::residues(n);
    for (long a = 0; a < n; ++a) {
      for (long f = 0; f < n; ++f) {
        // Oracle: least k <= 64 with a f^k = 0 mod n.
        std::optional<unsigned> least;
        long v = a % n;
        for (unsigned k = 0; k <= 64; ++k) {
          if (v == 0) {
            least = k;
            break;
          }
          v = v * f % n;
        }
        auto s = saturation_member(R.from_integer(a), R.from_integer(f));
        CHECK(s.member == least.has_value());
        if (least) CHECK(s.exponent == *least);
      }
    }
  }
}

TEST_CASE("unimodular certificates") {
  Ring Z = Ring::integers();
  auto c = unimodular_certificate({Z.from_integer(4), Z.from_integer(9)});
  REQUIRE(c);
  CHECK(c->cofactors[0].integer() == -2);
  CHECK(c->cofactors[1].integer() == 1);
  CHECK(c->verify());

  Ring R = qx();
  CHECK_FALSE(unimodular_certificate({el(R, "x"), el(R, "x^2")}));
  auto d = unimodular_certificate({el(R, "x"), el(R, "1 - x")});
  REQUIRE(d);
  CHECK(d->verify());

  BezoutCertificate bad{{Z.from_integer(2), Z.from_integer(3)}, {Z.from_integer(1), Z.from_integer(1)}};
  CHECK_FALSE(bad.verify());
}

TEST_CASE("power certificates") {
  Ring Z = Ring::integers();
  auto c = unimodular_certificate({Z.from_integer(2), Z.from_integer(3)});
  REQUIRE(c);
  auto same = power_certificate(*c, 1);
  CHECK(same.cofactors == c->cofactors);
  auto sq = power_certificate(*c, 2);
  CHECK(sq.generators[0].integer() == 4);
  CHECK(sq.generators[1].integer() == 9);
  CHECK(sq.cofactors[0] * Z.from_integer(4) + sq.cofactors[1] * Z.from_integer(9) == Z.one());

  Ring R = qx();
  auto d = unimodular_certificate({el(R, "x"), el(R, "1 - x")});
  auto d2 = power_certificate(*d, 2);
  CHECK(d2.cofactors[0] * el(R, "x^2") + d2.cofactors[1] * el(R, "(1 - x)^2") == R.one());

  gen::Rng rng(21);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 60; ++t) {
    Ring S = gen::random_ring(rng, gen::random_family(rng));
    std::vector<Element> v = {gen::random_element(S, rng, 2), gen::random_element(S, rng, 2)};
    v.push_back(S.one() - v[0] - v[1] * gen::random_element(S, rng, 1));
    auto cert = unimodular_certificate(v);
    if (!cert) continue;
    ++checked;
    for (unsigned M = 1; M <= 3; ++M) {
      auto p = power_certificate(*cert, M);
      Element s = S.zero();
      for (std::size_t i = 0; i < v.size(); ++i) s = s + p.cofactors[i] * v[i].pow(M);
      CHECK(s.is_one());
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("ideal membership agrees with brute force over Z") {
  gen::Rng rng(5);
  Ring Z = Ring::integers();
  for (int t = 0; t < 500; ++t) {
    const long k = gen::uniform(rng, 1, 3);
    std::vector<long> g;
    std::vector<Element> gens;
    for (long i = 0; i < k; ++i) {
      g.push_back(gen::uniform(rng, -20, 20));
      gens.push_back(Z.from_integer(g.back()));
    }
    const long a = gen::uniform(rng, -60, 60);
    auto m = ideal_member(Z.from_integer(a), FinGenIdeal(Z, gens));
    CHECK(m.member == oracle::z_member_brute(a, g));
    if (m.member) {
      Element s = Z.zero();
      for (std::size_t i = 0; i < gens.size(); ++i) s = s + m.cofactors[i] * gens[i];
      CHECK(s.integer() == a);
    }
    CHECK(radical_member(Z.from_integer(a), FinGenIdeal(Z, gens)) ==
          oracle::z_radical_member(a, std::labs(oracle::z_gcd(g))));
  }
}

TEST_CASE("ideal membership agrees with linear algebra over Q[x]") {
  gen::Rng rng(6);
  Ring R = qx();
  int members = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Element> gens = {gen::random_element(R, rng), gen::random_element(R, rng)};
    Element a = gen::random_element(R, rng);
    // Bias half of the cases towards members.
    if (t % 2 == 0) a = gen::random_element(R, rng, 1) * gens[0] + gen::random_element(R, rng, 1) * gens[1];
    std::vector<oracle::Dense> dg;
    for (const auto& g : gens) dg.push_back(oracle::dense(g.poly()));
    const bool expect = oracle::qx_member(oracle::dense(a.poly()), dg);
    auto m = ideal_member(a, FinGenIdeal(R, gens));
    CHECK(m.member == expect);
    if (m.member) {
      ++members;
      CHECK(m.cofactors[0] * gens[0] + m.cofactors[1] * gens[1] == a);
    }
  }
  CHECK(members >= 40);
}

TEST_CASE("radical membership properties") {
  gen::Rng rng(7);
  for (int t = 0; t < 120; ++t) {
    Ring R = gen::random_ring(rng, gen::random_family(rng));
    std::vector<Element> gens = {gen::random_element(R, rng, 2), gen::random_element(R, rng, 2)};
    FinGenIdeal I(R, gens);
    Element a = gen::random_element(R, rng, 2);
    if (ideal_member(a, I).member) CHECK(radical_member(a, I));
    const bool r1 = radical_member(a, I);
    CHECK(radical_member(a.pow(2), I) == r1);
    CHECK(radical_member(a.pow(3), I) == r1);
    if (auto w = radical_witness(a, I)) {
      Element s = R.zero();
      for (std::size_t i = 0; i < gens.size(); ++i) s = s + w->cofactors[i] * gens[i];
      CHECK(s == a.pow(w->exponent));
    }
  }
}

TEST_CASE("resource limits are enforced") {
  Limits l;
  l.max_exponent = 2;
  ScopedLimits scoped(l);
  Ring R = qx({"x^3"});
  // 1 * x^3 = 0 needs exponent 3.
  try {
    saturation_member(R.one(), R.variable("x"));
    FAIL("expected ResourceExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceExceeded);
  }
}
