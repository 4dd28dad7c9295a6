#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "zkit/error.hpp"
#include "zkit/schemes.hpp"

using namespace zkit;
using gen::el;

namespace {

using Key = std::vector<std::string>;

std::set<Key> keys(const std::vector<SchemePoint>& pts) {
  std::set<Key> out;
  for (const auto& p : pts) {
    Key k;
    for (const auto& e : p.phi.images()) k.push_back(e.to_string());
    out.insert(k);
  }
  return out;
}

// Oracle: zeros of the relations at which some generator of u is nonzero.
std::set<Key> oracle_points(const Ring& R, const ZarElt& u, long p) {
  std::set<Key> out;
  for (const auto& pt : oracle::zeros(R.relations(), p, R.nvars())) {
    bool inside = false;
    for (const auto& g : u.generators()) inside = inside || oracle::eval_mod(g.poly(), pt, p) != 0;
    if (!inside) continue;
    Key k;
    for (long v : pt) k.push_back(std::to_string(v));
    out.insert(k);
  }
  return out;
}

ZarElt random_latt(const Ring& R, gen::Rng& rng) {
  std::vector<Element> gens;
  const long n = gen::uniform(rng, 0, 2);
  for (long i = 0; i < n; ++i) gens.push_back(gen::random_element(R, rng, 2));
  return ZarElt(R, gens);
}

}  // namespace

TEST_CASE("point membership examples") {
  Ring R = gen::poly_ring(Field::prime(5), {}, {"x"});
  Ring F5 = Ring::field(Field::prime(5));
  RingHom phi = RingHom::make(R, F5, {F5.from_integer(2)});
  auto pt = point_membership(standard_open(el(R, "x")), phi);
  REQUIRE(pt);
  CHECK(pt->membership.verify());
  CHECK(function_eval(el(R, "x^2 + 1"), *pt).is_zero());
  CHECK_FALSE(point_membership(standard_open(el(R, "x")), RingHom::make(R, F5, {F5.zero()})));

  auto pts = points_over(standard_open(el(R, "x")), F5);
  REQUIRE(pts.size() == 4);
  for (long i = 0; i < 4; ++i) CHECK(pts[i].phi.images()[0].to_string() == std::to_string(i + 1));
}

TEST_CASE("Fermat cubic points over F_7") {
  Ring R = gen::poly_ring(Field::prime(7), {"x^3 + y^3 - z^3"}, {"x", "y", "z"});
  auto pts = points_over(compact_open(ZarElt::top(R)), Ring::field(Field::prime(7)));
  CHECK(pts.size() == oracle::fermat_count(7, 3));
  CHECK(keys(pts) == oracle_points(R, ZarElt::top(R), 7));
}

TEST_CASE("points over F_p match the evaluation oracle") {
  gen::Rng rng(70);
  const long ps[] = {2, 3, 5, 7};
  for (int t = 0; t < 40; ++t) {
    const long p = ps[t % 4];
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    std::vector<std::string> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = std::string(1, "xyz"[i]);
    Ring free = gen::poly_ring(Field::prime(p), {}, vars);
    std::vector<Poly> rels;
    for (long r = gen::uniform(rng, 0, 2); r > 0; --r) rels.push_back(gen::random_element(free, rng).poly());
    Ring R = Ring::polynomial(Field::prime(p), vars, rels);
    ZarElt u = random_latt(R, rng);
    Ring Fp = Ring::field(Field::prime(p));
    CHECK(keys(points_over(compact_open(u), Fp)) == oracle_points(R, u, p));
  }
}

TEST_CASE("point sets respect joins, meets and the order over fields") {
  gen::Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    const long p = t % 2 ? 5 : 3;
    Ring R = gen::poly_ring(Field::prime(p), {}, {"x", "y"});
    Ring Fp = Ring::field(Field::prime(p));
    ZarElt v = random_latt(R, rng), w = random_latt(R, rng);
    auto pv = keys(points_over(compact_open(v), Fp)), pw = keys(points_over(compact_open(w), Fp));
    std::set<Key> uni = pv, inter;
    uni.insert(pw.begin(), pw.end());
    for (const auto& k : pv)
      if (pw.count(k)) inter.insert(k);
    CHECK(keys(points_over(compopen_lattice(LatticeOp::Join, compact_open(v), compact_open(w)), Fp)) == uni);
    CHECK(keys(points_over(compopen_lattice(LatticeOp::Meet, compact_open(v), compact_open(w)), Fp)) == inter);
    if (zar_leq(v, w)) {
      for (const auto& k : pv) CHECK(pw.count(k) == 1);
    }
  }
  Ring R = gen::poly_ring(Field::prime(5), {}, {"x"});
  Ring F5 = Ring::field(Field::prime(5));
  CompactOpen a = standard_open(el(R, "x")), b = standard_open(el(R, "x - 1"));
  CHECK(points_over(compopen_lattice(LatticeOp::Join, a, b), F5).size() == 5);
  CHECK(points_over(compopen_lattice(LatticeOp::Meet, a, b), F5).size() == 3);
}

TEST_CASE("standard opens are affine: points of D(f) match points of the chart") {
  Ring R = gen::poly_ring(Field::prime(5), {}, {"x"});
  Ring F5 = Ring::field(Field::prime(5));
  LocalizedRing L(R, el(R, "x"));
  auto open_pts = points_over(standard_open(el(R, "x")), F5);
  auto chart_homs = enumerate_homs(L.presentation(), F5);
  CHECK(open_pts.size() == 4);
  CHECK(chart_homs.size() == 4);
  for (const auto& pt : open_pts) CHECK(prop23_forward(L, prop23_backward(L, pt)).phi == pt.phi);
  for (const auto& psi : chart_homs) CHECK(prop23_backward(L, prop23_forward(L, psi)) == psi);
}

TEST_CASE("chart round trip over F_7 with a random point") {
  gen::Rng rng(72);
  Ring R = gen::poly_ring(Field::prime(7), {"y^2 - x^3"}, {"x", "y"});
  Ring F7 = Ring::field(Field::prime(7));
  Element f = el(R, "x + y");
  LocalizedRing L(R, f);
  auto pts = points_over(standard_open(f), F7);
  REQUIRE(!pts.empty());
  const auto& pt = pts[gen::uniform(rng, 0, pts.size() - 1)];
  CHECK(prop23_forward(L, prop23_backward(L, pt)).phi == pt.phi);
  CHECK(enumerate_homs(L.presentation(), F7).size() == pts.size());
}

TEST_CASE("the chart map rejects points outside D(f)") {
  Ring R = gen::poly_ring(Field::prime(5), {}, {"x"});
  Ring F5 = Ring::field(Field::prime(5));
  LocalizedRing L(R, el(R, "x"));
  auto pt = point_membership(compact_open(ZarElt::top(R)), RingHom::make(R, F5, {F5.zero()}));
  REQUIRE(pt);
  CHECK_THROWS_AS(prop23_backward(L, *pt), Error);
}

TEST_CASE("affine covers") {
  Ring Z = Ring::integers();
  AffineCover c = affine_cover(compact_open(ZarElt(Z, {Z.from_integer(4), Z.from_integer(9)})));
  REQUIRE(c.members.size() == 2);
  CHECK(c.members[0].open.to_string() == "D(4)");
  CHECK(c.members[1].open.to_string() == "D(9)");
  CHECK(c.join_equal);
  REQUIRE(c.top_certificate);
  CHECK(c.top_certificate->verify());

  CHECK(affine_cover(compact_open(ZarElt::bottom(Z))).members.empty());
  CHECK(affine_cover(compact_open(ZarElt::bottom(Z))).join_equal);

  gen::Rng rng(73);
  for (int t = 0; t < 60; ++t) {
    Ring R = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    ZarElt u = random_latt(R, rng);
    AffineCover cov = affine_cover(compact_open(u));
    CHECK(cov.join_equal);
    ZarElt join = ZarElt::bottom(R);
    for (const auto& m : cov.members) {
      CHECK(m.below);
      join = zar_join(join, m.open.u);
    }
    CHECK(zar_eq(join, u));
  }
}

TEST_CASE("locality sampling") {
  Ring R = gen::poly_ring(Field::rationals(), {}, {"x"});
  gen::Rng rng(74);
  QcqsReport rep = qcqs_certificate(compact_open(ZarElt(R, {el(R, "x"), el(R, "x - 1")})), rng);
  CHECK(rep.cover.members.size() == 2);
  CHECK(rep.passed);
  CHECK_FALSE(rep.degenerate);
  for (const auto& s : rep.samples) {
    CHECK(s.passed);
    if (s.locally_member) CHECK(s.glued_member);
  }
  for (int t = 0; t < 20; ++t) {
    Ring S = gen::random_ring(rng, static_cast<gen::Family>(t % 4));
    LocalityTrial trial = locality_trial(compact_open(random_latt(S, rng)), rng);
    CHECK(trial.passed);
  }
}
