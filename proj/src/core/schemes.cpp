#include "zkit/schemes.hpp"

#include "zkit/error.hpp"

namespace zkit {

CompactOpen compact_open(const ZarElt& u) { return CompactOpen{AffineScheme{u.ring()}, u}; }

bool compopen_eq(const CompactOpen& a, const CompactOpen& b) { return zar_eq(a.u, b.u); }

std::optional<SchemePoint> point_membership(const CompactOpen& open, const RingHom& phi) {
  auto cert = zar_eq_top(lattice_morphism(phi, open.u));
  if (!cert) return std::nullopt;
  return SchemePoint{open, phi, std::move(*cert)};
}

std::vector<SchemePoint> points_over(const CompactOpen& open, const Ring& values) {
  std::vector<SchemePoint> out;
  for (const auto& phi : enumerate_homs(open.ring(), values)) {
    if (auto pt = point_membership(open, phi)) out.push_back(std::move(*pt));
  }
  return out;
}

CompactOpen standard_open(const Element& f) { return compact_open(support_D(f)); }

SchemePoint prop23_forward(const LocalizedRing& ring, const RingHom& psi) {
  if (psi.domain() != ring.presentation()) {
    fail(ErrorKind::RingMismatch, "map out of " + psi.domain().describe() + ", expected " +
                                      ring.presentation().describe());
  }
  RingHom phi = hom_compose(psi, canonical_map(ring).as_hom());
  auto pt = point_membership(standard_open(ring.f()), phi);
  if (!pt) fail(ErrorKind::InvalidWitness, "image of f is not a unit under " + psi.describe());
  return std::move(*pt);
}

RingHom prop23_backward(const LocalizedRing& ring, const SchemePoint& point) {
  ring.presentation();  // UnsupportedBase for Z and Z/n
  if (point.phi.domain() != ring.base()) {
    fail(ErrorKind::RingMismatch, "point of Sp(" + point.phi.domain().describe() + "), expected Sp(" +
                                      ring.base().describe() + ")");
  }
  if (!zar_leq(point.open.u, support_D(ring.f()))) {
    fail(ErrorKind::InvalidWitness, "point of " + point.open.to_string() + " is not a point of D(" +
                                        ring.f().to_string() + ")");
  }
  const Element image = point.phi.apply(ring.f());
  const auto& cert = point.membership;
  std::optional<Element> w;
  if (cert.generators.size() == 1 && cert.generators[0] == image) {
    w = cert.cofactors[0];  // c * phi(f) == 1
  } else {
    w = is_unit(image);
  }
  if (!w) fail(ErrorKind::InvalidWitness, "phi(f) = " + image.to_string() + " is not a unit");
  return universal_property(ring, point.phi, *w).presentation_hom();
}

AffineCover affine_cover(const CompactOpen& open) {
  AffineCover cover{open, {}, false, std::nullopt};
  ZarElt join = ZarElt::bottom(open.ring());
  for (const auto& f : open.u.generators()) {
    CompactOpen member = standard_open(f);
    join = zar_join(join, member.u);
    cover.members.push_back(
        AffineCoverMember{member, f, LocalizedRing(open.ring(), f), zar_leq(member.u, open.u)});
  }
  cover.join_equal = zar_eq(join, open.u);
  cover.top_certificate = zar_eq_top(open.u);
  return cover;
}

CompactOpen compopen_lattice(LatticeOp op, const CompactOpen& a, const CompactOpen& b) {
  return compact_open(op == LatticeOp::Join ? zar_join(a.u, b.u) : zar_meet(a.u, b.u));
}

Element function_eval(const Element& r, const SchemePoint& point) { return point.phi.apply(r); }

namespace {

Element random_element(const Ring& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  if (s.kind() != RingKind::PolyQuotient) {
    return s.from_integer(coeff(rng) + (s.kind() == RingKind::Residue ? 3 : 0));
  }
  Element e = s.from_integer(coeff(rng));
  std::uniform_int_distribution<std::size_t> pick(0, s.nvars() ? s.nvars() - 1 : 0);
  for (int k = 0; k < 2 && s.nvars(); ++k) e = e + s.from_integer(coeff(rng)) * s.variable(pick(rng));
  return e;
}

}  // namespace

LocalityTrial locality_trial(const CompactOpen& open, std::mt19937_64& rng) {
  const Ring& R = open.ring();
  const auto& gens = open.u.generators();
  std::optional<RingHom> phi;
  switch (R.kind()) {
    case RingKind::PolyQuotient:
      if (!gens.empty() && rng() % 2 == 0) {
        // The canonical point of R[1/h] lies in the open whenever h generates it.
        LocalizedRing L(R, gens[rng() % gens.size()]);
        phi = canonical_map(L).as_hom();
      } else {
        phi = RingHom::identity(R);
      }
      break;
    case RingKind::Integer: {
      std::uniform_int_distribution<int> q(2, 30);
      phi = RingHom::make(R, Ring::residues(q(rng)), {});
      break;
    }
    case RingKind::Residue: phi = RingHom::identity(R); break;
  }
  const Ring& S = phi->codomain();
  Element s = random_element(S, rng);
  UnimodularCover cover = make_cover({s, S.one() - s});

  LocalityTrial trial;
  trial.values = S.describe();
  trial.map = phi->describe();
  for (const auto& e : cover.elements) trial.cover.push_back(e.to_string());

  // Local points, with deliberately non-reduced representatives.
  std::vector<FractionHom> homs;
  trial.locally_member = true;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    LocalizedRing Li = cover.localization(i);
    std::vector<Fraction> images;
    for (const auto& img : phi->images()) {
      const unsigned pad = static_cast<unsigned>(rng() % 3);
      images.push_back(Fraction(Li, img * Li.f().pow(pad), pad));
    }
    FractionHom h = FractionHom::make(R, Li, std::move(images));
    std::vector<Fraction> local_gens;
    for (const auto& g : gens) local_gens.push_back(h.apply(g));
    if (!local_eq_top(LocalZarElt(Li, std::move(local_gens)))) trial.locally_member = false;
    homs.push_back(std::move(h));
  }
  auto checked = check_compatibility(cover, R, homs);
  if (!checked.family) {
    trial.passed = false;
    return trial;
  }
  RingHom glued = glue_hom(*checked.family);
  trial.glued_member = point_membership(open, glued).has_value();
  trial.glued_matches = glued == *phi;
  trial.passed = trial.glued_matches && (!trial.locally_member || trial.glued_member);
  return trial;
}

QcqsReport qcqs_certificate(const CompactOpen& open, std::mt19937_64& rng, std::size_t samples) {
  QcqsReport report{affine_cover(open), {}, false, false};
  report.degenerate = zar_leq(open.u, ZarElt::bottom(open.ring()));
  bool ok = report.cover.join_equal;
  for (const auto& m : report.cover.members) ok = ok && m.below;
  for (std::size_t k = 0; k < samples; ++k) {
    report.samples.push_back(locality_trial(open, rng));
    ok = ok && report.samples.back().passed;
  }
  report.passed = ok;
  return report;
}

}  // namespace zkit
