#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zkit/glue.hpp"
#include "zkit/hom.hpp"
#include "zkit/localization.hpp"
#include "zkit/zariski.hpp"

namespace zkit {

/// Sp(R); its B-points are the ring maps R -> B.
struct AffineScheme {
  Ring ring;
};

/// A compact open of Sp(R), identified with an element of the Zariski lattice.
struct CompactOpen {
  AffineScheme scheme;
  ZarElt u;

  const Ring& ring() const { return scheme.ring; }
  std::string to_string() const { return u.to_string(); }
};

CompactOpen compact_open(const ZarElt& u);
bool compopen_eq(const CompactOpen& a, const CompactOpen& b);

struct SchemePoint {
  CompactOpen open;
  RingHom phi;
  /// Certificate that the image of the open under phi is the top element.
  BezoutCertificate membership;

  const Ring& value_ring() const { return phi.codomain(); }
};

std::optional<SchemePoint> point_membership(const CompactOpen& open, const RingHom& phi);
/// Points with values in a finite ring, in enumeration order.
std::vector<SchemePoint> points_over(const CompactOpen& open, const Ring& values);

CompactOpen standard_open(const Element& f);

/// Precompose a point of Sp(R[1/f]) with r -> r/1.
SchemePoint prop23_forward(const LocalizedRing& ring, const RingHom& psi);
/// A point of D(f) induces a map out of the presentation of R[1/f].
RingHom prop23_backward(const LocalizedRing& ring, const SchemePoint& point);

struct AffineCoverMember {
  CompactOpen open;  // D(f_i)
  Element f;
  LocalizedRing chart;  // R[1/f_i]
  bool below;          // D(f_i) <= u
};

struct AffineCover {
  CompactOpen open;
  std::vector<AffineCoverMember> members;
  bool join_equal = false;
  std::optional<BezoutCertificate> top_certificate;
};

AffineCover affine_cover(const CompactOpen& open);

enum class LatticeOp { Join, Meet };
CompactOpen compopen_lattice(LatticeOp op, const CompactOpen& a, const CompactOpen& b);

Element function_eval(const Element& r, const SchemePoint& point);

/// One execution of the locality property: a compatible family of points
/// over a cover whose members all lie in the open glues to a point of the open.
struct LocalityTrial {
  std::string values;                // the ring S
  std::string map;                   // the global map R -> S
  std::vector<std::string> cover;    // cover of S
  bool locally_member = false;
  bool glued_member = false;
  bool glued_matches = false;
  bool passed = false;
};

LocalityTrial locality_trial(const CompactOpen& open, std::mt19937_64& rng);

struct QcqsReport {
  AffineCover cover;
  std::vector<LocalityTrial> samples;
  bool degenerate = false;  // the open is empty
  bool passed = false;
};

QcqsReport qcqs_certificate(const CompactOpen& open, std::mt19937_64& rng, std::size_t samples = 4);

}  // namespace zkit
