#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zkit/hom.hpp"
#include "zkit/ideal.hpp"
#include "zkit/ring.hpp"

namespace zkit {

class Fraction;

/// R[1/f]. Fractions are the primary representation; for polynomial
/// quotients the presentation R[y]/(relations, y*f - 1) is also available.
class LocalizedRing {
 public:
  /// Throws RingMismatch when f does not lie in base.
  LocalizedRing(Ring base, Element f);

  const Ring& base() const;
  const Element& f() const;
  bool has_presentation() const;
  /// Throws UnsupportedBase for Z and Z/n.
  const Ring& presentation() const;
  /// Name of the adjoined inverse in the presentation.
  const std::string& inverse_name() const;

  Fraction fraction(const Element& numerator, unsigned exponent) const;
  Fraction canonical(const Element& r) const;  // r/1
  Fraction inverse_of_f() const;               // 1/f

  /// "Z[1/2]", "Q[x][1/x]".
  std::string describe() const;

  friend bool operator==(const LocalizedRing& a, const LocalizedRing& b);
  friend bool operator!=(const LocalizedRing& a, const LocalizedRing& b) { return !(a == b); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// First name from a fixed candidate list not already in use.
std::string fresh_variable_name(const std::vector<std::string>& taken);

/// r / f^n in R[1/f].
class Fraction {
 public:
  Fraction(LocalizedRing ring, Element numerator, unsigned exponent);

  const LocalizedRing& ring() const { return ring_; }
  const Element& numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }

  Fraction operator+(const Fraction& other) const;
  Fraction operator-(const Fraction& other) const;
  Fraction operator*(const Fraction& other) const;
  Fraction operator-() const;
  Fraction pow(unsigned k) const;

  std::string to_string() const;

  /// Same representative (not the semantic equality; see frac_eq).
  bool identical(const Fraction& other) const {
    return exponent_ == other.exponent_ && numerator_ == other.numerator_;
  }

 private:
  LocalizedRing ring_;
  Element numerator_;
  unsigned exponent_;
};

/// Least k with r f^(k+m) == r' f^(k+n), or nullopt when the fractions differ.
/// Throws BaseMismatch.
std::optional<unsigned> frac_eq_witness(const Fraction& a, const Fraction& b);
bool frac_eq(const Fraction& a, const Fraction& b);

Fraction frac_arith(ArithOp op, const Fraction& a, const Fraction& b);

/// Lowers the exponent while the numerator is divisible by f.
Fraction simplify(const Fraction& a);

/// r/f^n -> r*y^n in the presentation. Throws UnsupportedBase.
Element to_presentation(const Fraction& a);
Fraction from_presentation(const LocalizedRing& ring, const Element& e);

/// The map r -> r/1.
class CanonicalMap {
 public:
  explicit CanonicalMap(LocalizedRing target) : target_(std::move(target)) {}
  const LocalizedRing& target() const { return target_; }
  Fraction operator()(const Element& r) const { return target_.canonical(r); }
  /// As a ring map into the presentation. Throws UnsupportedBase.
  RingHom as_hom() const;

 private:
  LocalizedRing target_;
};

CanonicalMap canonical_map(const LocalizedRing& ring);

/// psi : R[1/f] -> A with psi(r/f^n) = phi(r) w^n.
class InducedMap {
 public:
  InducedMap(LocalizedRing source, RingHom phi, Element witness)
      : source_(std::move(source)), phi_(std::move(phi)), witness_(std::move(witness)) {}
  const LocalizedRing& source() const { return source_; }
  const RingHom& phi() const { return phi_; }
  const Element& witness() const { return witness_; }
  Element apply(const Fraction& x) const;
  /// The same map out of the presentation. Throws UnsupportedBase.
  RingHom presentation_hom() const;

 private:
  LocalizedRing source_;
  RingHom phi_;
  Element witness_;
};

/// Throws InvalidWitness unless phi(f) * w == 1, RingMismatch on shape errors.
InducedMap universal_property(const LocalizedRing& ring, const RingHom& phi, const Element& w);

/// chi_left : R[1/fi] -> R[1/(fi fj)], chi_right : R[1/fj] -> R[1/(fi fj)].
class DoubleLocalization {
 public:
  DoubleLocalization(const Element& fi, const Element& fj);
  const LocalizedRing& left() const { return left_; }
  const LocalizedRing& right() const { return right_; }
  const LocalizedRing& target() const { return target_; }
  Fraction chi_left(const Fraction& x) const;
  Fraction chi_right(const Fraction& x) const;

 private:
  LocalizedRing left_, right_, target_;
};

DoubleLocalization double_localization_maps(const Element& fi, const Element& fj);

/// Inverse of a fraction when it is a unit of R[1/f].
std::optional<Fraction> is_unit(const Fraction& a);

/// A ring map A -> R[1/f] given by fraction images of A's generators.
class FractionHom {
 public:
  /// Verifies coefficient compatibility and that every relation of A maps
  /// to a fraction equal to 0. Throws NotWellDefined or RingMismatch.
  static FractionHom make(Ring domain, LocalizedRing target, std::vector<Fraction> images);

  const Ring& domain() const { return domain_; }
  const LocalizedRing& target() const { return target_; }
  const std::vector<Fraction>& images() const { return images_; }
  Fraction apply(const Element& a) const;
  Fraction apply_poly(const Poly& p) const;
  std::string describe() const;

 private:
  FractionHom(Ring domain, LocalizedRing target, std::vector<Fraction> images)
      : domain_(std::move(domain)), target_(std::move(target)), images_(std::move(images)) {}
  Ring domain_;
  LocalizedRing target_;
  std::vector<Fraction> images_;
  bool zero_target_ = false;
};

/// (-/1) after phi.
FractionHom compose_canonical(const LocalizedRing& target, const RingHom& phi);

}  // namespace zkit
