#include "zkit/localization.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "zkit/error.hpp"

namespace zkit {

namespace {

bool needs_parens(const std::string& s) {
  if (s.empty()) return false;
  if (s[0] == '-') return true;
  return s.find_first_of(" */^") != std::string::npos;
}

bool has_sum(const std::string& s) { return s.find_first_of(" /") != std::string::npos; }

void require_same(const LocalizedRing& a, const LocalizedRing& b) {
  if (a != b) {
    fail(ErrorKind::BaseMismatch, "fractions of " + a.describe() + " and " + b.describe());
  }
}

}  // namespace

struct LocalizedRing::Impl {
  Ring base;
  Element f;
  std::optional<Ring> presentation;
  std::string inverse_name;
};

std::string fresh_variable_name(const std::vector<std::string>& taken) {
  auto free = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) == taken.end();
  };
  for (const char* c : {"y", "w", "v", "u", "s"}) {
    if (free(c)) return c;
  }
  for (unsigned i = 1;; ++i) {
    std::string s = "y" + std::to_string(i);
    if (free(s)) return s;
  }
}

LocalizedRing::LocalizedRing(Ring base, Element f) {
  if (f.ring() != base) {
    fail(ErrorKind::RingMismatch, "denominator " + f.to_string() + " is not in " + base.describe());
  }
  auto impl = std::make_shared<Impl>(Impl{base, f, std::nullopt, {}});
  if (base.kind() == RingKind::PolyQuotient) {
    std::vector<std::string> vars = base.variables();
    impl->inverse_name = fresh_variable_name(vars);
    vars.push_back(impl->inverse_name);
    const std::size_t n = vars.size();
    PolyRing ext(base.base_field(), n, base.order());
    std::vector<Poly> relations;
    for (const auto& r : base.relations()) relations.push_back(base.free_ring().extend(r, n));
    Exponents y(n, 0);
    y.back() = 1;
    Poly yf = ext.mul_term(base.free_ring().extend(f.poly(), n), y, 1);
    relations.push_back(ext.sub(yf, ext.one()));
    impl->presentation = Ring::polynomial(base.base_field(), vars, relations, base.order());
  }
  impl_ = std::move(impl);
}

const Ring& LocalizedRing::base() const { return impl_->base; }
const Element& LocalizedRing::f() const { return impl_->f; }
bool LocalizedRing::has_presentation() const { return impl_->presentation.has_value(); }

const Ring& LocalizedRing::presentation() const {
  if (!impl_->presentation) {
    fail(ErrorKind::UnsupportedBase, describe() + " has no polynomial presentation");
  }
  return *impl_->presentation;
}

const std::string& LocalizedRing::inverse_name() const { return impl_->inverse_name; }

Fraction LocalizedRing::fraction(const Element& numerator, unsigned exponent) const {
  return Fraction(*this, numerator, exponent);
}

Fraction LocalizedRing::canonical(const Element& r) const { return fraction(r, 0); }
Fraction LocalizedRing::inverse_of_f() const { return fraction(base().one(), 1); }

std::string LocalizedRing::describe() const {
  std::string f = impl_->f.to_string();
  if (needs_parens(f)) f = "(" + f + ")";
  return impl_->base.describe() + "[1/" + f + "]";
}

bool operator==(const LocalizedRing& a, const LocalizedRing& b) {
  return a.impl_ == b.impl_ || (a.base() == b.base() && a.f() == b.f());
}

Fraction::Fraction(LocalizedRing ring, Element numerator, unsigned exponent)
    : ring_(std::move(ring)), numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_.ring() != ring_.base()) {
    fail(ErrorKind::RingMismatch,
         "numerator " + numerator_.to_string() + " is not in " + ring_.base().describe());
  }
}

Fraction Fraction::operator+(const Fraction& other) const {
  return frac_arith(ArithOp::Add, *this, other);
}
Fraction Fraction::operator-(const Fraction& other) const {
  return frac_arith(ArithOp::Sub, *this, other);
}
Fraction Fraction::operator*(const Fraction& other) const {
  return frac_arith(ArithOp::Mul, *this, other);
}
Fraction Fraction::operator-() const { return frac_arith(ArithOp::Neg, *this, *this); }

Fraction Fraction::pow(unsigned k) const {
  return Fraction(ring_, numerator_.pow(k), exponent_ * k);
}

std::string Fraction::to_string() const {
  std::string num = numerator_.to_string();
  if (has_sum(num)) num = "(" + num + ")";
  if (exponent_ == 0) return num + "/1";
  std::string den = ring_.f().to_string();
  if (needs_parens(den)) den = "(" + den + ")";
  if (exponent_ == 1) return num + "/" + den;
  return num + "/" + den + "^" + std::to_string(exponent_);
}

std::optional<unsigned> frac_eq_witness(const Fraction& a, const Fraction& b) {
  require_same(a.ring(), b.ring());
  const Element& f = a.ring().f();
  Element diff = a.numerator() * f.pow(b.exponent()) - b.numerator() * f.pow(a.exponent());
  Saturation s = saturation_member(diff, f);
  if (!s.member) return std::nullopt;
  return s.exponent;
}

bool frac_eq(const Fraction& a, const Fraction& b) { return frac_eq_witness(a, b).has_value(); }

Fraction frac_arith(ArithOp op, const Fraction& a, const Fraction& b) {
  require_same(a.ring(), b.ring());
  const Element& f = a.ring().f();
  switch (op) {
    case ArithOp::Neg: return Fraction(a.ring(), -a.numerator(), a.exponent());
    case ArithOp::Mul:
      return Fraction(a.ring(), a.numerator() * b.numerator(), a.exponent() + b.exponent());
    case ArithOp::Add:
    case ArithOp::Sub: break;
  }
  // Common denominator f^max(n, m).
  const unsigned n = std::max(a.exponent(), b.exponent());
  Element ra = a.numerator() * f.pow(n - a.exponent());
  Element rb = b.numerator() * f.pow(n - b.exponent());
  return Fraction(a.ring(), op == ArithOp::Add ? ra + rb : ra - rb, n);
}

Fraction simplify(const Fraction& a) {
  if (a.numerator().is_zero()) return Fraction(a.ring(), a.numerator(), 0);
  FinGenIdeal fi(a.ring().base(), {a.ring().f()});
  Element r = a.numerator();
  unsigned n = a.exponent();
  while (n > 0) {
    Membership m = ideal_member(r, fi);
    if (!m.member) break;
    r = m.cofactors[0];
    --n;
  }
  return Fraction(a.ring(), r, n);
}

Element to_presentation(const Fraction& a) {
  const Ring& p = a.ring().presentation();
  const Ring& base = a.ring().base();
  const std::size_t n = p.nvars();
  Poly lifted = base.free_ring().extend(a.numerator().poly(), n);
  Exponents y(n, 0);
  y.back() = a.exponent();
  return p.normalize(p.free_ring().mul_term(lifted, y, 1));
}

Fraction from_presentation(const LocalizedRing& ring, const Element& e) {
  const Ring& p = ring.presentation();
  if (e.ring() != p) {
    fail(ErrorKind::RingMismatch, e.to_string() + " is not in " + p.describe());
  }
  const Ring& base = ring.base();
  const std::size_t nb = base.nvars();
  std::map<unsigned, std::vector<Term>> by_degree;
  for (const auto& t : e.poly().terms) {
    Exponents x(t.exponents.begin(), t.exponents.begin() + nb);
    by_degree[t.exponents.back()].push_back(Term{std::move(x), t.coeff});
  }
  if (by_degree.empty()) return ring.canonical(base.zero());
  const unsigned top = by_degree.rbegin()->first;
  Element numerator = base.zero();
  for (auto& [d, terms] : by_degree) {
    Element c = base.normalize(base.free_ring().canonicalize(std::move(terms)));
    numerator = numerator + c * ring.f().pow(top - d);
  }
  return Fraction(ring, numerator, top);
}

RingHom CanonicalMap::as_hom() const {
  const Ring& p = target_.presentation();
  std::vector<Element> images;
  for (std::size_t i = 0; i < target_.base().nvars(); ++i) images.push_back(p.variable(i));
  return RingHom::make(target_.base(), p, std::move(images));
}

CanonicalMap canonical_map(const LocalizedRing& ring) { return CanonicalMap(ring); }

Element InducedMap::apply(const Fraction& x) const {
  require_same(x.ring(), source_);
  return phi_.apply(x.numerator()) * witness_.pow(x.exponent());
}

RingHom InducedMap::presentation_hom() const {
  std::vector<Element> images = phi_.images();
  images.push_back(witness_);
  return RingHom::make(source_.presentation(), phi_.codomain(), std::move(images));
}

InducedMap universal_property(const LocalizedRing& ring, const RingHom& phi, const Element& w) {
  if (phi.domain() != ring.base()) {
    fail(ErrorKind::RingMismatch, "map out of " + phi.domain().describe() + ", expected " +
                                      ring.base().describe());
  }
  if (w.ring() != phi.codomain()) {
    fail(ErrorKind::RingMismatch, "witness " + w.to_string() + " is not in " +
                                      phi.codomain().describe());
  }
  Element check = phi.apply(ring.f()) * w;
  if (!check.is_one()) {
    fail(ErrorKind::InvalidWitness,
         "phi(f) * w = " + check.to_string() + ", not 1");
  }
  return InducedMap(ring, phi, w);
}

DoubleLocalization::DoubleLocalization(const Element& fi, const Element& fj)
    : left_(fi.ring(), fi), right_(fj.ring(), fj), target_(fi.ring(), fi * fj) {}

Fraction DoubleLocalization::chi_left(const Fraction& x) const {
  require_same(x.ring(), left_);
  const Element& fj = right_.f();
  return Fraction(target_, x.numerator() * fj.pow(x.exponent()), x.exponent());
}

Fraction DoubleLocalization::chi_right(const Fraction& x) const {
  require_same(x.ring(), right_);
  const Element& fi = left_.f();
  return Fraction(target_, x.numerator() * fi.pow(x.exponent()), x.exponent());
}

DoubleLocalization double_localization_maps(const Element& fi, const Element& fj) {
  return DoubleLocalization(fi, fj);
}

std::optional<Fraction> is_unit(const Fraction& a) {
  const LocalizedRing& L = a.ring();
  const Ring& base = L.base();
  const Element& f = L.f();
  std::optional<Fraction> inv;  // inverse of numerator/1
  switch (base.kind()) {
    case RingKind::PolyQuotient: {
      auto b = is_unit(to_presentation(L.canonical(a.numerator())));
      if (b) inv = from_presentation(L, *b);
      break;
    }
    case RingKind::Integer: {
      const mpz_class r = a.numerator().integer();
      const mpz_class fv = f.integer();
      if (fv == 0) {
        inv = L.canonical(base.zero());  // the zero ring
      } else if (r != 0) {
        // r/1 is a unit iff every prime of r divides f, iff r | f^bitlen(r).
        unsigned N = static_cast<unsigned>(mpz_sizeinbase(r.get_mpz_t(), 2));
        mpz_class fN;
        mpz_pow_ui(fN.get_mpz_t(), fv.get_mpz_t(), N);
        if (fN % r == 0) inv = Fraction(L, base.from_integer(fN / r), N);
      }
      break;
    }
    case RingKind::Residue: {
      // Z/n[1/f] is Z/m with m the part of n coprime to f.
      mpz_class m = base.modulus();
      const mpz_class fv = f.integer();
      for (mpz_class g = gcd(m, fv); g > 1; g = gcd(m, fv)) m /= g;
      mpz_class s;
      if (m == 1) {
        s = 0;
      } else {
        mpz_class r = a.numerator().integer();
        if (mpz_invert(s.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()) == 0) break;
      }
      inv = L.canonical(base.from_integer(s));
      break;
    }
  }
  if (!inv) return std::nullopt;
  Fraction result = *inv * Fraction(L, f.pow(a.exponent()), 0);
  if (!frac_eq(result * a, L.canonical(base.one()))) {
    fail(ErrorKind::InvalidWitness, "unit witness for " + a.to_string() + " failed re-verification");
  }
  return result;
}

FractionHom FractionHom::make(Ring domain, LocalizedRing target, std::vector<Fraction> images) {
  const std::size_t n = domain.kind() == RingKind::PolyQuotient ? domain.nvars() : 0;
  if (images.size() != n) {
    fail(ErrorKind::NotWellDefined, "expected " + std::to_string(n) + " generator images, got " +
                                        std::to_string(images.size()));
  }
  for (const auto& img : images) {
    if (img.ring() != target) {
      fail(ErrorKind::RingMismatch, "image " + img.to_string() + " is not in " + target.describe());
    }
  }
  const Ring& base = target.base();
  const Fraction zero = target.canonical(base.zero());
  auto vanishes = [&](const mpz_class& c) { return frac_eq(target.canonical(base.from_integer(c)), zero); };
  bool compatible = true;
  switch (domain.kind()) {
    case RingKind::Integer: break;
    case RingKind::Residue: compatible = vanishes(domain.modulus()); break;
    case RingKind::PolyQuotient:
      if (domain.base_field().is_rational()) {
        compatible = base.kind() == RingKind::PolyQuotient && base.base_field().is_rational();
        // A zero localization receives every map.
        if (!compatible) compatible = vanishes(1);
      } else {
        compatible = vanishes(domain.base_field().characteristic());
      }
      break;
  }
  if (!compatible) {
    fail(ErrorKind::NotWellDefined,
         "no ring map " + domain.describe() + " -> " + target.describe() + " (coefficients)");
  }
  const bool zero_target = vanishes(1);
  FractionHom h(std::move(domain), std::move(target), std::move(images));
  h.zero_target_ = zero_target;
  if (h.domain_.kind() == RingKind::PolyQuotient) {
    for (const auto& rel : h.domain_.relations()) {
      Fraction img = h.apply_poly(rel);
      if (!frac_eq(img, zero)) {
        fail(ErrorKind::NotWellDefined,
             "relation " + h.domain_.free_ring().to_string(rel, h.domain_.variables()) +
                 " maps to " + img.to_string() + ", not 0");
      }
    }
  }
  return h;
}

Fraction FractionHom::apply_poly(const Poly& p) const {
  const Ring& base = target_.base();
  Fraction acc = target_.canonical(base.zero());
  std::vector<std::vector<Fraction>> powers(images_.size());
  for (const auto& t : p.terms) {
    Element c = zero_target_ ? base.zero() : base.from_rational(t.coeff);
    Fraction term = target_.canonical(c);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      const std::uint32_t e = t.exponents[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(target_.canonical(base.one()));
      while (cache.size() <= e) cache.push_back(cache.back() * images_[i]);
      term = term * cache[e];
    }
    acc = acc + term;
  }
  return acc;
}

Fraction FractionHom::apply(const Element& a) const {
  if (a.ring() != domain_) {
    fail(ErrorKind::RingMismatch,
         "element of " + a.ring().describe() + " applied to a map out of " + domain_.describe());
  }
  if (domain_.kind() != RingKind::PolyQuotient) {
    return target_.canonical(target_.base().from_integer(a.integer()));
  }
  return apply_poly(a.poly());
}

std::string FractionHom::describe() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ", ";
    out << domain_.variables()[i] << " -> " << images_[i].to_string();
  }
  out << "}";
  return out.str();
}

FractionHom compose_canonical(const LocalizedRing& target, const RingHom& phi) {
  if (phi.codomain() != target.base()) {
    fail(ErrorKind::RingMismatch, "map into " + phi.codomain().describe() + ", expected " +
                                      target.base().describe());
  }
  std::vector<Fraction> images;
  for (const auto& img : phi.images()) images.push_back(target.canonical(img));
  return FractionHom::make(phi.domain(), target, std::move(images));
}

}  // namespace zkit
