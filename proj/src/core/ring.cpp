#include "zkit/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zkit/error.hpp"
#include "zkit/groebner.hpp"

namespace zkit {

struct RingDesc {
  RingKind kind = RingKind::Integer;
  mpz_class modulus;
  std::optional<Field> field;
  std::vector<std::string> variables;
  std::optional<PolyRing> free_ring;
  std::vector<Poly> relations;
  std::vector<Poly> basis;
  MonomialOrder order = MonomialOrder::GRevLex;
  std::optional<std::vector<Exponents>> standard;
};

namespace {

std::optional<std::vector<Exponents>> compute_standard_monomials(const PolyRing& ring,
                                                                 const std::vector<Poly>& basis) {
  const std::size_t n = ring.nvars();
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : basis) {
      const Exponents& e = g.lead().exponents;
      bool pure = e[i] > 0;
      for (std::size_t j = 0; j < n && pure; ++j) {
        if (j != i && e[j] != 0) pure = false;
      }
      if (pure && (bound[i] == 0 || e[i] < bound[i])) bound[i] = e[i];
    }
    if (bound[i] == 0) return std::nullopt;
  }
  std::vector<Exponents> out;
  bool unit = std::any_of(basis.begin(), basis.end(),
                          [&](const Poly& g) { return ring.is_constant(g); });
  if (unit) return out;
  Exponents e(n, 0);
  while (true) {
    bool standard = std::none_of(basis.begin(), basis.end(), [&](const Poly& g) {
      return divides(g.lead().exponents, e);
    });
    if (standard) out.push_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
    return ring.compare(a, b) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace

Ring Ring::integers() {
  static const Ring z(std::make_shared<const RingDesc>(RingDesc{}));
  return z;
}

Ring Ring::residues(const mpz_class& n) {
  if (n < 2) fail(ErrorKind::InvalidRing, "residue modulus must be at least 2, got " + n.get_str());
  RingDesc d;
  d.kind = RingKind::Residue;
  d.modulus = n;
  return Ring(std::make_shared<const RingDesc>(std::move(d)));
}

Ring Ring::polynomial(Field base, std::vector<std::string> variables, std::vector<Poly> relations,
                      MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !seen.insert(v).second) {
      fail(ErrorKind::InvalidRing, "variable names must be distinct and nonempty: '" + v + "'");
    }
  }
  RingDesc d;
  d.kind = RingKind::PolyQuotient;
  d.field = base;
  d.free_ring.emplace(base, variables.size(), order);
  d.variables = std::move(variables);
  d.order = order;
  for (auto& r : relations) {
    for (const auto& t : r.terms) {
      if (t.exponents.size() != d.variables.size()) {
        fail(ErrorKind::UnknownVariable, "relation mentions undeclared variables");
      }
    }
    Poly c = d.free_ring->canonicalize(std::move(r.terms));
    if (!c.is_zero()) d.relations.push_back(std::move(c));
  }
  if (!d.relations.empty()) {
    GroebnerInput in;
    in.generators = d.relations;
    d.basis = buchberger(*d.free_ring, in).basis;
  }
  d.standard = compute_standard_monomials(*d.free_ring, d.basis);
  return Ring(std::make_shared<const RingDesc>(std::move(d)));
}

Ring Ring::field(Field base) { return polynomial(std::move(base), {}, {}); }

RingKind Ring::kind() const { return desc_->kind; }

const mpz_class& Ring::modulus() const {
  if (desc_->kind != RingKind::Residue) fail(ErrorKind::UnsupportedBase, "not a residue ring");
  return desc_->modulus;
}

const Field& Ring::base_field() const {
  if (!desc_->field) fail(ErrorKind::UnsupportedBase, "ring has no coefficient field");
  return *desc_->field;
}

const std::vector<std::string>& Ring::variables() const { return desc_->variables; }

std::optional<std::size_t> Ring::variable_index(const std::string& name) const {
  const auto& v = desc_->variables;
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

const PolyRing& Ring::free_ring() const {
  if (!desc_->free_ring) fail(ErrorKind::UnsupportedBase, "not a polynomial quotient");
  return *desc_->free_ring;
}

const std::vector<Poly>& Ring::relations() const { return desc_->relations; }
const std::vector<Poly>& Ring::relation_basis() const { return desc_->basis; }
MonomialOrder Ring::order() const { return desc_->order; }

bool Ring::is_zero_ring() const {
  if (desc_->kind != RingKind::PolyQuotient) return false;
  return desc_->basis.size() == 1 && desc_->free_ring->is_constant(desc_->basis[0]);
}

mpz_class Ring::characteristic() const {
  if (is_zero_ring()) return 1;
  switch (desc_->kind) {
    case RingKind::Integer: return 0;
    case RingKind::Residue: return desc_->modulus;
    case RingKind::PolyQuotient: return desc_->field->characteristic();
  }
  return 0;
}

bool Ring::is_finite() const {
  switch (desc_->kind) {
    case RingKind::Integer: return false;
    case RingKind::Residue: return true;
    case RingKind::PolyQuotient:
      return is_zero_ring() || (!desc_->field->is_rational() && desc_->standard.has_value());
  }
  return false;
}

std::optional<std::vector<Exponents>> Ring::standard_monomials() const {
  if (desc_->kind != RingKind::PolyQuotient) return std::nullopt;
  return desc_->standard;
}

std::vector<Element> Ring::elements() const {
  if (!is_finite()) fail(ErrorKind::CodomainNotFinite, describe() + " is not a finite ring");
  std::vector<Element> out;
  if (desc_->kind == RingKind::Residue) {
    for (mpz_class i = 0; i < desc_->modulus; ++i) out.push_back(from_integer(i));
    return out;
  }
  const auto& monos = *desc_->standard;
  const mpz_class& p = desc_->field->characteristic();
  std::vector<mpz_class> digits(monos.size(), 0);
  while (true) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (digits[i] != 0) terms.push_back(Term{monos[i], mpq_class(digits[i])});
    }
    out.push_back(normalize(Poly{std::move(terms)}));
    std::size_t i = monos.size();
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (monos.empty()) return out;
  }
}

Element Ring::zero() const { return from_integer(0); }
Element Ring::one() const { return from_integer(1); }

Element Ring::from_integer(const mpz_class& n) const {
  if (desc_->kind == RingKind::PolyQuotient) return normalize(desc_->free_ring->constant(n));
  return Element(*this, n);
}

Element Ring::from_rational(const mpq_class& q) const {
  mpq_class c = q;
  c.canonicalize();
  switch (desc_->kind) {
    case RingKind::Integer:
      if (c.get_den() != 1) {
        fail(ErrorKind::NonInvertibleDenominator, "rational " + c.get_str() + " is not an integer");
      }
      return Element(*this, mpz_class(c.get_num()));
    case RingKind::Residue: {
      mpz_class inv;
      mpz_class den = c.get_den();
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), desc_->modulus.get_mpz_t()) == 0) {
        fail(ErrorKind::NonInvertibleDenominator,
             "denominator " + den.get_str() + " is not a unit modulo " + desc_->modulus.get_str());
      }
      return Element(*this, mpz_class(c.get_num() * inv));
    }
    case RingKind::PolyQuotient:
      return normalize(desc_->free_ring->constant(c));
  }
  return zero();
}

Element Ring::variable(std::size_t i) const {
  if (desc_->kind != RingKind::PolyQuotient || i >= desc_->variables.size()) {
    fail(ErrorKind::UnknownVariable, "variable index out of range");
  }
  return normalize(desc_->free_ring->variable(i));
}

Element Ring::variable(const std::string& name) const {
  auto i = variable_index(name);
  if (!i) fail(ErrorKind::UnknownVariable, "unknown variable '" + name + "' in " + describe());
  return variable(*i);
}

Element Ring::normalize(const Poly& raw) const {
  if (desc_->kind != RingKind::PolyQuotient) {
    fail(ErrorKind::UnsupportedBase, "polynomial payload for " + describe());
  }
  for (const auto& t : raw.terms) {
    if (t.exponents.size() != desc_->variables.size()) {
      fail(ErrorKind::UnknownVariable, "polynomial mentions undeclared variables");
    }
  }
  Poly c = desc_->free_ring->canonicalize(raw.terms);
  return Element(*this, std::move(c));
}

Element Ring::normalize(const mpz_class& raw) const { return from_integer(raw); }

std::string Ring::describe() const {
  switch (desc_->kind) {
    case RingKind::Integer: return "Z";
    case RingKind::Residue: return "Z/" + desc_->modulus.get_str();
    case RingKind::PolyQuotient: break;
  }
  std::ostringstream out;
  out << desc_->field->describe();
  if (!desc_->variables.empty() || !desc_->relations.empty()) {
    out << "[";
    for (std::size_t i = 0; i < desc_->variables.size(); ++i) {
      if (i) out << ",";
      out << desc_->variables[i];
    }
    out << "]";
  }
  if (!desc_->relations.empty()) {
    out << "/(";
    for (std::size_t i = 0; i < desc_->relations.size(); ++i) {
      if (i) out << ", ";
      out << desc_->free_ring->to_string(desc_->relations[i], desc_->variables);
    }
    out << ")";
  }
  if (desc_->order != MonomialOrder::GRevLex) out << " order " << to_string(desc_->order);
  return out.str();
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.desc_ == b.desc_) return true;
  const RingDesc& x = *a.desc_;
  const RingDesc& y = *b.desc_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case RingKind::Integer: return true;
    case RingKind::Residue: return x.modulus == y.modulus;
    case RingKind::PolyQuotient:
      return *x.field == *y.field && x.variables == y.variables && x.order == y.order &&
             x.basis == y.basis;
  }
  return false;
}

Element::Element(Ring ring, mpz_class value) : ring_(std::move(ring)) {
  switch (ring_.kind()) {
    case RingKind::Integer: break;
    case RingKind::Residue: {
      const mpz_class& n = ring_.modulus();
      value %= n;
      if (value < 0) value += n;
      break;
    }
    case RingKind::PolyQuotient:
      payload_ = ring_.from_integer(value).payload_;
      return;
  }
  payload_ = std::move(value);
}

Element::Element(Ring ring, Poly poly) : ring_(std::move(ring)) {
  if (ring_.kind() != RingKind::PolyQuotient) {
    fail(ErrorKind::UnsupportedBase, "polynomial payload for " + ring_.describe());
  }
  const auto& basis = ring_.relation_basis();
  payload_ = basis.empty() ? std::move(poly) : normal_form(ring_.free_ring(), poly, basis);
}

bool Element::is_zero() const {
  if (auto* z = std::get_if<mpz_class>(&payload_)) return *z == 0;
  return std::get<Poly>(payload_).is_zero();
}

bool Element::is_one() const { return *this == ring_.one(); }

const mpz_class& Element::integer() const {
  if (auto* z = std::get_if<mpz_class>(&payload_)) return *z;
  fail(ErrorKind::UnsupportedBase, "element of " + ring_.describe() + " has no integer payload");
}

const Poly& Element::poly() const {
  if (auto* p = std::get_if<Poly>(&payload_)) return *p;
  fail(ErrorKind::UnsupportedBase, "element of " + ring_.describe() + " has no polynomial payload");
}

void Element::require_same_ring(const Element& other) const {
  if (!(ring_ == other.ring_)) {
    fail(ErrorKind::RingMismatch,
         "elements of different rings: " + ring_.describe() + " vs " + other.ring_.describe());
  }
}

Element Element::operator+(const Element& other) const {
  require_same_ring(other);
  if (ring_.kind() == RingKind::PolyQuotient) {
    // Sums of normal forms are normal forms.
    return Element(ring_, ring_.free_ring().add(poly(), other.poly()), Trusted{});
  }
  return Element(ring_, mpz_class(integer() + other.integer()));
}

Element Element::operator-(const Element& other) const {
  require_same_ring(other);
  if (ring_.kind() == RingKind::PolyQuotient) {
    return Element(ring_, ring_.free_ring().sub(poly(), other.poly()), Trusted{});
  }
  return Element(ring_, mpz_class(integer() - other.integer()));
}

Element Element::operator*(const Element& other) const {
  require_same_ring(other);
  if (ring_.kind() == RingKind::PolyQuotient) {
    return Element(ring_, ring_.free_ring().mul(poly(), other.poly()));
  }
  return Element(ring_, mpz_class(integer() * other.integer()));
}

Element Element::operator-() const {
  if (ring_.kind() == RingKind::PolyQuotient) {
    return Element(ring_, ring_.free_ring().neg(poly()), Trusted{});
  }
  return Element(ring_, mpz_class(-integer()));
}

Element Element::pow(unsigned k) const {
  if (ring_.kind() == RingKind::Residue) {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), integer().get_mpz_t(), k, ring_.modulus().get_mpz_t());
    return Element(ring_, r);
  }
  Element result = ring_.one();
  Element base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string Element::to_string() const {
  if (auto* z = std::get_if<mpz_class>(&payload_)) return z->get_str();
  return ring_.free_ring().to_string(std::get<Poly>(payload_), ring_.variables());
}

bool operator==(const Element& a, const Element& b) {
  return a.ring_ == b.ring_ && a.payload_ == b.payload_;
}

Element ring_arith(ArithOp op, const Element& a, const Element& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
  }
  return a;
}

std::optional<Element> is_unit(const Element& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integer:
      if (a.integer() == 1 || a.integer() == -1) return a;
      return std::nullopt;
    case RingKind::Residue: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), a.integer().get_mpz_t(), r.modulus().get_mpz_t()) == 0) {
        return std::nullopt;
      }
      return r.from_integer(inv);
    }
    case RingKind::PolyQuotient: break;
  }
  if (r.is_zero_ring()) return r.zero();
  if (a.is_zero()) return std::nullopt;
  // a is a unit iff 1 lies in relations + <a>; the tracked cofactor of a is
  // the inverse.
  GroebnerInput in;
  in.background = r.relation_basis();
  in.generators = {a.poly()};
  in.track = true;
  GroebnerOutput out = buchberger(r.free_ring(), in);
  if (out.basis.size() != 1 || !r.free_ring().is_constant(out.basis[0])) return std::nullopt;
  Element inv = r.normalize(out.cofactors[0][0]);
  if (!(a * inv).is_one()) {
    fail(ErrorKind::InvalidWitness, "inverse witness failed re-verification");
  }
  return inv;
}

}  // namespace zkit
