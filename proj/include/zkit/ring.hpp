#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zkit/poly.hpp"

namespace zkit {

enum class RingKind { Integer, Residue, PolyQuotient };

class Element;
struct RingDesc;

/// Handle to an immutable ring description from the supported tower:
/// the integers, Z/n, and finitely presented algebras K[x..]/I over
/// K = Q or a prime field. Copies share the description.
class Ring {
 public:
  static Ring integers();
  /// Throws InvalidRing for n < 2.
  static Ring residues(const mpz_class& n);
  /// `relations` live in the free ring on `variables`. The reduced Gröbner
  /// basis of the relations is computed here, once.
  static Ring polynomial(Field base, std::vector<std::string> variables,
                         std::vector<Poly> relations,
                         MonomialOrder order = MonomialOrder::GRevLex);
  /// The coefficient field itself (no variables).
  static Ring field(Field base);

  RingKind kind() const;
  const mpz_class& modulus() const;  // Residue only
  const Field& base_field() const;   // PolyQuotient only
  const std::vector<std::string>& variables() const;
  std::size_t nvars() const { return variables().size(); }
  std::optional<std::size_t> variable_index(const std::string& name) const;
  const PolyRing& free_ring() const;          // PolyQuotient only
  const std::vector<Poly>& relations() const;  // as declared
  const std::vector<Poly>& relation_basis() const;  // reduced Gröbner basis
  MonomialOrder order() const;

  /// Additive order of 1 (0 when infinite); 1 for the zero ring.
  mpz_class characteristic() const;
  bool is_zero_ring() const;
  /// Finite element set: Z/n, or a zero-dimensional quotient over F_p.
  bool is_finite() const;
  /// Monomials spanning a zero-dimensional PolyQuotient; nullopt otherwise.
  std::optional<std::vector<Exponents>> standard_monomials() const;
  /// Every element in a deterministic order; throws CodomainNotFinite.
  std::vector<Element> elements() const;

  Element zero() const;
  Element one() const;
  Element from_integer(const mpz_class& n) const;
  /// Throws NonInvertibleDenominator when the denominator is not a unit.
  Element from_rational(const mpq_class& q) const;
  Element variable(std::size_t i) const;
  /// Throws UnknownVariable.
  Element variable(const std::string& name) const;
  /// Canonical form of a raw polynomial over the free ring.
  Element normalize(const Poly& raw) const;
  Element normalize(const mpz_class& raw) const;

  /// DSL ring expression, e.g. "Fp(7)[x,y]/(x^2 - y)".
  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  explicit Ring(std::shared_ptr<const RingDesc> desc) : desc_(std::move(desc)) {}
  std::shared_ptr<const RingDesc> desc_;
  friend class Element;
};

/// A ring element in canonical form: two elements are equal iff their
/// payloads are identical.
class Element {
 public:
  Element(Ring ring, mpz_class value);  // Integer/Residue; reduced here
  Element(Ring ring, Poly poly);        // PolyQuotient; normalized here

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  /// Integer or residue payload.
  const mpz_class& integer() const;
  /// Normal-form polynomial payload.
  const Poly& poly() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Element& other) const;
  Element operator-() const;
  Element pow(unsigned k) const;

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  struct Trusted {};
  Element(Ring ring, std::variant<mpz_class, Poly> payload, Trusted)
      : ring_(std::move(ring)), payload_(std::move(payload)) {}
  void require_same_ring(const Element& other) const;

  Ring ring_;
  std::variant<mpz_class, Poly> payload_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Neg ignores b.
Element ring_arith(ArithOp op, const Element& a, const Element& b);

/// Inverse witness b with a*b == 1, or nullopt when a is not a unit.
std::optional<Element> is_unit(const Element& a);

}  // namespace zkit
