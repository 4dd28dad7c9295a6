#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zkit {

/// Coefficient field of a polynomial ring: the rationals or a prime field.
/// Prime-field residues are stored as integral mpq values in [0, p).
class Field {
 public:
  static Field rationals();
  /// Throws InvalidRing unless p is prime.
  static Field prime(const mpz_class& p);

  bool is_rational() const { return characteristic_ == 0; }
  /// 0 for the rationals.
  const mpz_class& characteristic() const { return characteristic_; }

  /// Canonical representative of q; throws NonInvertibleDenominator when the
  /// denominator vanishes in a prime field.
  mpq_class reduce(const mpq_class& q) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.characteristic_ == b.characteristic_;
  }

 private:
  explicit Field(mpz_class p) : characteristic_(std::move(p)) {}
  mpz_class characteristic_;
};

enum class MonomialOrder { GRevLex, GrLex, Lex };

std::string to_string(MonomialOrder order);

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exponents;
  mpq_class coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms sorted strictly descending under the
/// owning PolyRing's monomial order.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }

  friend bool operator==(const Poly&, const Poly&) = default;
};

unsigned total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& a, const Exponents& b);  // requires divides(b, a)
Exponents product(const Exponents& a, const Exponents& b);

/// Free polynomial ring K[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(Field field, std::size_t nvars, MonomialOrder order = MonomialOrder::GRevLex);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }

  std::strong_ordering compare(const Exponents& a, const Exponents& b) const;

  Poly zero() const { return {}; }
  Poly constant(const mpq_class& c) const;
  Poly one() const { return constant(1); }
  Poly variable(std::size_t i) const;
  Poly monomial(Exponents e, const mpq_class& c) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, const mpq_class& c) const;
  Poly mul_term(const Poly& a, const Exponents& e, const mpq_class& c) const;
  Poly pow(const Poly& a, unsigned k) const;
  /// a - c * x^e * b, the elementary reduction step.
  Poly sub_mul_term(const Poly& a, const Exponents& e, const mpq_class& c, const Poly& b) const;
  Poly make_monic(const Poly& a) const;

  /// Sorts and combines terms of an arbitrary term list.
  Poly canonicalize(std::vector<Term> terms) const;

  /// Embeds into a ring with extra trailing variables.
  Poly extend(const Poly& a, std::size_t new_nvars) const;

  bool is_constant(const Poly& a) const;
  unsigned degree(const Poly& a) const;
  unsigned degree_in(const Poly& a, std::size_t var) const;

  std::string to_string(const Poly& a, const std::vector<std::string>& names) const;

 private:
  Field field_;
  std::size_t nvars_;
  MonomialOrder order_;
};

}  // namespace zkit
