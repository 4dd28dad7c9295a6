#include "zkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "zkit/error.hpp"

namespace zkit {

Field Field::rationals() { return Field(mpz_class(0)); }

Field Field::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    fail(ErrorKind::InvalidRing, "characteristic " + p.get_str() + " is not prime");
  }
  return Field(p);
}

mpq_class Field::reduce(const mpq_class& q) const {
  if (is_rational()) {
    mpq_class r = q;
    r.canonicalize();
    return r;
  }
  mpz_class num = q.get_num() % characteristic_;
  mpz_class den = q.get_den() % characteristic_;
  if (den == 0) {
    fail(ErrorKind::NonInvertibleDenominator,
         "denominator " + q.get_den().get_str() + " vanishes modulo " + characteristic_.get_str());
  }
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), characteristic_.get_mpz_t());
    num *= inv;
  }
  num %= characteristic_;
  if (num < 0) num += characteristic_;
  return mpq_class(num);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= characteristic_) r -= characteristic_;
  return mpq_class(r);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += characteristic_;
  return mpq_class(r);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  r %= characteristic_;
  return mpq_class(r);
}

mpq_class Field::neg(const mpq_class& a) const {
  if (is_rational()) return -a;
  if (a == 0) return a;
  return mpq_class(characteristic_ - a.get_num());
}

mpq_class Field::inv(const mpq_class& a) const {
  if (a == 0) fail(ErrorKind::NonInvertibleDenominator, "inverse of zero coefficient");
  if (is_rational()) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), characteristic_.get_mpz_t());
  return mpq_class(r);
}

std::string Field::describe() const {
  return is_rational() ? "Q" : "Fp(" + characteristic_.get_str() + ")";
}

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::GRevLex: return "grevlex";
    case MonomialOrder::GrLex: return "grlex";
    case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

PolyRing::PolyRing(Field field, std::size_t nvars, MonomialOrder order)
    : field_(std::move(field)), nvars_(nvars), order_(order) {}

std::strong_ordering PolyRing::compare(const Exponents& a, const Exponents& b) const {
  if (order_ != MonomialOrder::Lex) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da <=> db;
  }
  if (order_ == MonomialOrder::GRevLex) {
    // Among equal degrees, the smaller exponent in the last differing
    // variable is the larger monomial.
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

Poly PolyRing::constant(const mpq_class& c) const {
  mpq_class r = field_.reduce(c);
  if (r == 0) return {};
  return Poly{{Term{Exponents(nvars_, 0), r}}};
}

Poly PolyRing::variable(std::size_t i) const {
  Exponents e(nvars_, 0);
  e.at(i) = 1;
  return Poly{{Term{std::move(e), mpq_class(1)}}};
}

Poly PolyRing::monomial(Exponents e, const mpq_class& c) const {
  mpq_class r = field_.reduce(c);
  if (r == 0) return {};
  return Poly{{Term{std::move(e), r}}};
}

Poly PolyRing::canonicalize(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [this](const Term& x, const Term& y) {
    return compare(x.exponents, y.exponents) == std::strong_ordering::greater;
  });
  Poly out;
  for (auto& t : terms) {
    t.coeff = field_.reduce(t.coeff);
    if (!out.terms.empty() && out.terms.back().exponents == t.exponents) {
      out.terms.back().coeff = field_.add(out.terms.back().coeff, t.coeff);
      if (out.terms.back().coeff == 0) out.terms.pop_back();
    } else if (t.coeff != 0) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

template <typename Combine>
Poly merge(const PolyRing& ring, const Poly& a, const Poly& b, Combine combine_b) {
  Poly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    if (i == a.terms.size()) {
      out.terms.push_back(Term{b.terms[j].exponents, combine_b(b.terms[j].coeff)});
      ++j;
      continue;
    }
    auto c = ring.compare(a.terms[i].exponents, b.terms[j].exponents);
    if (c == std::strong_ordering::greater) {
      out.terms.push_back(a.terms[i++]);
    } else if (c == std::strong_ordering::less) {
      out.terms.push_back(Term{b.terms[j].exponents, combine_b(b.terms[j].coeff)});
      ++j;
    } else {
      mpq_class s = ring.field().add(a.terms[i].coeff, combine_b(b.terms[j].coeff));
      if (s != 0) out.terms.push_back(Term{a.terms[i].exponents, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  return merge(*this, a, b, [](const mpq_class& c) { return c; });
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
  return merge(*this, a, b, [this](const mpq_class& c) { return field_.neg(c); });
}

Poly PolyRing::neg(const Poly& a) const {
  Poly out = a;
  for (auto& t : out.terms) t.coeff = field_.neg(t.coeff);
  return out;
}

Poly PolyRing::scale(const Poly& a, const mpq_class& c) const {
  mpq_class r = field_.reduce(c);
  if (r == 0) return {};
  Poly out = a;
  for (auto& t : out.terms) t.coeff = field_.mul(t.coeff, r);
  return out;
}

Poly PolyRing::mul_term(const Poly& a, const Exponents& e, const mpq_class& c) const {
  if (c == 0) return {};
  Poly out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    // Monomial orders are multiplicative, so the order is preserved.
    out.terms.push_back(Term{product(t.exponents, e), field_.mul(t.coeff, c)});
  }
  return out;
}

Poly PolyRing::sub_mul_term(const Poly& a, const Exponents& e, const mpq_class& c,
                            const Poly& b) const {
  return sub(a, mul_term(b, e, c));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const Poly& small = a.terms.size() <= b.terms.size() ? a : b;
  const Poly& large = a.terms.size() <= b.terms.size() ? b : a;
  Poly acc;
  for (const auto& t : small.terms) acc = add(acc, mul_term(large, t.exponents, t.coeff));
  return acc;
}

Poly PolyRing::pow(const Poly& a, unsigned k) const {
  Poly result = one();
  Poly base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Poly PolyRing::make_monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.lead().coeff));
}

Poly PolyRing::extend(const Poly& a, std::size_t new_nvars) const {
  Poly out = a;
  // Trailing zero exponents preserve every supported order.
  for (auto& t : out.terms) t.exponents.resize(new_nvars, 0);
  return out;
}

bool PolyRing::is_constant(const Poly& a) const {
  return a.is_zero() || (a.terms.size() == 1 && total_degree(a.lead().exponents) == 0);
}

unsigned PolyRing::degree(const Poly& a) const {
  unsigned d = 0;
  for (const auto& t : a.terms) d = std::max(d, total_degree(t.exponents));
  return d;
}

unsigned PolyRing::degree_in(const Poly& a, std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : a.terms) d = std::max<unsigned>(d, t.exponents.at(var));
  return d;
}

std::string PolyRing::to_string(const Poly& a, const std::vector<std::string>& names) const {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : a.terms) {
    mpq_class c = t.coeff;
    bool negative = false;
    if (field_.is_rational() && c < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace zkit
