#include "zkit/ideal.hpp"

#include <mutex>

#include "zkit/error.hpp"
#include "zkit/limits.hpp"

namespace zkit {

namespace {

void require_ring(const Ring& expected, const Element& e) {
  if (e.ring() != expected) {
    fail(ErrorKind::RingMismatch,
         "element of " + e.ring().describe() + " used with an ideal of " + expected.describe());
  }
}

// Extended gcd over a list: g == sum cof[i] * values[i], g >= 0.
mpz_class gcd_with_cofactors(const std::vector<mpz_class>& values, std::vector<mpz_class>& cof) {
  mpz_class g = 0;
  cof.assign(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    mpz_class d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), values[i].get_mpz_t());
    for (std::size_t k = 0; k < i; ++k) cof[k] *= s;
    cof[i] = t;
    g = d;
  }
  return g;
}

std::size_t bit_length(const mpz_class& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

// K[x_1..x_n, t] with t the last variable, plus the ring's relations lifted.
struct Rabinowitsch {
  PolyRing ring;
  std::vector<Poly> background;

  explicit Rabinowitsch(const Ring& r)
      : ring(r.base_field(), r.nvars() + 1, r.order()) {
    for (const auto& g : r.relation_basis()) {
      background.push_back(r.free_ring().extend(g, r.nvars() + 1));
    }
  }

  Poly lift(const Ring& r, const Poly& p) const { return r.free_ring().extend(p, ring.nvars()); }

  // 1 - t * a
  Poly one_minus_t_times(const Ring& r, const Poly& a) const {
    Exponents t(ring.nvars(), 0);
    t.back() = 1;
    return ring.sub(ring.one(), ring.mul_term(lift(r, a), t, 1));
  }
};

bool is_unit_basis(const PolyRing& ring, const std::vector<Poly>& basis) {
  return basis.size() == 1 && ring.is_constant(basis[0]) && !basis[0].is_zero();
}

}  // namespace

struct FinGenIdeal::Cache {
  std::once_flag once;
  std::optional<GroebnerBasis> basis;
};

FinGenIdeal::FinGenIdeal(Ring ring, std::vector<Element> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_ring(ring_, g);
}

const GroebnerBasis& FinGenIdeal::groebner() const {
  std::call_once(cache_->once, [this] {
    GroebnerBasis gb{ring_, MonomialOrder::GRevLex, {}, {}, 0, {}};
    gb.order = ring_.kind() == RingKind::PolyQuotient ? ring_.order() : MonomialOrder::GRevLex;
    if (ring_.kind() == RingKind::PolyQuotient) {
      GroebnerInput in;
      in.background = ring_.relation_basis();
      for (const auto& g : generators_) in.generators.push_back(g.poly());
      in.track = true;
      GroebnerOutput out = buchberger(ring_.free_ring(), in);
      gb.basis = std::move(out.basis);
      gb.cofactors = std::move(out.cofactors);
    } else {
      std::vector<mpz_class> values;
      for (const auto& g : generators_) values.push_back(g.integer());
      if (ring_.kind() == RingKind::Residue) values.push_back(ring_.modulus());
      gb.gcd = gcd_with_cofactors(values, gb.gcd_cofactors);
      if (ring_.kind() == RingKind::Residue) gb.gcd_cofactors.pop_back();
    }
    cache_->basis = std::move(gb);
  });
  return *cache_->basis;
}

GroebnerBasis groebner(const FinGenIdeal& ideal) { return ideal.groebner(); }

Membership ideal_member(const Element& a, const FinGenIdeal& ideal) {
  const Ring& r = ideal.ring();
  require_ring(r, a);
  const auto& gens = ideal.generators();
  Membership m;
  if (a.is_zero()) {
    m.member = true;
    m.cofactors.assign(gens.size(), r.zero());
    return m;
  }
  const GroebnerBasis& gb = ideal.groebner();
  if (r.kind() != RingKind::PolyQuotient) {
    mpz_class value = a.integer();
    if (gb.gcd == 0 || value % gb.gcd != 0) return m;
    mpz_class scale = value / gb.gcd;
    m.member = true;
    for (const auto& c : gb.gcd_cofactors) m.cofactors.push_back(r.from_integer(c * scale));
  } else {
    Division d = divide(r.free_ring(), a.poly(), gb.basis);
    if (!d.remainder.is_zero()) return m;
    m.member = true;
    const PolyRing& fr = r.free_ring();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Poly c;
      for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        if (d.quotients[k].is_zero() || gb.cofactors[k][i].is_zero()) continue;
        c = fr.add(c, fr.mul(d.quotients[k], gb.cofactors[k][i]));
      }
      m.cofactors.push_back(r.normalize(c));
    }
  }
  Element sum = r.zero();
  for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + m.cofactors[i] * gens[i];
  if (sum != a) fail(ErrorKind::InvalidWitness, "membership cofactors failed re-verification");
  return m;
}

bool radical_member(const Element& a, const FinGenIdeal& ideal) {
  const Ring& r = ideal.ring();
  require_ring(r, a);
  if (a.is_zero()) return true;
  if (r.kind() != RingKind::PolyQuotient) {
    const mpz_class& d = ideal.groebner().gcd;
    if (d == 0) return false;  // a != 0 is not nilpotent in Z
    if (d == 1) return true;
    mpz_class power;
    mpz_class base = a.integer();
    mpz_powm_ui(power.get_mpz_t(), base.get_mpz_t(), bit_length(d), d.get_mpz_t());
    return power == 0;
  }
  // Cheap sufficient check through the cached basis first.
  if (normal_form(r.free_ring(), a.poly(), ideal.groebner().basis).is_zero()) return true;
  Rabinowitsch rb(r);
  GroebnerInput in;
  in.background = rb.background;
  for (const auto& g : ideal.generators()) in.generators.push_back(rb.lift(r, g.poly()));
  in.generators.push_back(rb.one_minus_t_times(r, a.poly()));
  return is_unit_basis(rb.ring, buchberger(rb.ring, in).basis);
}

std::optional<RadicalWitness> radical_witness(const Element& a, const FinGenIdeal& ideal) {
  if (!radical_member(a, ideal)) return std::nullopt;
  unsigned cap = current_limits().max_exponent;
  if (ideal.ring().kind() != RingKind::PolyQuotient) {
    cap = std::max<unsigned>(cap, static_cast<unsigned>(bit_length(ideal.groebner().gcd)));
  }
  Element power = a;
  for (unsigned k = 1; k <= cap; ++k) {
    Membership m = ideal_member(power, ideal);
    if (m.member) return RadicalWitness{k, std::move(m.cofactors)};
    power = power * a;
  }
  fail(ErrorKind::ResourceExceeded, "radical exponent search exceeded " + std::to_string(cap));
}

Saturation saturation_member(const Element& a, const Element& f) {
  require_ring(a.ring(), f);
  const Ring& r = a.ring();
  if (a.is_zero()) return {true, 0};
  switch (r.kind()) {
    case RingKind::Integer:
      if (f.is_zero()) return {true, 1};
      return {false, 0};
    case RingKind::Residue: {
      const mpz_class& n = r.modulus();
      mpz_class value = a.integer();
      const std::size_t cap = bit_length(n);
      for (std::size_t k = 0; k <= cap; ++k) {
        if (value % n == 0) return {true, static_cast<unsigned>(k)};
        value = (value * f.integer()) % n;
      }
      return {false, 0};
    }
    case RingKind::PolyQuotient: break;
  }
  // a in (0 : f^oo) iff a lies in relations + <1 - t f> inside K[x, t].
  Rabinowitsch rb(r);
  GroebnerInput in;
  in.background = rb.background;
  in.generators.push_back(rb.one_minus_t_times(r, f.poly()));
  GroebnerOutput out = buchberger(rb.ring, in);
  if (!normal_form(rb.ring, rb.lift(r, a.poly()), out.basis).is_zero()) return {false, 0};
  const unsigned cap = current_limits().max_exponent;
  Element value = a;
  for (unsigned k = 0; k <= cap; ++k) {
    if (value.is_zero()) return {true, k};
    value = value * f;
  }
  fail(ErrorKind::ResourceExceeded,
       "annihilating exponent exceeds " + std::to_string(cap) + " for " + a.to_string());
}

bool BezoutCertificate::verify() const {
  if (generators.empty() || generators.size() != cofactors.size()) return false;
  const Ring& r = generators.front().ring();
  Element sum = r.zero();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].ring() != r || cofactors[i].ring() != r) return false;
    sum = sum + cofactors[i] * generators[i];
  }
  return sum.is_one();
}

std::optional<BezoutCertificate> unimodular_certificate(const std::vector<Element>& elements) {
  if (elements.empty()) fail(ErrorKind::NotUnimodular, "empty vector");
  const Ring& r = elements.front().ring();
  FinGenIdeal ideal(r, elements);
  Membership m = ideal_member(r.one(), ideal);
  if (!m.member) return std::nullopt;
  BezoutCertificate cert{elements, std::move(m.cofactors)};
  if (!cert.verify()) fail(ErrorKind::InvalidWitness, "Bezout certificate failed re-verification");
  return cert;
}

namespace {

class PowerExpansion {
 public:
  PowerExpansion(const BezoutCertificate& cert, unsigned power)
      : cert_(cert), n_(cert.generators.size()), power_(power), total_(n_ * (power - 1) + 1) {
    const Ring& r = cert.generators.front().ring();
    factorial_.push_back(1);
    for (unsigned k = 1; k <= total_; ++k) factorial_.push_back(factorial_.back() * k);
    af_.resize(n_);
    a_.resize(n_);
    f_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Element af = cert.cofactors[j] * cert.generators[j];
      af_[j].push_back(r.one());
      a_[j].push_back(r.one());
      f_[j].push_back(r.one());
      for (unsigned k = 1; k <= total_; ++k) {
        af_[j].push_back(af_[j].back() * af);
        a_[j].push_back(a_[j].back() * cert.cofactors[j]);
        f_[j].push_back(f_[j].back() * cert.generators[j]);
      }
    }
    b_.assign(n_, r.zero());
    exps_.assign(n_, 0);
  }

  std::vector<Element> run() {
    const Ring& r = cert_.generators.front().ring();
    visit(0, total_, std::nullopt, r.one());
    return b_;
  }

 private:
  void visit(std::size_t j, unsigned remaining, std::optional<std::size_t> assigned,
             const Element& partial) {
    if (j + 1 == n_) {
      exps_[j] = remaining;
      leaf(assigned, partial);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      exps_[j] = e;
      if (!assigned && e >= power_) {
        visit(j + 1, remaining - e, j, partial * a_[j][e] * f_[j][e - power_]);
      } else {
        visit(j + 1, remaining - e, assigned, partial * af_[j][e]);
      }
    }
  }

  void leaf(std::optional<std::size_t> assigned, const Element& partial) {
    if (++terms_ % 512 == 0) check_deadline();
    const std::size_t last = n_ - 1;
    const unsigned e = exps_[last];
    Element product = partial;
    if (!assigned) {
      // Pigeonhole: the last exponent must reach the power.
      assigned = last;
      product = product * a_[last][e] * f_[last][e - power_];
    } else {
      product = product * af_[last][e];
    }
    mpz_class coeff = factorial_[total_];
    for (unsigned x : exps_) coeff /= factorial_[x];
    const Ring& r = product.ring();
    b_[*assigned] = b_[*assigned] + r.from_integer(coeff) * product;
  }

  const BezoutCertificate& cert_;
  std::size_t n_;
  unsigned power_;
  unsigned total_;
  std::vector<mpz_class> factorial_;
  std::vector<std::vector<Element>> af_, a_, f_;
  std::vector<Element> b_;
  std::vector<unsigned> exps_;
  std::size_t terms_ = 0;
};

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BezoutCertificate power_certificate(const BezoutCertificate& cert, unsigned power) {
  if (power == 0) fail(ErrorKind::InvalidWitness, "power must be positive");
  if (!cert.verify()) fail(ErrorKind::InvalidWitness, "input certificate does not verify");
  if (power == 1) return cert;
  const std::size_t n = cert.generators.size();
  std::vector<Element> powered;
  for (const auto& g : cert.generators) powered.push_back(g.pow(power));
  const unsigned total = static_cast<unsigned>(n * (power - 1) + 1);
  BezoutCertificate out{powered, {}};
  if (binomial(total + n - 1, n - 1) <= current_limits().max_terms) {
    out.cofactors = PowerExpansion(cert, power).run();
  } else {
    // Too many multinomial terms: fall back to a direct membership search.
    auto direct = unimodular_certificate(powered);
    if (!direct) fail(ErrorKind::InvalidWitness, "powered vector not unimodular");
    out.cofactors = std::move(direct->cofactors);
  }
  if (!out.verify()) fail(ErrorKind::InvalidWitness, "power certificate failed re-verification");
  return out;
}

}  // namespace zkit
