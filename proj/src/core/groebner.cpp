#include "zkit/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>

#include "zkit/error.hpp"
#include "zkit/limits.hpp"

namespace zkit {

namespace {

std::atomic<bool> g_self_check{false};
std::atomic<std::size_t> g_self_checks{0};

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

// Reduces f by `divisors` (only the active ones), returning quotients keyed by
// divisor index.
struct Reducer {
  const PolyRing& ring;
  const std::vector<Poly>& polys;
  const std::vector<bool>* active;  // nullptr: all divisors active

  std::optional<std::size_t> find(const Exponents& e) const {
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active && !(*active)[k]) continue;
      if (polys[k].is_zero()) continue;
      if (divides(polys[k].lead().exponents, e)) return k;
    }
    return std::nullopt;
  }

  // quotients may be null when the caller does not track them.
  Poly reduce(Poly p, std::vector<Poly>* quotients) const {
    Poly remainder;
    unsigned steps = 0;
    while (!p.is_zero()) {
      if (++steps % 256 == 0) check_deadline();
      const Term lt = p.lead();
      if (auto k = find(lt.exponents)) {
        const Poly& g = polys[*k];
        mpq_class c = ring.field().mul(lt.coeff, ring.field().inv(g.lead().coeff));
        Exponents e = quotient(lt.exponents, g.lead().exponents);
        p = ring.sub_mul_term(p, e, c, g);
        if (quotients) {
          (*quotients)[*k] = ring.add((*quotients)[*k], ring.monomial(e, c));
        }
      } else {
        remainder.terms.push_back(lt);
        p.terms.erase(p.terms.begin());
      }
    }
    return remainder;
  }
};

}  // namespace

Division divide(const PolyRing& ring, const Poly& f, const std::vector<Poly>& divisors) {
  Division d;
  d.quotients.assign(divisors.size(), Poly{});
  Reducer reducer{ring, divisors, nullptr};
  d.remainder = reducer.reduce(f, &d.quotients);
  return d;
}

Poly normal_form(const PolyRing& ring, const Poly& f, const std::vector<Poly>& basis) {
  Reducer reducer{ring, basis, nullptr};
  return reducer.reduce(f, nullptr);
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
};

class Engine {
 public:
  Engine(const PolyRing& ring, const GroebnerInput& input)
      : ring_(ring), input_(input), ngens_(input.generators.size()) {}

  GroebnerOutput run() {
    const Limits& limits = current_limits();
    for (const auto& b : input_.background) {
      if (b.is_zero()) continue;
      push(ring_.make_monic(b), zero_cofactors(), /*with_pairs=*/false);
    }
    for (std::size_t i = 0; i < ngens_; ++i) {
      std::vector<Poly> cof = zero_cofactors();
      if (input_.track) cof[i] = ring_.one();
      if (add_reduced(input_.generators[i], std::move(cof))) return unit_output();
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > limits.max_pairs) {
        fail(ErrorKind::ResourceExceeded, "Buchberger pair limit exceeded");
      }
      check_deadline();
      Pair p = take_pair();
      Poly s = spoly(p, s_cof_);
      if (add_reduced(std::move(s), std::move(s_cof_))) return unit_output();
    }
    return finish();
  }

 private:
  std::vector<Poly> zero_cofactors() const {
    return input_.track ? std::vector<Poly>(ngens_) : std::vector<Poly>{};
  }

  Poly reduce_cof(const Poly& c) const {
    if (input_.background.empty()) return c;
    return normal_form(ring_, c, input_.background);
  }

  // Reduces `p` by the active basis; when the remainder is nonzero it is made
  // monic and inserted. Returns true when the ideal became the unit ideal.
  bool add_reduced(Poly p, std::vector<Poly> cof) {
    std::vector<Poly> quotients(polys_.size());
    Reducer reducer{ring_, polys_, &active_};
    Poly r = reducer.reduce(std::move(p), input_.track ? &quotients : nullptr);
    if (r.is_zero()) return false;
    if (input_.track) {
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (quotients[k].is_zero()) continue;
        for (std::size_t i = 0; i < ngens_; ++i) {
          if (cofs_[k][i].is_zero()) continue;
          cof[i] = ring_.sub(cof[i], ring_.mul(quotients[k], cofs_[k][i]));
        }
      }
      mpq_class inv = ring_.field().inv(r.lead().coeff);
      for (auto& c : cof) c = reduce_cof(ring_.scale(c, inv));
    }
    r = ring_.make_monic(r);
    bool unit = ring_.is_constant(r);
    push(std::move(r), std::move(cof), /*with_pairs=*/true);
    if (polys_.size() > current_limits().max_basis) {
      fail(ErrorKind::ResourceExceeded, "Gröbner basis size limit exceeded");
    }
    return unit;
  }

  void push(Poly h, std::vector<Poly> cof, bool with_pairs) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    cofs_.push_back(std::move(cof));
    active_.push_back(true);
    if (with_pairs) update(hi);
  }

  // Gebauer-Möller update for the new element hi.
  void update(std::size_t hi) {
    const Exponents& lh = polys_[hi].lead().exponents;
    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      c.push_back(Pair{g, hi, lcm(polys_[g].lead().exponents, lh)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = coprime(polys_[p.i].lead().exponents, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (divides(c[b].lcm, p.lcm)) keep = false;
        }
        for (const auto& q : d) {
          if (!keep) break;
          if (divides(q.lcm, p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (auto& p : d) {
      if (!coprime(polys_[p.i].lead().exponents, lh)) e.push_back(std::move(p));
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      const Exponents& li = polys_[p.i].lead().exponents;
      const Exponents& lj = polys_[p.j].lead().exponents;
      bool drop = divides(lh, p.lcm) && lcm(li, lh) != p.lcm && lcm(lj, lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& p : e) pairs_.push_back(std::move(p));
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && divides(lh, polys_[g].lead().exponents)) active_[g] = false;
    }
  }

  Pair take_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (ring_.compare(pairs_[k].lcm, pairs_[best].lcm) == std::strong_ordering::less) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  Poly spoly(const Pair& p, std::vector<Poly>& cof) {
    const Poly& a = polys_[p.i];
    const Poly& b = polys_[p.j];
    Exponents ea = quotient(p.lcm, a.lead().exponents);
    Exponents eb = quotient(p.lcm, b.lead().exponents);
    Poly s = ring_.sub(ring_.mul_term(a, ea, 1), ring_.mul_term(b, eb, 1));
    cof = zero_cofactors();
    if (input_.track) {
      for (std::size_t i = 0; i < ngens_; ++i) {
        cof[i] = ring_.sub(ring_.mul_term(cofs_[p.i][i], ea, 1), ring_.mul_term(cofs_[p.j][i], eb, 1));
      }
    }
    return s;
  }

  GroebnerOutput unit_output() {
    GroebnerOutput out;
    out.basis.push_back(ring_.one());
    if (input_.track) out.cofactors.push_back(cofs_.back());
    return out;
  }

  GroebnerOutput finish() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) idx.push_back(k);
    }
    std::sort(idx.begin(), idx.end(), [this](std::size_t x, std::size_t y) {
      return ring_.compare(polys_[x].lead().exponents, polys_[y].lead().exponents) ==
             std::strong_ordering::less;
    });
    // Interreduce tails; leading terms are already pairwise non-divisible.
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> cofs;
    for (std::size_t k : idx) {
      basis.push_back(polys_[k]);
      cofs.push_back(cofs_[k]);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Poly> others;
      for (std::size_t m = 0; m < basis.size(); ++m) others.push_back(m == k ? Poly{} : basis[m]);
      Poly head{{basis[k].lead()}};
      Poly tail = ring_.sub(basis[k], head);
      std::vector<Poly> quotients(others.size());
      Reducer reducer{ring_, others, nullptr};
      Poly reduced_tail = reducer.reduce(tail, input_.track ? &quotients : nullptr);
      basis[k] = ring_.add(head, reduced_tail);
      if (input_.track) {
        for (std::size_t m = 0; m < others.size(); ++m) {
          if (quotients[m].is_zero()) continue;
          for (std::size_t i = 0; i < ngens_; ++i) {
            cofs[k][i] = ring_.sub(cofs[k][i], ring_.mul(quotients[m], cofs[m][i]));
          }
        }
        for (auto& c : cofs[k]) c = reduce_cof(c);
      }
    }
    GroebnerOutput out;
    out.basis = std::move(basis);
    if (input_.track) out.cofactors = std::move(cofs);
    return out;
  }

  const PolyRing& ring_;
  const GroebnerInput& input_;
  std::size_t ngens_;
  std::vector<Poly> polys_;
  std::vector<std::vector<Poly>> cofs_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Poly> s_cof_;
};

}  // namespace

GroebnerOutput buchberger(const PolyRing& ring, const GroebnerInput& input) {
  Engine engine(ring, input);
  GroebnerOutput out = engine.run();
  if (g_self_check.load()) {
    g_self_checks.fetch_add(1);
    if (!satisfies_buchberger_criterion(ring, out.basis)) {
      throw std::logic_error("Buchberger criterion violated by computed basis");
    }
  }
  return out;
}

bool satisfies_buchberger_criterion(const PolyRing& ring, const std::vector<Poly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Poly& a = basis[i];
      const Poly& b = basis[j];
      Exponents l = lcm(a.lead().exponents, b.lead().exponents);
      mpq_class ca = ring.field().inv(a.lead().coeff);
      mpq_class cb = ring.field().inv(b.lead().coeff);
      Poly s = ring.sub(ring.mul_term(a, quotient(l, a.lead().exponents), ca),
                        ring.mul_term(b, quotient(l, b.lead().exponents), cb));
      if (!normal_form(ring, s, basis).is_zero()) return false;
    }
  }
  return true;
}

void set_groebner_self_check(bool enabled) { g_self_check.store(enabled); }

std::size_t groebner_self_checks_run() { return g_self_checks.load(); }

}  // namespace zkit
