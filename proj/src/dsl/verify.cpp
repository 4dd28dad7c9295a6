#include <set>

#include "zkit/error.hpp"
#include "zkit/hom.hpp"
#include "zkit/localization.hpp"
#include "zkit/run.hpp"

namespace zkit::dsl {

using nlohmann::json;

namespace {

// Elements of an anonymous ring: only its variables are in scope.
Element build(const Ring& ring, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int: return ring.from_integer(e.value);
    case Expr::Kind::Name: return ring.variable(e.name);
    case Expr::Kind::Add: return build(ring, *e.args[0]) + build(ring, *e.args[1]);
    case Expr::Kind::Sub: return build(ring, *e.args[0]) - build(ring, *e.args[1]);
    case Expr::Kind::Mul: return build(ring, *e.args[0]) * build(ring, *e.args[1]);
    case Expr::Kind::Neg: return -build(ring, *e.args[0]);
    case Expr::Kind::Pow: return build(ring, *e.args[0]).pow(static_cast<unsigned>(e.value.get_ui()));
    case Expr::Kind::Div: return build(ring, *e.args[0]) * ring.from_rational(mpq_class(1, e.value));
    default: break;
  }
  fail(ErrorKind::TypeMismatch, "not a ring element: " + print(e));
}

std::vector<Element> elements(const Ring& ring, const json& list) {
  std::vector<Element> out;
  for (const auto& s : list) out.push_back(element_from_text(ring, s.get<std::string>()));
  return out;
}

Fraction fraction_from_text(const LocalizedRing& L, const std::string& text) {
  FracItem f = parse_fraction_text(text, L.base().kind() == RingKind::PolyQuotient
                                             ? L.base().variables()
                                             : std::vector<std::string>{});
  Element num = build(L.base(), *f.numerator);
  Element den = build(L.base(), *f.denominator);
  if (den.is_one()) return Fraction(L, num, 0);
  if (den != L.f()) {
    fail(ErrorKind::BaseMismatch, "denominator " + den.to_string() + " is not " + L.f().to_string());
  }
  return Fraction(L, num, f.exponent);
}

bool check(const json& c) {
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "combination") {
    Ring r = ring_from_text(c.at("ring").get<std::string>());
    auto gens = elements(r, c.at("generators"));
    auto cofs = elements(r, c.at("cofactors"));
    if (gens.size() != cofs.size()) return false;
    Element sum = r.zero();
    for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + cofs[i] * gens[i];
    return sum == element_from_text(r, c.at("target").get<std::string>());
  }
  if (kind == "annihilator") {
    Ring r = ring_from_text(c.at("ring").get<std::string>());
    Element a = element_from_text(r, c.at("a").get<std::string>());
    Element f = element_from_text(r, c.at("f").get<std::string>());
    const unsigned k = c.at("k").get<unsigned>();
    return (a * f.pow(k)).is_zero();
  }
  if (kind == "unit") {
    Ring r = ring_from_text(c.at("ring").get<std::string>());
    Element e = element_from_text(r, c.at("element").get<std::string>());
    Element inv = element_from_text(r, c.at("inverse").get<std::string>());
    return (e * inv).is_one();
  }
  if (kind == "hom" || kind == "evaluation") {
    Ring dom = ring_from_text(c.at("domain").get<std::string>());
    Ring cod = ring_from_text(c.at("codomain").get<std::string>());
    RingHom phi = RingHom::make(dom, cod, elements(cod, c.at("images")));
    if (kind == "hom") return true;
    Element e = element_from_text(dom, c.at("element").get<std::string>());
    return phi.apply(e) == element_from_text(cod, c.at("value").get<std::string>());
  }
  if (kind == "local_combination") {
    Ring r = ring_from_text(c.at("ring").get<std::string>());
    LocalizedRing L(r, element_from_text(r, c.at("denominator").get<std::string>()));
    std::vector<Fraction> gens, cofs;
    for (const auto& s : c.at("generators")) gens.push_back(fraction_from_text(L, s.get<std::string>()));
    for (const auto& s : c.at("cofactors")) cofs.push_back(fraction_from_text(L, s.get<std::string>()));
    if (gens.size() != cofs.size()) return false;
    Fraction sum = L.canonical(r.zero());
    for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + cofs[i] * gens[i];
    return frac_eq(sum, fraction_from_text(L, c.at("target").get<std::string>()));
  }
  fail(ErrorKind::SyntaxError, "unknown claim kind '" + kind + "'");
}

}  // namespace

Ring build_ring(const RingExpr& r) {
  switch (r.kind) {
    case RingExpr::Kind::Integers: return Ring::integers();
    case RingExpr::Kind::Residues: return Ring::residues(r.modulus);
    case RingExpr::Kind::Rationals:
    case RingExpr::Kind::PrimeField: break;
  }
  Field field = r.kind == RingExpr::Kind::Rationals ? Field::rationals() : Field::prime(r.modulus);
  Ring free = Ring::polynomial(field, r.vars, {}, r.order);
  std::vector<Poly> relations;
  for (const auto& e : r.relations) relations.push_back(build(free, *e).poly());
  return Ring::polynomial(field, r.vars, std::move(relations), r.order);
}

Ring ring_from_text(const std::string& text) { return build_ring(parse_ring_text(text)); }

Element element_from_text(const Ring& ring, const std::string& text) {
  std::vector<std::string> vars;
  if (ring.kind() == RingKind::PolyQuotient) vars = ring.variables();
  return build(ring, *parse_element_text(text, vars));
}

bool verify_claim(const json& claim, std::string* why) {
  try {
    if (check(claim)) return true;
    if (why) *why = "claim does not hold";
  } catch (const std::exception& e) {
    if (why) *why = e.what();
  }
  return false;
}

bool validate_report(const json& report, std::string* why) {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!report.is_object()) return bad("report is not an object");
  if (!report.contains("version") || report["version"] != 1) return bad("version must be 1");
  if (!report.contains("results") || !report["results"].is_array()) return bad("results must be an array");
  static const std::set<std::string> statuses = {"ok", "refuted", "error"};
  for (const auto& r : report["results"]) {
    if (!r.is_object()) return bad("result entry is not an object");
    if (!r.contains("cmd") || !r["cmd"].is_string()) return bad("cmd must be a string");
    if (!r.contains("status") || !r["status"].is_string() || !statuses.count(r["status"].get<std::string>())) {
      return bad("status must be ok, refuted or error");
    }
    if (!r.contains("result")) return bad("missing result");
    if (!r.contains("certificate")) return bad("missing certificate");
    const auto& c = r["certificate"];
    if (!c.is_null()) {
      if (!c.is_array()) return bad("certificate must be an array or null");
      for (const auto& claim : c) {
        if (!claim.is_object() || !claim.contains("kind") || !claim["kind"].is_string()) {
          return bad("claims need a kind");
        }
      }
    }
    if (!r.contains("ms") || !r["ms"].is_number()) return bad("ms must be a number");
  }
  return true;
}

}  // namespace zkit::dsl
