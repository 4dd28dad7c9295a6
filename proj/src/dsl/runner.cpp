#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "zkit/error.hpp"
#include "zkit/glue.hpp"
#include "zkit/limits.hpp"
#include "zkit/run.hpp"
#include "zkit/schemes.hpp"

namespace zkit::dsl {

using nlohmann::json;

namespace {

// ---- certificate claims -------------------------------------------------------

json strings(const std::vector<Element>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

json strings(const std::vector<Fraction>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

json combination(const Ring& ring, const std::string& target, const std::vector<Element>& gens,
                 const std::vector<Element>& cofs) {
  return {{"kind", "combination"}, {"ring", ring.describe()}, {"target", target},
          {"generators", strings(gens)}, {"cofactors", strings(cofs)}};
}

json combination(const BezoutCertificate& c) {
  return combination(c.generators.front().ring(), "1", c.generators, c.cofactors);
}

json radical_claim(const Element& g, const RadicalWitness& w, const std::vector<Element>& gens) {
  const std::string target = "(" + g.to_string() + ")^" + std::to_string(w.exponent);
  return combination(g.ring(), target, gens, w.cofactors);
}

json annihilator(const Element& a, const Element& f, unsigned k) {
  return {{"kind", "annihilator"}, {"ring", a.ring().describe()}, {"a", a.to_string()},
          {"f", f.to_string()}, {"k", k}};
}

json unit_claim(const Element& e, const Element& inv) {
  return {{"kind", "unit"}, {"ring", e.ring().describe()}, {"element", e.to_string()},
          {"inverse", inv.to_string()}};
}

json hom_claim(const RingHom& phi) {
  return {{"kind", "hom"}, {"domain", phi.domain().describe()},
          {"codomain", phi.codomain().describe()}, {"images", strings(phi.images())}};
}

json evaluation_claim(const RingHom& phi, const Element& e, const Element& value) {
  json c = hom_claim(phi);
  c["kind"] = "evaluation";
  c["element"] = e.to_string();
  c["value"] = value.to_string();
  return c;
}

json local_combination(const LocalizedRing& L, const std::string& target,
                       const std::vector<Fraction>& gens, const std::vector<Fraction>& cofs) {
  return {{"kind", "local_combination"}, {"ring", L.base().describe()},
          {"denominator", L.f().to_string()}, {"target", target},
          {"generators", strings(gens)}, {"cofactors", strings(cofs)}};
}

// y * f == 1 in the presentation of a chart.
std::optional<json> presentation_unit(const LocalizedRing& L) {
  if (!L.has_presentation()) return std::nullopt;
  const Ring& P = L.presentation();
  Element f = to_presentation(L.canonical(L.f()));
  return unit_claim(f, P.variable(L.inverse_name()));
}

// ---- values -------------------------------------------------------------------

struct Value {
  ValueType type = ValueType::Elem;
  std::vector<Element> items;  // one element, or ideal generators
  std::optional<ZarElt> latt;
};

struct Outcome {
  std::string status = "ok";
  json result;
  json certificate;
};

class Runner {
 public:
  explicit Runner(const RunOptions& options) : options_(options), rng_(options.seed) {}

  Report run(const Script& script) {
    Report report;
    for (const auto& st : script.statements) {
      auto entry = execute(st);
      if (!entry) continue;
      const bool stop = options_.fail_fast && entry->status == "error";
      report.results.push_back(std::move(*entry));
      if (stop) break;
    }
    return report;
  }

 private:
  Limits limits() const {
    Limits l = current_limits();
    if (options_.max_pairs) l.max_pairs = *options_.max_pairs;
    if (options_.max_exponent) l.max_exponent = *options_.max_exponent;
    if (options_.timeout_ms) {
      l.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(*options_.timeout_ms);
    }
    return l;
  }

  std::optional<ResultEntry> execute(const Stmt& st) {
    ScopedLimits scoped(limits());
    const auto start = std::chrono::steady_clock::now();
    ResultEntry entry;
    entry.cmd = print(st);
    bool emit = true;
    try {
      Outcome out;
      emit = dispatch(st, out);
      entry.status = out.status;
      entry.result = std::move(out.result);
      entry.certificate = std::move(out.certificate);
    } catch (const Error& e) {
      entry.status = "error";
      entry.result = {{"kind", std::string(zkit::to_string(e.kind()))}, {"message", e.what()}};
      entry.certificate = nullptr;
      emit = true;
    } catch (const std::exception& e) {
      entry.status = "error";
      entry.result = {{"kind", "InternalError"}, {"message", e.what()}};
      entry.certificate = nullptr;
      emit = true;
    }
    entry.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!emit) return std::nullopt;
    return entry;
  }

  const Ring& ring(const std::string& name) const {
    auto it = rings_.find(name);
    if (it == rings_.end()) fail(ErrorKind::UnknownName, "ring " + name + " is unavailable");
    return it->second;
  }

  void forget_bindings(const std::string& ring_name) {
    for (auto it = declared_.begin(); it != declared_.end();) {
      if (it->second == ring_name) {
        env_.erase(it->first);
        it = declared_.erase(it);
      } else {
        ++it;
      }
    }
  }

  // Expressions over `R`; `ctx` is the declared ring name ("" for anonymous rings).
  Value eval(const Expr& e, const Ring& R, const std::string& ctx) {
    auto elem = [&](const Expr& x) { return eval(x, R, ctx).items.at(0); };
    auto latt = [&](const Expr& x) { return *eval(x, R, ctx).latt; };
    auto one = [](Element x) { return Value{ValueType::Elem, {std::move(x)}, std::nullopt}; };
    auto lattice = [](ZarElt u) { return Value{ValueType::Latt, {}, std::move(u)}; };
    switch (e.kind) {
      case Expr::Kind::Int: return one(R.from_integer(e.value));
      case Expr::Kind::Name: {
        auto d = declared_.find(e.name);
        if (!ctx.empty() && d != declared_.end() && d->second == ctx) {
          auto v = env_.find(e.name);
          if (v == env_.end()) fail(ErrorKind::UnknownName, "'" + e.name + "' is unavailable");
          return v->second;
        }
        return one(R.variable(e.name));
      }
      case Expr::Kind::Add: return one(elem(*e.args[0]) + elem(*e.args[1]));
      case Expr::Kind::Sub: return one(elem(*e.args[0]) - elem(*e.args[1]));
      case Expr::Kind::Mul: return one(elem(*e.args[0]) * elem(*e.args[1]));
      case Expr::Kind::Neg: return one(-elem(*e.args[0]));
      case Expr::Kind::Pow: return one(elem(*e.args[0]).pow(static_cast<unsigned>(e.value.get_ui())));
      case Expr::Kind::Div: return one(elem(*e.args[0]) * R.from_rational(mpq_class(1, e.value)));
      case Expr::Kind::IdealLit: {
        Value v{ValueType::Ideal, {}, std::nullopt};
        for (const auto& a : e.args) v.items.push_back(elem(*a));
        return v;
      }
      case Expr::Kind::Support: {
        std::vector<Element> gens;
        for (const auto& a : e.args) gens.push_back(elem(*a));
        return lattice(ZarElt(R, std::move(gens)));
      }
      case Expr::Kind::Top: return lattice(ZarElt::top(R));
      case Expr::Kind::Bot: return lattice(ZarElt::bottom(R));
      case Expr::Kind::Join: return lattice(zar_join(latt(*e.args[0]), latt(*e.args[1])));
      case Expr::Kind::Meet: return lattice(zar_meet(latt(*e.args[0]), latt(*e.args[1])));
    }
    fail(ErrorKind::TypeMismatch, "cannot evaluate " + print(e));
  }

  static Ring default_codomain(const Ring& R) {
    if (R.kind() == RingKind::PolyQuotient) return Ring::field(R.base_field());
    return R;
  }

  RingHom hom_of(const Stmt& st, const Ring& R) {
    Ring B = st.ring ? build_ring(*st.ring) : default_codomain(R);
    std::vector<std::optional<Element>> slots(R.kind() == RingKind::PolyQuotient ? R.nvars() : 0);
    for (std::size_t i = 0; i < st.hom.names.size(); ++i) {
      auto idx = R.variable_index(st.hom.names[i]);
      if (!idx) fail(ErrorKind::UnknownVariable, "'" + st.hom.names[i] + "' is not a variable");
      slots[*idx] = eval(*st.hom.images[i], B, "").items.at(0);
    }
    std::vector<Element> images;
    for (auto& s : slots) {
      if (!s) fail(ErrorKind::NotWellDefined, "every domain variable needs an image");
      images.push_back(*s);
    }
    return RingHom::make(R, B, std::move(images));
  }

  // Returns false for statements that produce no report entry.
  bool dispatch(const Stmt& st, Outcome& out) {
    switch (st.kind) {
      case Stmt::Kind::RingDecl: {
        rings_.erase(st.name);
        forget_bindings(st.name);
        rings_.emplace(st.name, build_ring(*st.ring));
        return false;
      }
      case Stmt::Kind::Use: ring(st.name); return false;
      case Stmt::Kind::Bind: {
        declared_[st.name] = st.context;
        env_.erase(st.name);
        const Ring& R = ring(st.context);
        env_[st.name] = eval(*st.a, R, st.context);
        return false;
      }
      case Stmt::Kind::Check: return check(st, out);
      case Stmt::Kind::Unimodular: {
        const Ring& R = ring(st.context);
        auto gens = eval(*st.a, R, st.context).items;
        auto cert = unimodular_certificate(gens);
        if (!cert) {
          out.status = "refuted";
          out.result = {{"unimodular", false}, {"failing", "1 is not in the ideal"}};
          out.certificate = nullptr;
          return true;
        }
        out.result = {{"unimodular", true}, {"cofactors", strings(cert->cofactors)}};
        out.certificate = json::array({combination(*cert)});
        return true;
      }
      case Stmt::Kind::RadicalMember: {
        const Ring& R = ring(st.context);
        Element a = eval(*st.a, R, st.context).items.at(0);
        auto gens = eval(*st.b, R, st.context).items;
        auto w = radical_witness(a, FinGenIdeal(R, gens));
        if (!w) {
          out.status = "refuted";
          out.result = {{"member", false}, {"failing", "no power of " + a.to_string() + " lies in the ideal"}};
          out.certificate = nullptr;
          return true;
        }
        out.result = {{"member", true}, {"exponent", w->exponent}, {"cofactors", strings(w->cofactors)}};
        out.certificate = json::array({radical_claim(a, *w, gens)});
        return true;
      }
      case Stmt::Kind::Localize: return localize(st, out);
      case Stmt::Kind::Glue: return glue(st, out);
      case Stmt::Kind::Points: {
        const Ring& R = ring(st.name);
        Ring B = build_ring(*st.ring);
        ZarElt u = st.a ? *eval(*st.a, R, st.name).latt : ZarElt::top(R);
        auto pts = points_over(compact_open(u), B);
        json list = json::array();
        out.certificate = json::array();
        for (const auto& p : pts) {
          list.push_back(strings(p.phi.images()));
          out.certificate.push_back(hom_claim(p.phi));
          out.certificate.push_back(combination(p.membership));
        }
        out.result = {{"open", u.to_string()}, {"values", B.describe()}, {"count", pts.size()}, {"points", list}};
        return true;
      }
      case Stmt::Kind::Cover: {
        const Ring& R = ring(st.context);
        AffineCover cover = affine_cover(compact_open(*eval(*st.a, R, st.context).latt));
        out.result = cover_json(cover);
        out.certificate = cover_claims(cover);
        bool below = true;
        for (const auto& m : cover.members) below = below && m.below;
        if (!cover.join_equal || !below) out.status = "refuted";
        return true;
      }
      case Stmt::Kind::Member: {
        const Ring& R = ring(st.context);
        ZarElt u = *eval(*st.a, R, st.context).latt;
        RingHom phi = hom_of(st, R);
        auto pt = point_membership(compact_open(u), phi);
        if (!pt) {
          out.status = "refuted";
          out.result = {{"member", false}, {"image", lattice_morphism(phi, u).to_string()},
                        {"failing", "the image of the open is not the top element"}};
          out.certificate = json::array({hom_claim(phi)});
          return true;
        }
        out.result = {{"member", true}, {"map", phi.describe()}, {"cofactors", strings(pt->membership.cofactors)}};
        out.certificate = json::array({hom_claim(phi), combination(pt->membership)});
        return true;
      }
      case Stmt::Kind::Eval: {
        const Ring& R = ring(st.context);
        Element e = eval(*st.a, R, st.context).items.at(0);
        RingHom phi = hom_of(st, R);
        Element v = phi.apply(e);
        out.result = {{"value", v.to_string()}, {"values", phi.codomain().describe()}};
        out.certificate = json::array({evaluation_claim(phi, e, v)});
        return true;
      }
      case Stmt::Kind::Qcqs: {
        const Ring& R = ring(st.context);
        QcqsReport rep = qcqs_certificate(compact_open(*eval(*st.a, R, st.context).latt), rng_);
        json samples = json::array();
        for (const auto& t : rep.samples) {
          samples.push_back({{"values", t.values}, {"map", t.map}, {"cover", t.cover},
                             {"locally_member", t.locally_member}, {"glued_member", t.glued_member},
                             {"glued_matches", t.glued_matches}, {"passed", t.passed}});
        }
        out.result = cover_json(rep.cover);
        out.result["degenerate"] = rep.degenerate;
        out.result["samples"] = samples;
        out.result["passed"] = rep.passed;
        out.certificate = cover_claims(rep.cover);
        if (!rep.passed) out.status = "refuted";
        return true;
      }
      case Stmt::Kind::Verify: return verify(st, out);
    }
    return false;
  }

  bool check(const Stmt& st, Outcome& out) {
    const Ring& R = ring(st.context);
    Value a = eval(*st.a, R, st.context);
    Value b = eval(*st.b, R, st.context);
    out.certificate = nullptr;
    if (a.type == ValueType::Elem) {
      const bool holds = a.items[0] == b.items[0];
      out.result = {{"holds", holds}, {"left", a.items[0].to_string()}, {"right", b.items[0].to_string()}};
      if (!holds) out.status = "refuted";
      return true;
    }
    json claims = json::array();
    auto direction = [&](const ZarElt& u, const ZarElt& v) -> std::optional<std::string> {
      for (const auto& g : u.generators()) {
        auto w = radical_witness(g, FinGenIdeal(R, v.generators()));
        if (!w) return g.to_string() + " is not in the radical of the ideal of " + v.to_string();
        claims.push_back(radical_claim(g, *w, v.generators()));
      }
      return std::nullopt;
    };
    auto failing = direction(*a.latt, *b.latt);
    if (!failing && st.op == "==") failing = direction(*b.latt, *a.latt);
    out.result = {{"holds", !failing}, {"left", a.latt->to_string()}, {"right", b.latt->to_string()}};
    if (failing) {
      out.status = "refuted";
      out.result["failing"] = *failing;
      return true;
    }
    out.certificate = claims;
    return true;
  }

  bool localize(const Stmt& st, Outcome& out) {
    const Ring& R = ring(st.name);
    Element f = eval(*st.a, R, st.name).items.at(0);
    LocalizedRing L(R, f);
    if (!st.alias.empty()) {
      rings_.erase(st.alias);
      forget_bindings(st.alias);
      rings_.emplace(st.alias, L.presentation());
    }
    Fraction unit = L.canonical(f), inv = L.inverse_of_f();
    out.result = {{"ring", L.describe()}, {"zero_ring", frac_eq(L.canonical(R.one()), L.canonical(R.zero()))}};
    out.certificate = json::array({local_combination(L, "1/1", {unit}, {inv})});
    if (L.has_presentation()) {
      out.result["presentation"] = L.presentation().describe();
      out.result["inverse"] = L.inverse_name();
      out.certificate.push_back(*presentation_unit(L));
    }
    return true;
  }

  bool glue(const Stmt& st, Outcome& out) {
    const Ring& R = ring(st.context);
    UnimodularCover cover = make_cover(eval(*st.a, R, st.context).items);
    if (st.fractions.size() != cover.size()) {
      fail(ErrorKind::RingMismatch, "the cover has " + std::to_string(cover.size()) + " members but " +
                                        std::to_string(st.fractions.size()) + " fractions were given");
    }
    std::vector<Fraction> family;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      const FracItem& item = st.fractions[i];
      Element num = eval(*item.numerator, R, st.context).items.at(0);
      Element den = eval(*item.denominator, R, st.context).items.at(0);
      LocalizedRing Li = cover.localization(i);
      if (den.is_one()) {
        family.push_back(Fraction(Li, num, 0));
      } else if (den == cover.elements[i]) {
        family.push_back(Fraction(Li, num, item.exponent));
      } else {
        fail(ErrorKind::BaseMismatch, "denominator " + den.to_string() + " of fraction " + std::to_string(i) +
                                          " is not " + cover.elements[i].to_string());
      }
    }
    auto compat = check_compatibility(cover, family);
    if (!compat.family) {
      out.status = "refuted";
      out.result = {{"compatible", false}, {"pair", {compat.refutation->i, compat.refutation->j}},
                    {"failing", compat.refutation->detail}};
      out.certificate = nullptr;
      return true;
    }
    Element g = glue_element(*compat.family);
    json claims = json::array({combination(cover.certificate)});
    json witnesses = json::array();
    for (const auto& w : compat.family->witnesses) {
      witnesses.push_back({{"i", w.i}, {"j", w.j}, {"exponent", w.exponent}});
      DoubleLocalization dl(cover.elements[w.i], cover.elements[w.j]);
      Fraction a = dl.chi_left(family[w.i]), b = dl.chi_right(family[w.j]);
      auto k = frac_eq_witness(a, b);
      const Element& F = dl.target().f();
      claims.push_back(annihilator(a.numerator() * F.pow(b.exponent()) - b.numerator() * F.pow(a.exponent()),
                                   F, *k));
    }
    for (std::size_t i = 0; i < cover.size(); ++i) {
      Fraction restricted = cover.localization(i).canonical(g);
      auto k = frac_eq_witness(restricted, family[i]);
      if (!k) fail(ErrorKind::IncompatibleFamily, "glued element does not restrict correctly");
      const Element& f = cover.elements[i];
      claims.push_back(annihilator(g * f.pow(family[i].exponent()) - family[i].numerator(), f, *k));
    }
    out.result = {{"element", g.to_string()}, {"witnesses", witnesses},
                  {"cofactors", strings(cover.certificate.cofactors)}};
    out.certificate = claims;
    return true;
  }

  static json cover_json(const AffineCover& cover) {
    json members = json::array(), charts = json::array();
    for (const auto& m : cover.members) {
      members.push_back(m.open.to_string());
      charts.push_back(m.chart.has_presentation() ? m.chart.presentation().describe() : m.chart.describe());
    }
    return {{"open", cover.open.to_string()}, {"members", members}, {"charts", charts},
            {"join_equal", cover.join_equal}, {"top", cover.top_certificate.has_value()}};
  }

  static json cover_claims(const AffineCover& cover) {
    json claims = json::array();
    if (cover.top_certificate) claims.push_back(combination(*cover.top_certificate));
    for (const auto& m : cover.members) {
      if (auto c = presentation_unit(m.chart)) claims.push_back(*c);
    }
    return claims;
  }

  bool verify(const Stmt& st, Outcome& out) {
    namespace fs = std::filesystem;
    fs::path path(st.path);
    if (path.is_relative() && !options_.base_dir.empty()) path = fs::path(options_.base_dir) / path;
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot open " + path.string());
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) fail(ErrorKind::IoError, path.string() + " is not valid JSON");
    out.certificate = nullptr;
    std::string why;
    if (!validate_report(doc, &why)) {
      out.status = "refuted";
      out.result = {{"schema", false}, {"failing", why}};
      return true;
    }
    std::size_t claims = 0, verified = 0;
    json failures = json::array();
    const auto& results = doc["results"];
    for (std::size_t r = 0; r < results.size(); ++r) {
      const auto& cert = results[r]["certificate"];
      if (cert.is_null()) continue;
      for (std::size_t c = 0; c < cert.size(); ++c) {
        ++claims;
        if (verify_claim(cert[c], &why)) {
          ++verified;
        } else {
          failures.push_back({{"result", r}, {"claim", c}, {"failing", why}});
        }
      }
    }
    out.result = {{"schema", true}, {"claims", claims}, {"verified", verified}, {"failures", failures}};
    if (verified != claims) out.status = "refuted";
    return true;
  }

  RunOptions options_;
  std::mt19937_64 rng_;
  std::map<std::string, Ring> rings_;
  std::map<std::string, std::string> declared_;  // binding name -> ring name
  std::map<std::string, Value> env_;
};

}  // namespace

Report run(const Script& script, const RunOptions& options) { return Runner(options).run(script); }

Report run_source(const std::string& source, const RunOptions& options) {
  Script script;
  try {
    script = parse(source);
  } catch (const Error& e) {
    Report r;
    r.results.push_back(ResultEntry{"<parse>", "error",
                                    {{"kind", std::string(zkit::to_string(e.kind()))}, {"message", e.what()}},
                                    nullptr, 0});
    return r;
  }
  return run(script, options);
}

json Report::to_json() const {
  json results = json::array();
  for (const auto& r : this->results) {
    results.push_back({{"cmd", r.cmd}, {"status", r.status}, {"result", r.result},
                       {"certificate", r.certificate}, {"ms", r.ms}});
  }
  return {{"version", 1}, {"results", results}};
}

Report Report::from_json(const json& j) {
  std::string why;
  if (!validate_report(j, &why)) fail(ErrorKind::SyntaxError, "invalid report: " + why);
  Report r;
  for (const auto& e : j["results"]) {
    r.results.push_back(ResultEntry{e["cmd"].get<std::string>(), e["status"].get<std::string>(), e["result"],
                                    e["certificate"], e["ms"].get<double>()});
  }
  return r;
}

int Report::exit_code() const {
  int code = 0;
  for (const auto& r : results) {
    if (r.status == "error") return 2;
    if (r.status == "refuted") code = 1;
  }
  return code;
}

std::string Report::render() const {
  std::ostringstream out;
  out << std::left << std::setw(8) << "status" << std::right << std::setw(10) << "ms" << "  command\n";
  for (const auto& r : results) {
    out << std::left << std::setw(8) << r.status << std::right << std::setw(10) << std::fixed
        << std::setprecision(2) << r.ms << "  " << r.cmd << "\n";
    out << std::setw(20) << "" << r.result.dump() << "\n";
  }
  return out.str();
}

}  // namespace zkit::dsl
