#include <sstream>

#include "zkit/dsl.hpp"

namespace zkit::dsl {

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Join: return 1;
    case Expr::Kind::Meet: return 2;
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 3;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 4;
    case Expr::Kind::Neg: return 5;
    case Expr::Kind::Pow: return 6;
    default: return 7;
  }
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = print(e);
  return parens ? "(" + s + ")" : s;
}

std::string list(const std::vector<ExprPtr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += print(*items[i]);
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string print(const Expr& e) {
  const int p = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Int: return e.value.get_str();
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Top: return "top";
    case Expr::Kind::Bot: return "bot";
    case Expr::Kind::Support: return "D(" + list(e.args) + ")";
    case Expr::Kind::IdealLit: return "[" + list(e.args) + "]";
    case Expr::Kind::Neg: return "-" + wrap(*e.args[0], precedence(*e.args[0]) < p);
    case Expr::Kind::Pow:
      return wrap(*e.args[0], precedence(*e.args[0]) < 7) + "^" + e.value.get_str();
    case Expr::Kind::Div:
      return wrap(*e.args[0], precedence(*e.args[0]) < p) + "/" + e.value.get_str();
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Join:
    case Expr::Kind::Meet: {
      static const char* ops[] = {"", "", " + ", " - ", "*", "", "", "", "", "", "", "", " | ", " & "};
      const std::string op = ops[static_cast<int>(e.kind)];
      return wrap(*e.args[0], precedence(*e.args[0]) < p) + op +
             wrap(*e.args[1], precedence(*e.args[1]) <= p);
    }
  }
  return "?";
}

std::string print(const RingExpr& r) {
  std::ostringstream out;
  switch (r.kind) {
    case RingExpr::Kind::Integers: out << "Z"; break;
    case RingExpr::Kind::Residues: out << "Z/" << r.modulus.get_str(); break;
    case RingExpr::Kind::Rationals: out << "Q"; break;
    case RingExpr::Kind::PrimeField: out << "Fp(" << r.modulus.get_str() << ")"; break;
  }
  if (r.brackets) {
    out << "[";
    for (std::size_t i = 0; i < r.vars.size(); ++i) out << (i ? "," : "") << r.vars[i];
    out << "]";
    if (!r.relations.empty()) out << "/(" << list(r.relations) << ")";
  }
  if (r.order != MonomialOrder::GRevLex) out << " order " << to_string(r.order);
  return out.str();
}

std::string print(const FracItem& f) {
  std::string out = print(*f.numerator);
  // A top-level '/' would be read as the fraction bar.
  if (precedence(*f.numerator) < 4 || out.find('/') != std::string::npos) out = "(" + out + ")";
  out += "/" + wrap(*f.denominator, precedence(*f.denominator) < 7);
  return out + "^" + std::to_string(f.exponent);
}

std::string print(const HomSpec& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.names.size(); ++i) {
    if (i) out += ", ";
    out += h.names[i] + " -> " + print(*h.images[i]);
  }
  return out + "}";
}

std::string print(const Stmt& s) {
  std::ostringstream out;
  switch (s.kind) {
    case Stmt::Kind::RingDecl: out << "ring " << s.name << " = " << print(*s.ring); break;
    case Stmt::Kind::Use: out << "use " << s.name; break;
    case Stmt::Kind::Bind: out << to_string(s.bind_type) << " " << s.name << " = " << print(*s.a); break;
    case Stmt::Kind::Check: out << "check " << print(*s.a) << " " << s.op << " " << print(*s.b); break;
    case Stmt::Kind::Unimodular: out << "unimodular " << print(*s.a); break;
    case Stmt::Kind::RadicalMember:
      out << "radical-member " << print(*s.a) << " in " << print(*s.b);
      break;
    case Stmt::Kind::Localize:
      out << "localize " << s.name << " at " << print(*s.a);
      if (!s.alias.empty()) out << " as " << s.alias;
      break;
    case Stmt::Kind::Glue: {
      out << "glue cover " << print(*s.a) << " with [";
      for (std::size_t i = 0; i < s.fractions.size(); ++i) out << (i ? ", " : "") << print(s.fractions[i]);
      out << "]";
      break;
    }
    case Stmt::Kind::Points:
      out << "points " << s.name << " over " << print(*s.ring);
      if (s.a) out << " in " << print(*s.a);
      break;
    case Stmt::Kind::Cover: out << "cover " << print(*s.a); break;
    case Stmt::Kind::Qcqs: out << "qcqs " << print(*s.a); break;
    case Stmt::Kind::Member:
      out << "member " << print(s.hom);
      if (s.ring) out << " into " << print(*s.ring);
      out << " in " << print(*s.a);
      break;
    case Stmt::Kind::Eval:
      out << "eval " << print(*s.a) << " at " << print(s.hom);
      if (s.ring) out << " into " << print(*s.ring);
      break;
    case Stmt::Kind::Verify: out << "verify " << quote(s.path); break;
  }
  out << ";";
  return out.str();
}

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace zkit::dsl
