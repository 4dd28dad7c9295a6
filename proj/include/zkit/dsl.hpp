#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zkit/poly.hpp"

namespace zkit::dsl {

struct Pos {
  int line = 1;
  int col = 1;
};

enum class ValueType { Elem, Ideal, Latt };
std::string to_string(ValueType t);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Int, Name, Add, Sub, Mul, Div, Neg, Pow, Support, Top, Bot, IdealLit, Join, Meet };
  Kind kind = Kind::Int;
  ValueType type = ValueType::Elem;
  mpz_class value;  // Int literal, Pow exponent, Div divisor
  std::string name;
  std::vector<ExprPtr> args;
  Pos pos;
};

struct RingExpr {
  enum class Kind { Integers, Residues, Rationals, PrimeField };
  Kind kind = Kind::Integers;
  mpz_class modulus;  // Residues and PrimeField
  bool brackets = false;
  std::vector<std::string> vars;
  std::vector<ExprPtr> relations;
  MonomialOrder order = MonomialOrder::GRevLex;
  Pos pos;
};

/// numerator / denominator^exponent
struct FracItem {
  ExprPtr numerator;
  ExprPtr denominator;
  unsigned exponent = 1;
};

struct HomSpec {
  std::vector<std::string> names;
  std::vector<ExprPtr> images;
};

/// Ring context of the expressions in a statement: a declared ring or an
/// anonymous ring expression.
struct Context {
  std::string ring;  // empty for anonymous
};

struct Stmt {
  enum class Kind {
    RingDecl, Use, Bind, Check, Unimodular, RadicalMember, Localize, Glue,
    Points, Cover, Member, Eval, Qcqs, Verify
  };
  Kind kind = Kind::RingDecl;
  Pos pos;
  std::string context;  // ring the statement's expressions live in
  std::string name;     // declared/bound name, or the ring operand
  std::string alias;    // localize ... as NAME
  ValueType bind_type = ValueType::Elem;
  std::optional<RingExpr> ring;  // RingDecl, Points (over), Member/Eval (into)
  ExprPtr a, b;
  std::string op;  // "==" or "<="
  std::vector<FracItem> fractions;
  HomSpec hom;
  std::string path;
};

struct Script {
  std::vector<Stmt> statements;
};

/// Throws Error(SyntaxError | UnknownName | TypeMismatch) with "line:col: ".
Script parse(const std::string& source);

std::string print(const Expr& e);
std::string print(const RingExpr& r);
std::string print(const FracItem& f);
std::string print(const HomSpec& h);
std::string print(const Stmt& s);
std::string print(const Script& s);

/// Standalone parsers used when reading certificates back.
RingExpr parse_ring_text(const std::string& text);
ExprPtr parse_element_text(const std::string& text, const std::vector<std::string>& vars);
FracItem parse_fraction_text(const std::string& text, const std::vector<std::string>& vars);

}  // namespace zkit::dsl
