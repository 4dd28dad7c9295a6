#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <set>

#include "zkit/dsl.hpp"
#include "zkit/error.hpp"
#include "zkit/localization.hpp"

namespace zkit::dsl {

namespace {

struct Token {
  enum class Kind { End, Int, Ident, String, Sym };
  Kind kind = Kind::End;
  std::string text;
  Pos pos;
};

[[noreturn]] void error(ErrorKind kind, Pos pos, const std::string& msg) {
  fail(kind, std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg);
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  Pos pos;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = src.substr(i, j - i);
      if (t.text == "radical" && src.compare(j, 7, "-member") == 0) {
        t.text = "radical-member";
        j += 7;
      }
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      std::string s;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        s += src[j++];
      }
      if (j >= src.size()) error(ErrorKind::SyntaxError, pos, "unterminated string");
      t.kind = Token::Kind::String;
      t.text = s;
      advance(j + 1 - i);
    } else {
      static const char* two[] = {"==", "<=", "->"};
      t.kind = Token::Kind::Sym;
      for (const char* s : two) {
        if (src.compare(i, 2, s) == 0) t.text = s;
      }
      if (t.text.empty()) {
        if (std::string(";=()[]{},+-*/^|&").find(c) == std::string::npos) {
          error(ErrorKind::SyntaxError, pos, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
      }
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

struct Binding {
  ValueType type;
  std::string ring;
};

struct Scope {
  std::string ring;  // empty for anonymous rings
  std::vector<std::string> vars;
};

const std::set<std::string> kReserved = {"D", "top", "bot"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script script() {
    Script s;
    while (peek().kind != Token::Kind::End) s.statements.push_back(statement());
    return s;
  }

  RingExpr ring_only() {
    RingExpr r = ring_expr();
    expect_end();
    return r;
  }

  ExprPtr element_only(const std::vector<std::string>& vars) {
    Scope scope{"", vars};
    ExprPtr e = expr(scope, true);
    require(*e, ValueType::Elem);
    expect_end();
    return e;
  }

  FracItem fraction_only(const std::vector<std::string>& vars) {
    Scope scope{"", vars};
    FracItem f = fraction(scope);
    expect_end();
    return f;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(idx_ + k, toks_.size() - 1)];
  }
  Token next() { return toks_[std::min(idx_++, toks_.size() - 1)]; }

  bool is_sym(const char* s, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Sym && peek(k).text == s;
  }
  bool is_word(const char* s, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Ident && peek(k).text == s;
  }
  bool accept_sym(const char* s) {
    if (!is_sym(s)) return false;
    ++idx_;
    return true;
  }
  bool accept_word(const char* s) {
    if (!is_word(s)) return false;
    ++idx_;
    return true;
  }

  std::string describe(const Token& t) const {
    switch (t.kind) {
      case Token::Kind::End: return "end of input";
      case Token::Kind::String: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  void expect_sym(const char* s) {
    if (!accept_sym(s)) {
      error(ErrorKind::SyntaxError, peek().pos,
            std::string("expected '") + s + "', found " + describe(peek()));
    }
  }
  void expect_word(const char* s) {
    if (!accept_word(s)) {
      error(ErrorKind::SyntaxError, peek().pos,
            std::string("expected '") + s + "', found " + describe(peek()));
    }
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) {
      error(ErrorKind::SyntaxError, peek().pos, "unexpected " + describe(peek()));
    }
  }
  std::string ident() {
    if (peek().kind != Token::Kind::Ident) {
      error(ErrorKind::SyntaxError, peek().pos, "expected a name, found " + describe(peek()));
    }
    return next().text;
  }
  mpz_class integer() {
    if (peek().kind != Token::Kind::Int) {
      error(ErrorKind::SyntaxError, peek().pos, "expected an integer, found " + describe(peek()));
    }
    return mpz_class(next().text);
  }

  void require(const Expr& e, ValueType t) const {
    if (e.type != t) {
      error(ErrorKind::TypeMismatch, e.pos,
            "expected " + to_string(t) + ", found " + to_string(e.type));
    }
  }

  // ---- rings ---------------------------------------------------------------

  RingExpr ring_expr() {
    RingExpr r;
    r.pos = peek().pos;
    const std::string head = ident();
    bool polynomial = false;
    if (head == "Z") {
      if (accept_sym("/")) {
        r.kind = RingExpr::Kind::Residues;
        r.modulus = integer();
      }
      if (is_sym("[")) error(ErrorKind::SyntaxError, peek().pos, "polynomial rings over Z are not supported");
    } else if (head == "Q") {
      r.kind = RingExpr::Kind::Rationals;
      polynomial = true;
    } else if (head == "Fp") {
      r.kind = RingExpr::Kind::PrimeField;
      expect_sym("(");
      r.modulus = integer();
      expect_sym(")");
      polynomial = true;
    } else {
      error(ErrorKind::SyntaxError, r.pos, "expected a ring (Z, Z/n, Q[..], Fp(p)[..]), found '" + head + "'");
    }
    if (polynomial && accept_sym("[")) {
      r.brackets = true;
      if (!is_sym("]")) {
        do {
          const Pos p = peek().pos;
          std::string v = ident();
          if (kReserved.count(v)) error(ErrorKind::SyntaxError, p, "'" + v + "' is reserved");
          for (const auto& w : r.vars) {
            if (w == v) error(ErrorKind::SyntaxError, p, "duplicate variable '" + v + "'");
          }
          r.vars.push_back(std::move(v));
        } while (accept_sym(","));
      }
      expect_sym("]");
      if (is_sym("/") && is_sym("(", 1)) {
        next();
        next();
        Scope scope{"", r.vars};
        do {
          ExprPtr e = expr(scope, true);
          require(*e, ValueType::Elem);
          r.relations.push_back(std::move(e));
        } while (accept_sym(","));
        expect_sym(")");
      }
    }
    if (accept_word("order")) {
      const Pos p = peek().pos;
      const std::string o = ident();
      if (o == "lex") r.order = MonomialOrder::Lex;
      else if (o == "grlex") r.order = MonomialOrder::GrLex;
      else if (o == "grevlex") r.order = MonomialOrder::GRevLex;
      else error(ErrorKind::SyntaxError, p, "unknown monomial order '" + o + "'");
    }
    return r;
  }

  static std::vector<std::string> vars_of(const RingExpr& r) { return r.vars; }

  // ---- expressions -----------------------------------------------------------

  static ExprPtr node(Expr::Kind kind, ValueType type, Pos pos, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->type = type;
    e->pos = pos;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr(const Scope& s, bool allow_div) { return join(s, allow_div); }

  ExprPtr join(const Scope& s, bool allow_div) {
    ExprPtr left = meet(s, allow_div);
    while (is_sym("|")) {
      const Pos p = next().pos;
      ExprPtr right = meet(s, allow_div);
      require(*left, ValueType::Latt);
      require(*right, ValueType::Latt);
      left = node(Expr::Kind::Join, ValueType::Latt, p, {left, right});
    }
    return left;
  }

  ExprPtr meet(const Scope& s, bool allow_div) {
    ExprPtr left = sum(s, allow_div);
    while (is_sym("&")) {
      const Pos p = next().pos;
      ExprPtr right = sum(s, allow_div);
      require(*left, ValueType::Latt);
      require(*right, ValueType::Latt);
      left = node(Expr::Kind::Meet, ValueType::Latt, p, {left, right});
    }
    return left;
  }

  ExprPtr sum(const Scope& s, bool allow_div) {
    ExprPtr left = term(s, allow_div);
    while (is_sym("+") || is_sym("-")) {
      const Token op = next();
      ExprPtr right = term(s, allow_div);
      require(*left, ValueType::Elem);
      require(*right, ValueType::Elem);
      left = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, ValueType::Elem, op.pos,
                  {left, right});
    }
    return left;
  }

  ExprPtr term(const Scope& s, bool allow_div) {
    ExprPtr left = unary(s);
    while (is_sym("*") || (allow_div && is_sym("/"))) {
      const Token op = next();
      require(*left, ValueType::Elem);
      if (op.text == "/") {
        if (peek().kind != Token::Kind::Int) {
          error(ErrorKind::SyntaxError, peek().pos, "division is only by integer literals");
        }
        auto e = std::make_shared<Expr>(*node(Expr::Kind::Div, ValueType::Elem, op.pos, {left}));
        e->value = integer();
        if (e->value == 0) error(ErrorKind::SyntaxError, op.pos, "division by zero");
        left = e;
      } else {
        ExprPtr right = unary(s);
        require(*right, ValueType::Elem);
        left = node(Expr::Kind::Mul, ValueType::Elem, op.pos, {left, right});
      }
    }
    return left;
  }

  ExprPtr unary(const Scope& s) {
    if (is_sym("-")) {
      const Pos p = next().pos;
      ExprPtr inner = unary(s);
      require(*inner, ValueType::Elem);
      return node(Expr::Kind::Neg, ValueType::Elem, p, {inner});
    }
    return power(s);
  }

  ExprPtr power(const Scope& s) {
    ExprPtr base = atom(s);
    if (is_sym("^")) {
      const Pos p = next().pos;
      require(*base, ValueType::Elem);
      auto e = std::make_shared<Expr>(*node(Expr::Kind::Pow, ValueType::Elem, p, {base}));
      e->value = integer();
      if (!e->value.fits_uint_p()) error(ErrorKind::SyntaxError, p, "exponent too large");
      return e;
    }
    return base;
  }

  std::vector<ExprPtr> element_list(const Scope& s, const char* close) {
    std::vector<ExprPtr> out;
    if (is_sym(close)) return out;
    do {
      ExprPtr e = expr(s, true);
      require(*e, ValueType::Elem);
      out.push_back(std::move(e));
    } while (accept_sym(","));
    return out;
  }

  ExprPtr atom(const Scope& s) {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      auto e = std::make_shared<Expr>(*node(Expr::Kind::Int, ValueType::Elem, t.pos));
      e->value = integer();
      return e;
    }
    if (accept_sym("(")) {
      ExprPtr e = expr(s, true);
      expect_sym(")");
      return e;
    }
    if (is_sym("[")) {
      const Pos p = next().pos;
      auto gens = element_list(s, "]");
      expect_sym("]");
      return node(Expr::Kind::IdealLit, ValueType::Ideal, p, std::move(gens));
    }
    if (t.kind != Token::Kind::Ident) {
      error(ErrorKind::SyntaxError, t.pos, "expected an expression, found " + describe(t));
    }
    const Pos p = t.pos;
    if (is_word("D") && is_sym("(", 1)) {
      next();
      next();
      auto gens = element_list(s, ")");
      expect_sym(")");
      return node(Expr::Kind::Support, ValueType::Latt, p, std::move(gens));
    }
    if (accept_word("top")) return node(Expr::Kind::Top, ValueType::Latt, p);
    if (accept_word("bot")) return node(Expr::Kind::Bot, ValueType::Latt, p);
    const std::string name = next().text;
    auto e = std::make_shared<Expr>(*node(Expr::Kind::Name, resolve(s, name, p), p));
    e->name = name;
    return e;
  }

  ValueType resolve(const Scope& s, const std::string& name, Pos p) const {
    if (!s.ring.empty()) {
      auto it = bindings_.find(name);
      if (it != bindings_.end() && it->second.ring == s.ring) return it->second.type;
    }
    for (const auto& v : s.vars) {
      if (v == name) return ValueType::Elem;
    }
    auto it = bindings_.find(name);
    if (it != bindings_.end()) {
      error(ErrorKind::UnknownName, p,
            "'" + name + "' is bound over " + it->second.ring + ", not " +
                (s.ring.empty() ? std::string("this ring") : s.ring));
    }
    error(ErrorKind::UnknownName, p, "unknown name '" + name + "'");
  }

  FracItem fraction(const Scope& s) {
    FracItem f;
    // The numerator is a sum without top-level division.
    f.numerator = sum(s, false);
    require(*f.numerator, ValueType::Elem);
    expect_sym("/");
    f.denominator = atom(s);
    require(*f.denominator, ValueType::Elem);
    if (accept_sym("^")) {
      const Pos p = peek().pos;
      mpz_class n = integer();
      if (!n.fits_uint_p()) error(ErrorKind::SyntaxError, p, "exponent too large");
      f.exponent = static_cast<unsigned>(n.get_ui());
    }
    return f;
  }

  HomSpec hom_spec(const Scope& images, const std::vector<std::string>& domain_vars) {
    HomSpec h;
    const Pos open = peek().pos;
    expect_sym("{");
    if (!is_sym("}")) {
      do {
        const Pos p = peek().pos;
        std::string v = ident();
        if (std::find(domain_vars.begin(), domain_vars.end(), v) == domain_vars.end()) {
          error(ErrorKind::UnknownName, p, "'" + v + "' is not a variable of the domain");
        }
        if (std::find(h.names.begin(), h.names.end(), v) != h.names.end()) {
          error(ErrorKind::SyntaxError, p, "variable '" + v + "' assigned twice");
        }
        expect_sym("->");
        ExprPtr e = expr(images, true);
        require(*e, ValueType::Elem);
        h.names.push_back(std::move(v));
        h.images.push_back(std::move(e));
      } while (accept_sym(","));
    }
    expect_sym("}");
    if (h.names.size() != domain_vars.size()) {
      error(ErrorKind::SyntaxError, open, "every domain variable needs an image");
    }
    return h;
  }

  // ---- statements ------------------------------------------------------------

  Scope scope_of(const std::string& ring) const { return Scope{ring, rings_.at(ring)}; }

  const std::string& current(Pos p) const {
    if (current_.empty()) error(ErrorKind::SyntaxError, p, "no ring declared");
    return current_;
  }

  std::string ring_name(Pos p) {
    std::string r = ident();
    if (!rings_.count(r)) error(ErrorKind::UnknownName, p, "unknown ring '" + r + "'");
    return r;
  }

  ExprPtr ideal_operand(const Scope& s) {
    ExprPtr e = expr(s, true);
    require(*e, ValueType::Ideal);
    return e;
  }

  // Codomain of homspecs without an explicit ring: the coefficient ring.
  Scope default_codomain() const { return Scope{"", {}}; }

  Stmt statement() {
    Stmt st;
    st.pos = peek().pos;
    const Token head = peek();
    if (head.kind != Token::Kind::Ident) {
      error(ErrorKind::SyntaxError, head.pos, "expected a statement, found " + describe(head));
    }
    const std::string& w = head.text;
    next();
    if (w == "ring") {
      st.kind = Stmt::Kind::RingDecl;
      st.name = ident();
      expect_sym("=");
      st.ring = ring_expr();
      rings_[st.name] = st.ring->vars;
      current_ = st.name;
      st.context = st.name;
      // Rebinding a ring invalidates names bound over its previous value.
      for (auto it = bindings_.begin(); it != bindings_.end();) {
        it = it->second.ring == st.name ? bindings_.erase(it) : std::next(it);
      }
    } else if (w == "use") {
      st.kind = Stmt::Kind::Use;
      st.name = ring_name(peek().pos);
      current_ = st.name;
      st.context = st.name;
    } else if (w == "elem" || w == "ideal" || w == "latt") {
      st.kind = Stmt::Kind::Bind;
      st.bind_type = w == "elem" ? ValueType::Elem : w == "ideal" ? ValueType::Ideal : ValueType::Latt;
      st.context = current(head.pos);
      const Pos p = peek().pos;
      st.name = ident();
      if (kReserved.count(st.name)) error(ErrorKind::SyntaxError, p, "'" + st.name + "' is reserved");
      expect_sym("=");
      st.a = expr(scope_of(st.context), true);
      require(*st.a, st.bind_type);
      bindings_[st.name] = Binding{st.bind_type, st.context};
    } else if (w == "check") {
      st.kind = Stmt::Kind::Check;
      st.context = current(head.pos);
      Scope s = scope_of(st.context);
      st.a = expr(s, true);
      const Pos p = peek().pos;
      if (accept_sym("==")) st.op = "==";
      else if (accept_sym("<=")) st.op = "<=";
      else error(ErrorKind::SyntaxError, p, "expected '==' or '<=', found " + describe(peek()));
      st.b = expr(s, true);
      if (st.a->type == ValueType::Ideal) error(ErrorKind::TypeMismatch, st.a->pos, "cannot compare ideals");
      require(*st.b, st.a->type);
      if (st.op == "<=" && st.a->type != ValueType::Latt) {
        error(ErrorKind::TypeMismatch, p, "'<=' needs lattice operands");
      }
    } else if (w == "unimodular") {
      st.kind = Stmt::Kind::Unimodular;
      st.context = current(head.pos);
      st.a = ideal_operand(scope_of(st.context));
    } else if (w == "radical-member") {
      st.kind = Stmt::Kind::RadicalMember;
      st.context = current(head.pos);
      Scope s = scope_of(st.context);
      st.a = expr(s, true);
      require(*st.a, ValueType::Elem);
      expect_word("in");
      st.b = ideal_operand(s);
    } else if (w == "localize") {
      st.kind = Stmt::Kind::Localize;
      st.name = ring_name(peek().pos);
      st.context = st.name;
      expect_word("at");
      st.a = expr(scope_of(st.name), true);
      require(*st.a, ValueType::Elem);
      if (accept_word("as")) {
        st.alias = ident();
        auto vars = rings_.at(st.name);
        vars.push_back(fresh_variable_name(vars));
        rings_[st.alias] = vars;
        for (auto it = bindings_.begin(); it != bindings_.end();) {
          it = it->second.ring == st.alias ? bindings_.erase(it) : std::next(it);
        }
      }
    } else if (w == "glue") {
      st.kind = Stmt::Kind::Glue;
      st.context = current(head.pos);
      Scope s = scope_of(st.context);
      expect_word("cover");
      st.a = ideal_operand(s);
      expect_word("with");
      expect_sym("[");
      if (!is_sym("]")) {
        do st.fractions.push_back(fraction(s));
        while (accept_sym(","));
      }
      expect_sym("]");
    } else if (w == "points") {
      st.kind = Stmt::Kind::Points;
      st.name = ring_name(peek().pos);
      st.context = st.name;
      expect_word("over");
      st.ring = ring_expr();
      if (accept_word("in")) {
        st.a = expr(scope_of(st.name), true);
        require(*st.a, ValueType::Latt);
      }
    } else if (w == "cover" || w == "qcqs") {
      st.kind = w == "cover" ? Stmt::Kind::Cover : Stmt::Kind::Qcqs;
      st.context = current(head.pos);
      st.a = expr(scope_of(st.context), true);
      require(*st.a, ValueType::Latt);
    } else if (w == "member") {
      st.kind = Stmt::Kind::Member;
      st.context = current(head.pos);
      // The codomain follows the map, so look ahead for "into".
      const std::size_t start = idx_;
      skip_braces();
      if (accept_word("into")) st.ring = ring_expr();
      const std::size_t after = idx_;
      idx_ = start;
      Scope images = st.ring ? Scope{"", st.ring->vars} : default_codomain();
      st.hom = hom_spec(images, rings_.at(st.context));
      idx_ = after;
      expect_word("in");
      st.a = expr(scope_of(st.context), true);
      require(*st.a, ValueType::Latt);
    } else if (w == "eval") {
      st.kind = Stmt::Kind::Eval;
      st.context = current(head.pos);
      st.a = expr(scope_of(st.context), true);
      require(*st.a, ValueType::Elem);
      expect_word("at");
      const std::size_t start = idx_;
      skip_braces();
      if (accept_word("into")) st.ring = ring_expr();
      const std::size_t after = idx_;
      idx_ = start;
      Scope images = st.ring ? Scope{"", st.ring->vars} : default_codomain();
      st.hom = hom_spec(images, rings_.at(st.context));
      idx_ = after;
    } else if (w == "verify") {
      st.kind = Stmt::Kind::Verify;
      if (peek().kind != Token::Kind::String) {
        error(ErrorKind::SyntaxError, peek().pos, "expected a file name string");
      }
      st.path = next().text;
      st.context = current_;
    } else {
      error(ErrorKind::SyntaxError, head.pos, "unknown statement '" + w + "'");
    }
    expect_sym(";");
    return st;
  }

  void skip_braces() {
    if (!is_sym("{")) error(ErrorKind::SyntaxError, peek().pos, "expected '{', found " + describe(peek()));
    int depth = 0;
    do {
      if (is_sym("{")) ++depth;
      if (is_sym("}")) --depth;
      if (peek().kind == Token::Kind::End) error(ErrorKind::SyntaxError, peek().pos, "unbalanced '{'");
      next();
    } while (depth > 0);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  std::map<std::string, std::vector<std::string>> rings_;
  std::map<std::string, Binding> bindings_;
  std::string current_;
};

}  // namespace

std::string to_string(ValueType t) {
  switch (t) {
    case ValueType::Elem: return "elem";
    case ValueType::Ideal: return "ideal";
    case ValueType::Latt: return "latt";
  }
  return "?";
}

Script parse(const std::string& source) { return Parser(lex(source)).script(); }

RingExpr parse_ring_text(const std::string& text) { return Parser(lex(text)).ring_only(); }

ExprPtr parse_element_text(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(lex(text)).element_only(vars);
}

FracItem parse_fraction_text(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(lex(text)).fraction_only(vars);
}

}  // namespace zkit::dsl
