#include "truthkernel/parser.hpp"

#include <cctype>
#include <sstream>

#include "truthkernel/arithmetization.hpp"

namespace tk {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : SyntaxError("parse error at " + std::to_string(pos) + ": " + what), position(pos) {}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::optional<VarId> var_from_name(std::string_view s) {
  static const std::string_view names[] = {"x", "y", "z", "u", "v", "w"};
  for (VarId i = 0; i < 6; ++i)
    if (s == names[i]) return i;
  if (s.size() >= 2 && s[0] == 'x') {
    VarId v = 0;
    for (char c : s.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      if (v > 100000000) return std::nullopt;
      v = v * 10 + static_cast<VarId>(c - '0');
    }
    return v;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input '" + std::string(s_.substr(pos_, 12)) + "'");
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string_view peek_ident() {
    skip_ws();
    std::size_t e = pos_;
    while (e < s_.size() && ident_char(s_[e])) ++e;
    return s_.substr(pos_, e - pos_);
  }

  bool accept_keyword(std::string_view kw) {
    if (peek_ident() != kw) return false;
    pos_ += kw.size();
    return true;
  }

  VarId variable() {
    std::string_view id = peek_ident();
    auto v = var_from_name(id);
    if (!v) fail(id.empty() ? "expected variable" : "unknown variable '" + std::string(id) + "'");
    pos_ += id.size();
    return *v;
  }

  Formula formula() {
    Formula a = implication();
    if (accept("<->")) return iff(a, implication());
    return a;
  }

  Formula implication() {
    Formula a = disjunction();
    if (accept("->")) return Formula::imp(a, implication());
    return a;
  }

  Formula disjunction() {
    Formula a = conjunction();
    while (accept("\\/")) a = disj(a, conjunction());
    return a;
  }

  Formula conjunction() {
    Formula a = unary();
    while (accept("/\\")) a = conj(a, unary());
    return a;
  }

  Formula unary() {
    if (accept("~")) return Formula::neg(unary());
    if (accept_keyword("forall")) {
      VarId v = variable();
      expect(".");
      return Formula::forall(v, formula());
    }
    if (accept_keyword("exists")) {
      VarId v = variable();
      expect(".");
      return exists(v, formula());
    }
    if (peek_ident() == "T") {
      std::size_t save = pos_;
      pos_ += 1;
      if (accept("(")) {
        Term t = term();
        expect(")");
        return Formula::tr(t);
      }
      pos_ = save;
    }
    if (peek("(")) {
      // Either a parenthesized formula or an equation whose left side starts
      // with a parenthesized term.
      std::size_t save = pos_;
      try {
        ++pos_;
        Formula f = formula();
        expect(")");
        if (!peek("=") || peek("=>")) return f;
      } catch (const ParseError&) {
      }
      pos_ = save;
    }
    Term l = term();
    expect("=");
    Term r = term();
    return Formula::eq(l, r);
  }

  Term term() {
    Term a = product();
    while (peek("+")) {
      ++pos_;
      a = Term::add(a, product());
    }
    return a;
  }

  Term product() {
    Term a = atom();
    while (peek("*")) {
      ++pos_;
      a = Term::mul(a, atom());
    }
    return a;
  }

  std::vector<Term> arguments() {
    expect("(");
    std::vector<Term> args{term()};
    while (accept(",")) args.push_back(term());
    expect(")");
    return args;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '#') {
      ++pos_;
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (b == pos_) fail("expected digits after '#'");
      return numeral(Nat(std::string(s_.substr(b, pos_ - b))));
    }
    if (c == '0' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]))) {
      ++pos_;
      return Term::zero();
    }
    if (c == '(') {
      ++pos_;
      Term t = term();
      expect(")");
      return t;
    }
    std::string_view id = peek_ident();
    if (id == "S") {
      pos_ += 1;
      std::size_t at = pos_;
      auto args = arguments();
      if (args.size() != 1) throw ParseError("arity mismatch: S expects 1 argument", at);
      return Term::succ(args[0]);
    }
    if (id == "iter" || id == "sub") {
      pos_ += id.size();
      std::size_t at = pos_;
      auto args = arguments();
      try {
        return Term::app(id == "iter" ? FnSymbol::Iter : FnSymbol::Sub, std::move(args));
      } catch (const SyntaxError& e) {
        throw ParseError(e.what(), at);
      }
    }
    return Term::var(variable());
  }
};

void print_term(std::ostream& os, const Term& t) {
  if (const Nat* n = t.numeral_value()) {
    if (*n == 0)
      os << '0';
    else
      os << '#' << n->get_str();
    return;
  }
  switch (t.kind()) {
    case Term::Kind::Var: os << var_name(t.var_index()); return;
    case Term::Kind::Zero: os << '0'; return;
    case Term::Kind::Succ:
      os << "S(";
      print_term(os, t.args()[0]);
      os << ')';
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      os << '(';
      print_term(os, t.args()[0]);
      os << (t.kind() == Term::Kind::Add ? " + " : " * ");
      print_term(os, t.args()[1]);
      os << ')';
      return;
    case Term::Kind::App: {
      os << symbol_name(t.symbol()) << '(';
      bool first = true;
      for (const Term& a : t.args()) {
        if (!first) os << ", ";
        first = false;
        print_term(os, a);
      }
      os << ')';
      return;
    }
  }
}

// A formula printed in a position where something may follow it on the right
// must be closed off unless it is atomic or a negation of a closed-off formula.
void print_formula(std::ostream& os, const Formula& f, bool tail);

void print_guarded(std::ostream& os, const Formula& f) {
  using K = Formula::Kind;
  if (f.kind() == K::Imp || f.kind() == K::Forall) {
    os << '(';
    print_formula(os, f, true);
    os << ')';
  } else {
    print_formula(os, f, false);
  }
}

void print_formula(std::ostream& os, const Formula& f, bool tail) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
      print_term(os, f.lhs());
      os << " = ";
      print_term(os, f.rhs());
      return;
    case K::Tr:
      os << "T(";
      print_term(os, f.lhs());
      os << ')';
      return;
    case K::Not:
      os << '~';
      print_guarded(os, f.body());
      return;
    case K::Imp:
      if (!tail) {
        print_guarded(os, f);
        return;
      }
      print_guarded(os, f.antecedent());
      os << " -> ";
      print_formula(os, f.consequent(), true);
      return;
    case K::Forall:
      if (!tail) {
        print_guarded(os, f);
        return;
      }
      os << "forall " << var_name(f.bound_var()) << ". ";
      print_formula(os, f.body(), true);
      return;
  }
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }
Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

VarId parse_var(std::string_view text) {
  auto v = var_from_name(text);
  if (!v) throw ParseError("unknown variable '" + std::string(text) + "'", 0);
  return *v;
}

std::string pretty_print(const Term& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string pretty_print(const Formula& f) {
  std::ostringstream os;
  print_formula(os, f, true);
  return os.str();
}

}  // namespace tk
