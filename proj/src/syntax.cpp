#include "truthkernel/syntax.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace tk {

struct Term::Node {
  Kind kind;
  VarId var = 0;
  FnSymbol sym = FnSymbol::Iter;
  std::vector<Term> args;
  std::optional<Nat> numeral;
  bool is_literal_two = false;  // S(S(0)), the multiplier of binary numerals
  VarSet fv;
  std::size_t hash = 0;
  std::size_t size = 1;
};

struct Formula::Node {
  Kind kind;
  VarId var = 0;
  std::vector<Term> terms;
  std::vector<Formula> children;
  VarSet fv;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t add_sat(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  VarSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarSet set_erase(VarSet s, VarId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
  return s;
}

}  // namespace

const char* symbol_name(FnSymbol f) { return f == FnSymbol::Iter ? "iter" : "sub"; }

bool contains(const VarSet& s, VarId v) { return std::binary_search(s.begin(), s.end(), v); }

// ---------------------------------------------------------------------------
// Term

Term Term::make(Node n) {
  std::size_t h = mix(0x5151, static_cast<std::size_t>(n.kind));
  switch (n.kind) {
    case Kind::Var:
      h = mix(h, n.var);
      n.fv = {n.var};
      break;
    case Kind::Zero:
      n.numeral = Nat(0);
      break;
    default:
      if (n.kind == Kind::App) h = mix(h, static_cast<std::size_t>(n.sym));
      for (const Term& a : n.args) {
        h = mix(h, a.hash());
        n.fv = set_union(n.fv, a.free_vars());
        n.size = add_sat(n.size, a.size());
      }
      break;
  }
  n.hash = h;

  if (n.kind == Kind::Succ) {
    const Node& c = *n.args[0].node_;
    if (c.kind == Kind::Zero) {
      n.numeral = Nat(1);
    } else if (c.kind == Kind::Mul && c.numeral) {
      n.numeral = *c.numeral + 1;
    } else if (c.kind == Kind::Succ && c.args[0].node_->kind == Kind::Zero) {
      n.is_literal_two = true;
    }
  } else if (n.kind == Kind::Mul) {
    const Node& l = *n.args[0].node_;
    const Node& r = *n.args[1].node_;
    if (l.is_literal_two && r.numeral && *r.numeral >= 1) n.numeral = *r.numeral * 2;
  }
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::var(VarId v) {
  Node n{Kind::Var};
  n.var = v;
  return make(std::move(n));
}

Term Term::zero() {
  static const Term z = make(Node{Kind::Zero});
  return z;
}

Term Term::succ(Term t) {
  Node n{Kind::Succ};
  n.args = {std::move(t)};
  return make(std::move(n));
}

Term Term::add(Term a, Term b) {
  Node n{Kind::Add};
  n.args = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Term Term::mul(Term a, Term b) {
  Node n{Kind::Mul};
  n.args = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Term Term::app(FnSymbol f, std::vector<Term> args) {
  if (args.size() != arity(f)) {
    throw SyntaxError(std::string("arity mismatch: ") + symbol_name(f) + " expects " +
                      std::to_string(arity(f)) + " arguments, got " + std::to_string(args.size()));
  }
  Node n{Kind::App};
  n.sym = f;
  n.args = std::move(args);
  return make(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
VarId Term::var_index() const { return node_->var; }
FnSymbol Term::symbol() const { return node_->sym; }
std::span<const Term> Term::args() const { return node_->args; }
const Nat* Term::numeral_value() const { return node_->numeral ? &*node_->numeral : nullptr; }
const VarSet& Term::free_vars() const { return node_->fv; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  if (x.numeral && y.numeral) return *x.numeral == *y.numeral;
  if (x.numeral.has_value() != y.numeral.has_value()) return false;
  switch (x.kind) {
    case Term::Kind::Var: return x.var == y.var;
    case Term::Kind::Zero: return true;
    case Term::Kind::App:
      if (x.sym != y.sym) return false;
      [[fallthrough]];
    default:
      return std::equal(x.args.begin(), x.args.end(), y.args.begin(), y.args.end());
  }
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::make(Node n) {
  std::size_t h = mix(0xF0F0, static_cast<std::size_t>(n.kind));
  if (n.kind == Kind::Forall) h = mix(h, n.var);
  for (const Term& t : n.terms) {
    h = mix(h, t.hash());
    n.fv = set_union(n.fv, t.free_vars());
    n.size = add_sat(n.size, t.size());
  }
  for (const Formula& c : n.children) {
    h = mix(h, c.hash());
    n.fv = set_union(n.fv, c.free_vars());
    n.size = add_sat(n.size, c.size());
  }
  if (n.kind == Kind::Forall) n.fv = set_erase(std::move(n.fv), n.var);
  n.hash = h;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::eq(Term a, Term b) {
  Node n{Kind::Eq};
  n.terms = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::tr(Term t) {
  Node n{Kind::Tr};
  n.terms = {std::move(t)};
  return make(std::move(n));
}

Formula Formula::neg(Formula f) {
  Node n{Kind::Not};
  n.children = {std::move(f)};
  return make(std::move(n));
}

Formula Formula::imp(Formula a, Formula b) {
  Node n{Kind::Imp};
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::forall(VarId v, Formula body) {
  Node n{Kind::Forall};
  n.var = v;
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
std::span<const Term> Formula::terms() const { return node_->terms; }
std::span<const Formula> Formula::children() const { return node_->children; }
VarId Formula::bound_var() const { return node_->var; }
const VarSet& Formula::free_vars() const { return node_->fv; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.var != y.var || x.size != y.size) return false;
  return std::equal(x.terms.begin(), x.terms.end(), y.terms.begin(), y.terms.end()) &&
         std::equal(x.children.begin(), x.children.end(), y.children.begin(), y.children.end());
}

// ---------------------------------------------------------------------------
// Abbreviations

Formula conj(Formula a, Formula b) { return Formula::neg(Formula::imp(std::move(a), Formula::neg(std::move(b)))); }
Formula disj(Formula a, Formula b) { return Formula::imp(Formula::neg(std::move(a)), std::move(b)); }
Formula iff(Formula a, Formula b) { return conj(Formula::imp(a, b), Formula::imp(b, a)); }
Formula exists(VarId v, Formula body) { return Formula::neg(Formula::forall(v, Formula::neg(std::move(body)))); }

std::optional<std::pair<Formula, Formula>> match_iff(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind() != K::Not) return std::nullopt;
  const Formula& i = f.body();
  if (i.kind() != K::Imp || i.consequent().kind() != K::Not) return std::nullopt;
  const Formula& fwd = i.antecedent();
  const Formula& bwd = i.consequent().body();
  if (fwd.kind() != K::Imp || bwd.kind() != K::Imp) return std::nullopt;
  if (!(fwd.antecedent() == bwd.consequent()) || !(fwd.consequent() == bwd.antecedent())) return std::nullopt;
  return std::make_pair(fwd.antecedent(), fwd.consequent());
}

// ---------------------------------------------------------------------------
// Variables and substitution

VarSet free_vars(const Term& t) { return t.free_vars(); }
VarSet free_vars(const Formula& f) { return f.free_vars(); }
bool occurs_free(VarId v, const Formula& f) { return contains(f.free_vars(), v); }

VarId fresh_var(const VarSet& avoid) {
  VarId v = 0;
  for (VarId a : avoid) {
    if (a != v) break;
    ++v;
  }
  return v;
}

Term substitute(const Term& s, VarId v, const Term& t) {
  if (!contains(s.free_vars(), v)) return s;
  switch (s.kind()) {
    case Term::Kind::Var: return t;
    case Term::Kind::Succ: return Term::succ(substitute(s.args()[0], v, t));
    case Term::Kind::Add: return Term::add(substitute(s.args()[0], v, t), substitute(s.args()[1], v, t));
    case Term::Kind::Mul: return Term::mul(substitute(s.args()[0], v, t), substitute(s.args()[1], v, t));
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(s.args().size());
      for (const Term& a : s.args()) args.push_back(substitute(a, v, t));
      return Term::app(s.symbol(), std::move(args));
    }
    case Term::Kind::Zero: break;
  }
  return s;
}

Formula substitute(const Formula& f, VarId v, const Term& t) {
  if (!occurs_free(v, f)) return f;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return Formula::eq(substitute(f.lhs(), v, t), substitute(f.rhs(), v, t));
    case K::Tr: return Formula::tr(substitute(f.lhs(), v, t));
    case K::Not: return Formula::neg(substitute(f.body(), v, t));
    case K::Imp: return Formula::imp(substitute(f.antecedent(), v, t), substitute(f.consequent(), v, t));
    case K::Forall: {
      VarId w = f.bound_var();
      Formula body = f.body();
      if (contains(t.free_vars(), w)) {
        VarSet avoid = set_union(t.free_vars(), body.free_vars());
        avoid = set_union(avoid, VarSet{v});
        VarId fresh = fresh_var(avoid);
        body = substitute(body, w, Term::var(fresh));
        w = fresh;
      }
      return Formula::forall(w, substitute(body, v, t));
    }
  }
  return f;
}

Formula replace_atom(const Formula& f, const Formula& from, const Formula& to) {
  if (f == from) return to;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: return Formula::neg(replace_atom(f.body(), from, to));
    case K::Imp: return Formula::imp(replace_atom(f.antecedent(), from, to), replace_atom(f.consequent(), from, to));
    case K::Forall: return Formula::forall(f.bound_var(), replace_atom(f.body(), from, to));
    default: return f;
  }
}

// ---------------------------------------------------------------------------
// Positions

namespace {

std::optional<Term> term_at_term(const Term& t, std::span<const std::uint32_t> pos) {
  if (pos.empty()) return t;
  if (pos[0] >= t.args().size()) return std::nullopt;
  return term_at_term(t.args()[pos[0]], pos.subspan(1));
}

Term replace_in_term(const Term& s, std::span<const std::uint32_t> pos, const Term& t) {
  if (pos.empty()) return t;
  if (pos[0] >= s.args().size()) throw SyntaxError("position does not address a term");
  std::vector<Term> args(s.args().begin(), s.args().end());
  args[pos[0]] = replace_in_term(args[pos[0]], pos.subspan(1), t);
  switch (s.kind()) {
    case Term::Kind::Succ: return Term::succ(args[0]);
    case Term::Kind::Add: return Term::add(args[0], args[1]);
    case Term::Kind::Mul: return Term::mul(args[0], args[1]);
    case Term::Kind::App: return Term::app(s.symbol(), std::move(args));
    default: throw SyntaxError("position does not address a term");
  }
}

}  // namespace

std::optional<Term> term_at(const Formula& f, std::span<const std::uint32_t> pos) {
  if (pos.empty()) return std::nullopt;
  if (f.is_atomic()) {
    if (pos[0] >= f.terms().size()) return std::nullopt;
    return term_at_term(f.terms()[pos[0]], pos.subspan(1));
  }
  if (pos[0] >= f.children().size()) return std::nullopt;
  return term_at(f.children()[pos[0]], pos.subspan(1));
}

Formula replace_term_at(const Formula& f, std::span<const std::uint32_t> pos, const Term& t) {
  if (pos.empty()) throw SyntaxError("position does not address a term");
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
      if (pos[0] == 0) return Formula::eq(replace_in_term(f.lhs(), pos.subspan(1), t), f.rhs());
      if (pos[0] == 1) return Formula::eq(f.lhs(), replace_in_term(f.rhs(), pos.subspan(1), t));
      break;
    case K::Tr:
      if (pos[0] == 0) return Formula::tr(replace_in_term(f.lhs(), pos.subspan(1), t));
      break;
    case K::Not:
      if (pos[0] == 0) return Formula::neg(replace_term_at(f.body(), pos.subspan(1), t));
      break;
    case K::Imp:
      if (pos[0] == 0) return Formula::imp(replace_term_at(f.antecedent(), pos.subspan(1), t), f.consequent());
      if (pos[0] == 1) return Formula::imp(f.antecedent(), replace_term_at(f.consequent(), pos.subspan(1), t));
      break;
    case K::Forall:
      if (pos[0] == 0) return Formula::forall(f.bound_var(), replace_term_at(f.body(), pos.subspan(1), t));
      break;
  }
  throw SyntaxError("position does not address a term");
}

std::string var_name(VarId v) {
  static const char* const names[] = {"x", "y", "z", "u", "v", "w"};
  if (v < 6) return names[v];
  return "x" + std::to_string(v);
}

}  // namespace tk
