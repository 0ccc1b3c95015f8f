// Equality reasoning, evaluation of closed terms, rewriting and quantifier
// steps.

#include <unordered_map>

#include "truthkernel/arithmetization.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"

namespace tk {

namespace {

using K = Formula::Kind;

Proof ax(SchemaId s, Formula f) { return Proof::axiom(s, std::move(f)); }

const Formula& expect_eq(const Proof& p, const char* who) {
  const Formula& f = p.conclusion();
  if (f.kind() != K::Eq) throw TacticError(std::string(who) + ": expected an equation, got " + pretty_print(f));
  return f;
}

// Proves t = #value(t), memoized per call.
class Evaluator {
 public:
  Proof run(const Term& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    Proof r = compute(t);
    memo_.emplace(t, r);
    return r;
  }

 private:
  std::unordered_map<Term, Proof> memo_;

  Proof compute(const Term& t) {
    if (t.numeral_value()) return reflexivity(t);
    if (!t.closed()) throw TacticError("eval: term is not closed: " + pretty_print(t));
    if (t.kind() == Term::Kind::Var || t.kind() == Term::Kind::Zero)
      throw TacticError("eval: unexpected term " + pretty_print(t));

    // t = t' where every argument of t' is a numeral.
    std::vector<Term> args(t.args().begin(), t.args().end());
    std::optional<Proof> chain;
    Term cur = t;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].numeral_value()) continue;
      Proof e = run(args[i]);
      args[i] = e.conclusion().rhs();
      Term next = rebuild(t, args);
      Proof step = congruence(e, cur, next);
      chain = chain ? transitivity(*chain, step) : step;
      cur = next;
    }
    if (cur.numeral_value()) return *chain;
    Proof last = compute_flat(cur);
    return chain ? transitivity(*chain, last) : last;
  }

  static Term rebuild(const Term& t, const std::vector<Term>& args) {
    switch (t.kind()) {
      case Term::Kind::Succ: return Term::succ(args[0]);
      case Term::Kind::Add: return Term::add(args[0], args[1]);
      case Term::Kind::Mul: return Term::mul(args[0], args[1]);
      case Term::Kind::App: return Term::app(t.symbol(), args);
      default: return t;
    }
  }

  // All arguments are numerals.
  Proof compute_flat(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Succ:
        return ax(SchemaId::CompSucc, Formula::eq(t, numeral(*t.args()[0].numeral_value() + 1)));
      case Term::Kind::Add: {
        Nat v = *t.args()[0].numeral_value() + *t.args()[1].numeral_value();
        return ax(SchemaId::CompAdd, Formula::eq(t, numeral(v)));
      }
      case Term::Kind::Mul: {
        Nat v = *t.args()[0].numeral_value() * *t.args()[1].numeral_value();
        return ax(SchemaId::CompMul, Formula::eq(t, numeral(v)));
      }
      case Term::Kind::App:
        if (t.symbol() == FnSymbol::Sub) {
          const Nat& v = *t.args()[1].numeral_value();
          if (!v.fits_uint_p()) throw TacticError("eval: variable index out of range in " + pretty_print(t));
          Nat r;
          try {
            r = sub_fn(*t.args()[0].numeral_value(), static_cast<VarId>(v.get_ui()), *t.args()[2].numeral_value());
          } catch (const DecodeError& e) {
            throw TacticError(std::string("eval: ") + e.what());
          }
          return ax(SchemaId::CompSub, Formula::eq(t, numeral(r)));
        }
        return iter(t);
      default: break;
    }
    throw TacticError("eval: unexpected term " + pretty_print(t));
  }

  Proof iter(const Term& t) {
    const Term& n = t.args()[0];
    const Term& c = t.args()[1];
    const Nat& nv = *n.numeral_value();
    if (nv == 0) return instantiate(ax(SchemaId::CompIter0, iter_zero_axiom()), c);

    Term pred = numeral(Nat(nv - 1));
    Term sp = Term::succ(pred);
    std::optional<Proof> to_succ;
    if (!(n == sp)) {
      // #n = S(#(n-1)), then iter(#n, c) = iter(S(#(n-1)), c).
      Proof back = symmetry(ax(SchemaId::CompSucc, Formula::eq(sp, n)));
      to_succ = congruence(back, t, Term::app(FnSymbol::Iter, {sp, c}));
    }
    Proof step = instantiate(instantiate(ax(SchemaId::CompIterStep, iter_step_axiom()), pred), c);
    Proof rest = transitivity(step, run(step.conclusion().rhs()));
    return to_succ ? transitivity(*to_succ, rest) : rest;
  }
};

struct Pair {
  Proof fwd;  // f -> f'
  Proof bwd;  // f' -> f
};

Pair rewrite_pair(const Proof& eq, const Proof& eq_sym, const Formula& f, std::span<const std::uint32_t> pos,
                  const Term& t) {
  if (pos.empty()) throw TacticError("rewrite: position addresses a formula, not a term");
  switch (f.kind()) {
    case K::Eq:
    case K::Tr: {
      Formula f2 = replace_term_at(f, pos, t);
      Proof fwd = Proof::mp(eq, ax(SchemaId::Eq3, Formula::imp(eq.conclusion(), Formula::imp(f, f2))));
      Proof bwd = Proof::mp(eq_sym, ax(SchemaId::Eq3, Formula::imp(eq_sym.conclusion(), Formula::imp(f2, f))));
      return {fwd, bwd};
    }
    case K::Not: {
      Pair inner = rewrite_pair(eq, eq_sym, f.body(), pos.subspan(1), t);
      return {contrapose(inner.bwd), contrapose(inner.fwd)};
    }
    case K::Imp: {
      if (pos[0] == 0) {
        Pair inner = rewrite_pair(eq, eq_sym, f.antecedent(), pos.subspan(1), t);
        return {compose_left(inner.bwd, f.consequent()), compose_left(inner.fwd, f.consequent())};
      }
      Pair inner = rewrite_pair(eq, eq_sym, f.consequent(), pos.subspan(1), t);
      return {compose_right(inner.fwd, f.antecedent()), compose_right(inner.bwd, f.antecedent())};
    }
    case K::Forall: {
      VarId v = f.bound_var();
      const Formula& s = eq.conclusion();
      if (contains(s.lhs().free_vars(), v) || contains(s.rhs().free_vars(), v))
        throw TacticError("rewrite: equation mentions the bound variable " + var_name(v));
      Pair inner = rewrite_pair(eq, eq_sym, f.body(), pos.subspan(1), t);
      auto lift = [&](const Formula& from, const Proof& step) {
        Proof spec = ax(SchemaId::Quant1, Formula::imp(from, from.body()));
        return generalize_consequent(hypothetical_syllogism(spec, step), v);
      };
      Formula f2 = Formula::forall(v, inner.fwd.conclusion().consequent());
      return {lift(f, inner.fwd), lift(f2, inner.bwd)};
    }
  }
  throw TacticError("rewrite: unknown formula kind");
}

Pair rewrite_pair(const Proof& eq, const Formula& f, const Position& pos) {
  const Formula& e = expect_eq(eq, "rewrite");
  auto at = term_at(f, pos);
  if (!at) throw TacticError("rewrite: no term at the given position in " + pretty_print(f));
  if (!(*at == e.lhs()))
    throw TacticError("rewrite: expected " + pretty_print(e.lhs()) + " at the position, found " + pretty_print(*at));
  return rewrite_pair(eq, symmetry(eq), f, pos, e.rhs());
}

}  // namespace

Proof reflexivity(const Term& t) { return ax(SchemaId::Eq1, Formula::eq(t, t)); }

Proof symmetry(const Proof& ab) {
  const Formula& e = expect_eq(ab, "symmetry");
  const Term& a = e.lhs();
  const Term& b = e.rhs();
  Proof inst = ax(SchemaId::Eq3, Formula::imp(e, Formula::imp(Formula::eq(a, a), Formula::eq(b, a))));
  return Proof::mp(reflexivity(a), Proof::mp(ab, inst));
}

Proof transitivity(const Proof& ab, const Proof& bc) {
  const Formula& e1 = expect_eq(ab, "transitivity");
  const Formula& e2 = expect_eq(bc, "transitivity");
  if (!(e1.rhs() == e2.lhs()))
    throw TacticError("transitivity: " + pretty_print(e1) + " and " + pretty_print(e2) + " do not chain");
  Proof inst = ax(SchemaId::Eq3, Formula::imp(e2, Formula::imp(e1, Formula::eq(e1.lhs(), e2.rhs()))));
  return Proof::mp(ab, Proof::mp(bc, inst));
}

Proof congruence(const Proof& st, const Term& r, const Term& r2) {
  const Formula& e = expect_eq(st, "congruence");
  return Proof::mp(st, ax(SchemaId::Eq2, Formula::imp(e, Formula::eq(r, r2))));
}

Proof eval_closed(const Term& t) {
  return Evaluator().run(t).with_macro("(eval \"" + pretty_print(t) + "\")");
}

Proof rewrite_eq(const Proof& eq, const Formula& f, const Position& pos) {
  Pair p = rewrite_pair(eq, f, pos);
  return iff_intro(p.fwd, p.bwd);
}

Proof rewrite_with(const Proof& f, const Proof& eq, const Position& pos) {
  return Proof::mp(f, rewrite_pair(eq, f.conclusion(), pos).fwd);
}

Proof instantiate(const Proof& forall_proof, const Term& t) {
  const Formula& f = forall_proof.conclusion();
  if (f.kind() != K::Forall) throw TacticError("instantiate: not a universal formula: " + pretty_print(f));
  Formula inst = substitute(f.body(), f.bound_var(), t);
  return Proof::mp(forall_proof, ax(SchemaId::Quant1, Formula::imp(f, inst)));
}

Proof generalize_consequent(const Proof& ab, VarId v) {
  const Formula& f = ab.conclusion();
  if (f.kind() != K::Imp) throw TacticError("generalize: not an implication: " + pretty_print(f));
  if (occurs_free(v, f.antecedent()))
    throw TacticError("generalize: " + var_name(v) + " is free in the antecedent " + pretty_print(f.antecedent()));
  Proof g = Proof::gen(v, ab);
  Formula q = Formula::imp(g.conclusion(),
                           Formula::imp(f.antecedent(), Formula::forall(v, f.consequent())));
  return Proof::mp(g, ax(SchemaId::Quant2, q));
}

}  // namespace tk
