// Truth-theoretic derivations: lifting implications under T, the two
// omega-truth principles, the diagonal lemma and the generator step
// combinators.

#include "truthkernel/arithmetization.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"

namespace tk {

namespace {

using K = Formula::Kind;

Proof ax(SchemaId s, Formula f) { return Proof::axiom(s, std::move(f)); }

// T(#(a -> b)) -> (T(#a) -> T(#b))
Proof timp(const Formula& ab) {
  Formula t_ab = Formula::tr(name_of(ab));
  Formula t_a = Formula::tr(name_of(ab.antecedent()));
  Formula t_b = Formula::tr(name_of(ab.consequent()));
  return ax(SchemaId::TImp, Formula::imp(t_ab, Formula::imp(t_a, t_b)));
}

// Positions of the free occurrences of v in f.
void free_positions(const Term& t, VarId v, Position& cur, std::vector<Position>& out) {
  if (!contains(t.free_vars(), v)) return;
  if (t.kind() == Term::Kind::Var) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t i = 0; i < t.args().size(); ++i) {
    cur.push_back(i);
    free_positions(t.args()[i], v, cur, out);
    cur.pop_back();
  }
}

void free_positions(const Formula& f, VarId v, Position& cur, std::vector<Position>& out) {
  if (!occurs_free(v, f)) return;
  if (f.is_atomic()) {
    for (std::uint32_t i = 0; i < f.terms().size(); ++i) {
      cur.push_back(i);
      free_positions(f.terms()[i], v, cur, out);
      cur.pop_back();
    }
    return;
  }
  for (std::uint32_t i = 0; i < f.children().size(); ++i) {
    cur.push_back(i);
    free_positions(f.children()[i], v, cur, out);
    cur.pop_back();
  }
}

// Proves the formula obtained from current by replacing the closed term at pos
// with the (equal-valued) closed term target has there.
Proof rewrite_towards(const Proof& current, const Formula& target, const Position& pos) {
  auto from = term_at(current.conclusion(), pos);
  auto to = term_at(target, pos);
  if (!from || !to) throw TacticError("rewrite-eval: no term at the given position");
  if (*from == *to) return current;
  Proof a = eval_closed(*from);
  Proof b = eval_closed(*to);
  if (!(a.conclusion().rhs() == b.conclusion().rhs()))
    throw TacticError("rewrite-eval: " + pretty_print(*from) + " and " + pretty_print(*to) + " have different values");
  return rewrite_with(current, transitivity(a, symmetry(b)), pos);
}

}  // namespace

Proof lift_imp(const Proof& p) {
  const Formula& f = p.conclusion();
  if (f.kind() != K::Imp) throw TacticError("lift-imp: not an implication: " + pretty_print(f));
  Proof cur = Proof::mp(Proof::tintro(p), timp(f));
  Formula rest = f.consequent();
  for (std::size_t depth = 1; rest.kind() == K::Imp; ++depth) {
    cur = map_consequent(cur, depth, timp(rest));
    rest = rest.consequent();
  }
  return cur;
}

Proof derive_A2(const Formula& phi) {
  Term c = name_of(phi);
  Formula rho = omega_truth(c);
  Proof spec = ax(SchemaId::Quant1, Formula::imp(rho, substitute(rho.body(), rho.bound_var(), Term::zero())));
  Proof zero = instantiate(ax(SchemaId::CompIter0, iter_zero_axiom()), c);
  return rewrite_with(spec, zero, {1, 0}).with_macro("(A2 \"" + pretty_print(phi) + "\")");
}

Proof derive_A1(const Formula& phi) {
  Term c = name_of(phi);
  Formula rho = omega_truth(c);
  VarId y = rho.bound_var();
  VarId x = y == kVarX ? kVarZ : kVarX;
  Term tx = Term::var(x);
  Proof spec = ax(SchemaId::Quant1, Formula::imp(rho, substitute(rho.body(), y, Term::succ(tx))));
  Proof step = instantiate(instantiate(ax(SchemaId::CompIterStep, iter_step_axiom()), tx), c);
  // sub(sub(#k0, #z, c), #y, x): evaluate the inner, closed part.
  const Term& outer = step.conclusion().rhs();
  Proof inner = eval_closed(outer.args()[0]);
  Term dot = Term::app(FnSymbol::Sub, {inner.conclusion().rhs(), outer.args()[1], outer.args()[2]});
  Proof eq = transitivity(step, congruence(inner, outer, dot));
  Proof to_dot = generalize_consequent(rewrite_with(spec, eq, {1, 0}), x);
  Formula premise = to_dot.conclusion().consequent();
  Proof uinf = ax(SchemaId::UInf, Formula::imp(premise, Formula::tr(name_of(rho))));
  return hypothetical_syllogism(to_dot, uinf).with_macro("(A1 \"" + pretty_print(phi) + "\")");
}

DiagonalResult diagonal_lemma(const Formula& phi, VarId v) {
  DiagonalSentence ds = diagonal_sentence(phi, v);
  Proof eq = eval_closed(ds.self_reference);
  std::vector<Position> positions;
  Position cur;
  free_positions(phi, v, cur, positions);

  std::optional<Proof> fwd, bwd;
  Formula f = ds.gamma;
  for (const Position& pos : positions) {
    Proof e = rewrite_eq(eq, f, pos);
    Proof step_f = iff_forward(e);
    Proof step_b = iff_backward(e);
    fwd = fwd ? hypothetical_syllogism(*fwd, step_f) : step_f;
    bwd = bwd ? hypothetical_syllogism(step_b, *bwd) : step_b;
    f = step_f.conclusion().consequent();
  }
  Proof equivalence = fwd ? iff_intro(*fwd, *bwd) : iff_intro(identity(f), identity(f));
  std::string form = "(diag \"" + pretty_print(phi) + "\" " + var_name(v) + ")";
  return {ds.theta, ds.gamma, equivalence.with_macro(form)};
}

Proof apply_step(const StepCombinator& step, const Proof& current, const Formula& target) {
  switch (step.kind) {
    case StepCombinator::Kind::ApplyTIntro: return Proof::tintro(current);
    case StepCombinator::Kind::LiftImp: return lift_imp(current);
    case StepCombinator::Kind::RewriteEval: return rewrite_towards(current, target, step.position);
    case StepCombinator::Kind::ChainWith:
      if (!step.lemma) throw TacticError("chain: missing lemma");
      return hypothetical_syllogism(*step.lemma, current);
  }
  throw TacticError("unknown step combinator");
}

}  // namespace tk
