#include <doctest.h>

#include "oracles.hpp"
#include "truthkernel/arithmetization.hpp"
#include "truthkernel/kernel.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"

using namespace tk;

namespace {

// Q and computation axioms only.
TheoryConfig arithmetic_only() {
  TheoryConfig c = TheoryConfig::gamma();
  c.has_cons = c.has_timp = c.has_uinf = false;
  return c;
}

Formula F(const char* s) { return parse_formula(s); }

}  // namespace

TEST_CASE("taut agrees with the truth-table oracle") {
  oracle::Gen g(20);
  std::vector<Formula> atoms = {F("0 = 0"), F("T(x)"), F("forall y. y = #1"), F("~T(#5) -> 0 = x")};
  Checker checker(TheoryConfig::sigma());
  int proved = 0;
  for (int i = 0; i < 600; ++i) {
    std::vector<Formula> pool(atoms.begin(), atoms.begin() + 1 + static_cast<long>(g.below(4)));
    Formula f = g.propositional(pool, 5);
    CAPTURE(pretty_print(f));
    if (oracle::tautology(f)) {
      CHECK(checker.check(taut(f)).formula == f);
      ++proved;
    } else {
      CHECK_THROWS_AS(taut(f), NotTautology);
    }
  }
  CHECK(proved > 20);
}

TEST_CASE("classic tautologies and a counterexample") {
  for (const char* s : {"T(x) -> T(x)", "~~T(x) -> T(x)", "T(x) \\/ ~T(x)", "(T(x) -> T(y)) -> (~T(y) -> ~T(x))",
                        "((T(x) -> T(y)) -> T(x)) -> T(x)", "T(x) /\\ T(y) <-> T(y) /\\ T(x)"})
    CHECK(check(taut(F(s)), TheoryConfig::sigma()).formula == F(s));
  try {
    taut(F("T(x) -> T(y)"));
    FAIL("expected NotTautology");
  } catch (const NotTautology& e) {
    REQUIRE(e.counterexample.size() == 2);
    std::vector<Formula> ats = {e.counterexample[0].first, e.counterexample[1].first};
    unsigned a = (e.counterexample[0].second ? 1u : 0u) | (e.counterexample[1].second ? 2u : 0u);
    CHECK_FALSE(oracle::truth(F("T(x) -> T(y)"), ats, a));
  }
  CHECK(taut(F("T(x) -> T(x)")).macro() == "(taut \"T(x) -> T(x)\")");
}

TEST_CASE("propositional combinators") {
  TheoryConfig c = TheoryConfig::sigma();
  Proof ab = taut(F("T(x) -> (T(y) -> T(x))"));
  Proof refl = reflexivity(Term::zero());
  CHECK(check(identity(F("T(x)")), c).formula == F("T(x) -> T(x)"));
  Proof xy = weaken(refl, F("T(x)"));
  CHECK(check(xy, c).formula == F("T(x) -> 0 = 0"));
  Proof yz = weaken(reflexivity(Term::var(0)), F("0 = 0"));
  CHECK(check(hypothetical_syllogism(xy, yz), c).formula == F("T(x) -> x = x"));
  CHECK(check(contrapose(xy), c).formula == F("~0 = 0 -> ~T(x)"));
  CHECK(check(compose_left(xy, F("T(z)")), c).formula == F("(0 = 0 -> T(z)) -> (T(x) -> T(z))"));
  CHECK(check(compose_right(yz, F("T(z)")), c).formula == F("(T(z) -> 0 = 0) -> (T(z) -> x = x)"));
  Proof i = iff_intro(identity(F("T(x)")), identity(F("T(x)")));
  CHECK(check(i, c).formula == iff(F("T(x)"), F("T(x)")));
  CHECK(check(iff_forward(i), c).formula == F("T(x) -> T(x)"));
  CHECK(check(discharge_middle(taut(F("T(x) -> (0 = 0 -> T(x))")), refl), c).formula == F("T(x) -> T(x)"));
  CHECK(check(map_consequent(ab, 2, weaken(refl, F("T(x)"))), c).formula == F("T(x) -> (T(y) -> 0 = 0)"));
  CHECK_THROWS_AS(hypothetical_syllogism(xy, xy), TacticError);
}

TEST_CASE("equality tactics") {
  TheoryConfig c = TheoryConfig::sigma();
  Proof e = eval_closed(parse_term("#2 + #3"));
  CHECK(check(symmetry(e), c).formula == F("#5 = #2 + #3"));
  Proof e2 = eval_closed(parse_term("S(#4)"));
  CHECK(check(transitivity(e, symmetry(e2)), c).formula == F("#2 + #3 = S(#4)"));
  CHECK(check(congruence(e, parse_term("S(#2 + #3) * x"), parse_term("S(#5) * x")), c).formula ==
        F("S(#2 + #3) * x = S(#5) * x"));
}

TEST_CASE("eval_closed matches the reference evaluator") {
  oracle::Gen g(21);
  Checker checker(TheoryConfig::sigma());
  for (int i = 0; i < 200; ++i) {
    Term t = oracle::closed_term(g, 4);
    CAPTURE(pretty_print(t));
    CheckedTheorem r = checker.check(eval_closed(t));
    CHECK(r.formula == Formula::eq(t, oracle::numeral(oracle::value(t))));
    CHECK(r.omega_count == 0);
  }
  CHECK_THROWS_AS(eval_closed(Term::var(0)), TacticError);
}

TEST_CASE("rewriting at positions") {
  TheoryConfig c = TheoryConfig::sigma();
  Proof e = eval_closed(parse_term("#2 + #2"));
  Formula f = F("forall x. ~(T(#2 + #2) -> x = #2 + #2)");
  Proof r = rewrite_eq(e, f, Position{0, 0, 0, 0});
  CHECK(check(r, c).formula == iff(f, F("forall x. ~(T(#4) -> x = #2 + #2)")));
  Proof r2 = rewrite_eq(e, f, Position{0, 0, 1, 1});
  CHECK(check(r2, c).formula == iff(f, F("forall x. ~(T(#2 + #2) -> x = #4)")));
  CHECK_THROWS_AS(rewrite_eq(e, f, Position{0, 0, 1, 0}), TacticError);
  // the equation may not mention the bound variable
  CHECK_THROWS_AS(rewrite_eq(eval_closed(parse_term("#1")), F("forall x. T(x)"), Position{0, 0}), TacticError);

  Proof base = reflexivity(parse_term("#2 + #2"));
  CHECK(check(rewrite_with(base, e, Position{1}), c).formula == F("#2 + #2 = #4"));
}

TEST_CASE("quantifier tactics") {
  TheoryConfig c = TheoryConfig::sigma();
  Proof all = Proof::gen(0, reflexivity(Term::var(0)));
  CHECK(check(instantiate(all, numeral(Nat(7))), c).formula == F("#7 = #7"));
  Proof ab = weaken(reflexivity(Term::var(0)), F("0 = 0"));
  CHECK(check(generalize_consequent(ab, 0), c).formula == F("0 = 0 -> forall x. x = x"));
  CHECK_THROWS_AS(generalize_consequent(weaken(reflexivity(Term::var(0)), F("T(x)")), 0), TacticError);
}

TEST_CASE("A1 and A2 check without Cons and without the omega-rule") {
  for (const char* s : {"0 = 0", "~T(#3)", "forall y. y = y"}) {
    CAPTURE(s);
    Formula phi = F(s);
    CheckedTheorem a1 = check(derive_A1(phi), TheoryConfig::sigma());
    CheckedTheorem a2 = check(derive_A2(phi), TheoryConfig::sigma());
    Formula w = omega_truth(name_of(phi));
    CHECK(a1.formula == Formula::imp(w, Formula::tr(name_of(w))));
    CHECK(a2.formula == Formula::imp(w, Formula::tr(name_of(phi))));
    CHECK(a1.omega_count == 0);
    CHECK(a2.omega_count == 0);
  }
}

TEST_CASE("lift_imp") {
  Proof p = taut(F("0 = 0 -> (~0 = 0 -> 0 = #1)"));
  Formula expect = Formula::imp(Formula::tr(name_of(F("0 = 0"))),
                                Formula::imp(Formula::tr(name_of(F("~0 = 0"))), Formula::tr(name_of(F("0 = #1")))));
  CHECK(check(lift_imp(p), TheoryConfig::sigma()).formula == expect);
  CHECK_THROWS_AS(check(lift_imp(p), arithmetic_only()), CheckFailure);
}

TEST_CASE("diagonal lemma needs only arithmetic") {
  for (const char* s : {"~forall y. T(iter(y, v))", "T(v)", "v = #3"}) {
    CAPTURE(s);
    Formula phi = F(s);
    DiagonalResult d = diagonal_lemma(phi, 4);
    CheckedTheorem t = check(d.equivalence_proof, arithmetic_only());
    CHECK(t.formula == iff(d.gamma, substitute(phi, 4, name_of(d.gamma))));
    CHECK(d.gamma == diagonal_sentence(phi, 4).gamma);
  }
}

TEST_CASE("apply_step") {
  TheoryConfig c = TheoryConfig::sigma();
  Proof z = reflexivity(Term::zero());
  Formula target = Formula::tr(name_of(F("0 = 0")));
  CHECK(apply_step(StepCombinator::apply_tintro(), z, target).conclusion() == target);
  Proof e = eval_closed(parse_term("#1 + #1"));
  Proof cur = reflexivity(parse_term("#1 + #1"));
  Proof stepped = apply_step(StepCombinator::rewrite_eval({1}), cur, F("#1 + #1 = #2"));
  CHECK(check(stepped, c).formula == F("#1 + #1 = #2"));
  CHECK_THROWS(apply_step(StepCombinator::rewrite_eval({1}), cur, F("#1 + #1 = #3")));
}
