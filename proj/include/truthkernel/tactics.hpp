#pragma once

// Proof constructors. Nothing here is trusted: every Proof produced is an
// ordinary kernel proof and is re-checked by Checker.

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "truthkernel/kernel.hpp"
#include "truthkernel/proof.hpp"
#include "truthkernel/syntax.hpp"

namespace tk {

struct TacticError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotTautology : TacticError {
  NotTautology(const Formula& f, std::vector<std::pair<Formula, bool>> falsifying);
  std::vector<std::pair<Formula, bool>> counterexample;  // atom -> truth value
};

// ---- propositional --------------------------------------------------------

// Atoms are the maximal subformulas that are not ~ or ->. Throws NotTautology.
Proof taut(const Formula& f);

// Truth-table evaluation of f, treating the listed formulas as atoms.
std::vector<Formula> propositional_atoms(const Formula& f);

// Schematic letters for tautology skeletons: T(x_{base+i}).
Formula schematic_atom(std::uint32_t i);
// Proves skeleton[atoms] where skeleton is built from schematic_atom(0..n-1).
Proof schematic_taut(const Formula& skeleton, std::span<const Formula> atoms);

Proof identity(const Formula& a);                            // a -> a
Proof hypothetical_syllogism(const Proof& ab, const Proof& bc);  // a -> c
Proof contrapose(const Proof& ab);                           // ~b -> ~a
Proof iff_intro(const Proof& ab, const Proof& ba);            // a <-> b
Proof iff_forward(const Proof& iff_ab);                      // a -> b
Proof iff_backward(const Proof& iff_ab);                     // b -> a
Proof weaken(const Proof& b, const Formula& a);              // a -> b
Proof compose_left(const Proof& xy, const Formula& z);       // (y -> z) -> (x -> z)
Proof compose_right(const Proof& yz, const Formula& x);      // (x -> y) -> (x -> z)
// From a -> (b -> c) and b, derive a -> c.
Proof discharge_middle(const Proof& abc, const Proof& b);
// From x1 -> (... -> (xd -> z)) and z -> w, derive x1 -> (... -> (xd -> w)).
Proof map_consequent(const Proof& p, std::size_t depth, const Proof& zw);

// ---- equality -------------------------------------------------------------

Proof reflexivity(const Term& t);
Proof symmetry(const Proof& ab);
Proof transitivity(const Proof& ab, const Proof& bc);
// From s = t derive r = r2, where r2 replaces occurrences of s in r by t.
Proof congruence(const Proof& st, const Term& r, const Term& r2);

// Proof of t = #value(t) for closed t, built from COMP_* and EQ schemas.
Proof eval_closed(const Term& t);

// From s = t, prove f <-> f' where f' has t at pos (f must have s there).
Proof rewrite_eq(const Proof& eq, const Formula& f, const Position& pos);
// From a proof of f and s = t, prove f with t at pos.
Proof rewrite_with(const Proof& f, const Proof& eq, const Position& pos);

// ---- quantifiers ----------------------------------------------------------

Proof instantiate(const Proof& forall_proof, const Term& t);
// From a -> b with v not free in a, derive a -> forall v. b.
Proof generalize_consequent(const Proof& ab, VarId v);

// ---- truth ----------------------------------------------------------------

// From a1 -> (a2 -> ... -> c) derive T#a1 -> (T#a2 -> ... -> T#c) by T-Intro
// and T-Imp along the whole right spine.
Proof lift_imp(const Proof& p);

Proof derive_A1(const Formula& phi);  // Tw#phi -> T#(Tw#phi)
Proof derive_A2(const Formula& phi);  // Tw#phi -> T#phi

struct DiagonalResult {
  Formula theta;
  Formula gamma;
  Proof equivalence_proof;  // gamma <-> phi(#gamma)
};

DiagonalResult diagonal_lemma(const Formula& phi, VarId v);

// Replays one step combinator; `target` is the family instance the current
// step of the generator must reach.
Proof apply_step(const StepCombinator& step, const Proof& current, const Formula& target);

}  // namespace tk
