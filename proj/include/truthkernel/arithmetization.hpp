#pragma once

// Goedel coding and the meta-level functions the computation axioms represent.
//
// Codes are the big-endian reading of a prefix-free byte serialization of the
// syntax tree. Canonical numeral subterms are serialized by value, so the code
// of an expression that mentions the name of another code grows by the byte
// length of that code rather than by the size of its numeral term.

#include <string>
#include <variant>
#include <vector>

#include "truthkernel/syntax.hpp"

namespace tk {

using Expr = std::variant<Term, Formula>;

struct DecodeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Canonical binary numeral: 0, S(0), and for n >= 2 with n = 2m + b,
// S^b(S(S(0)) * numeral(m)).
Term numeral(const Nat& n);
inline Term numeral(unsigned long n) { return numeral(Nat(n)); }

// Standard-model value of a closed term; iter and sub are interpreted by
// iter_fn and sub_fn. Throws std::invalid_argument on open terms or on sub
// applied to a number that is not a formula code.
Nat evaluate(const Term& t);

std::vector<unsigned char> serialize(const Term& t);
std::vector<unsigned char> serialize(const Formula& f);

Nat encode(const Term& t);
Nat encode(const Formula& f);
Nat encode(const Expr& e);

Expr decode(const Nat& code);
Formula decode_formula(const Nat& code);

// The name of an expression: the numeral of its code.
Term name_of(const Formula& f);
Term name_of(const Term& t);

// Code of the formula obtained by substituting numeral(n) for v in the formula
// coded by c.
Nat sub_fn(const Nat& c, VarId v, const Nat& n);

// Template Tr(iter(y, z)) whose code drives the iteration step.
const Formula& iter_step_template();
const Nat& iter_step_code();

// iter_fn(0, c) = c and iter_fn(n + 1, c) = code of T(iter(#n, #c)), computed
// as sub_fn(sub_fn(k0, z, c), y, n).
Nat iter_fn(const Nat& n, const Nat& c);

// forall y. T(iter(y, t)) with y fresh for t.
Formula omega_truth(const Term& t);

// sub(name_of(f), #v, x): denotes the code of f with the numeral of x's value
// substituted for v.
Term dot_term(const Formula& f, VarId v, VarId x);

// The self-application term sub(v, #v, v).
Term self_substitution(VarId v);

struct DiagonalSentence {
  Formula theta;  // f with v replaced by self_substitution(v)
  Formula gamma;  // theta with v replaced by name_of(theta)
  Term self_reference;  // self_substitution(v) at name_of(theta); evaluates to the code of gamma
};

// Throws std::invalid_argument when f has free variables other than v.
DiagonalSentence diagonal_sentence(const Formula& f, VarId v);

}  // namespace tk
