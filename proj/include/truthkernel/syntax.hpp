#pragma once

// Abstract syntax of the arithmetical language with a unary truth predicate T
// and the two designated function symbols iter/2 and sub/3.
//
// Terms and formulas are immutable, hash-consed-by-value trees: every node
// caches its hash, free variables and (for terms) its value when the term is a
// canonical numeral. Copies share structure.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tk {

using Nat = mpz_class;
using VarId = std::uint32_t;

// Conventional variable indices. Concrete syntax names 0..5 as x y z u v w.
inline constexpr VarId kVarX = 0;
inline constexpr VarId kVarY = 1;
inline constexpr VarId kVarZ = 2;

enum class FnSymbol : std::uint8_t { Iter, Sub };

constexpr std::size_t arity(FnSymbol f) { return f == FnSymbol::Iter ? 2 : 3; }
const char* symbol_name(FnSymbol f);

struct SyntaxError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sorted, duplicate-free set of variable indices.
using VarSet = std::vector<VarId>;

bool contains(const VarSet& s, VarId v);

class Term {
 public:
  enum class Kind : std::uint8_t { Var, Zero, Succ, Add, Mul, App };

  static Term var(VarId v);
  static Term zero();
  static Term succ(Term t);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);
  // Throws SyntaxError on arity mismatch.
  static Term app(FnSymbol f, std::vector<Term> args);

  Kind kind() const;
  VarId var_index() const;  // Var only
  FnSymbol symbol() const;  // App only
  std::span<const Term> args() const;  // Succ/Add/Mul/App children

  // Value of the term when it is literally the canonical numeral of that
  // value (see numeral() in arithmetization.hpp), nullptr otherwise.
  const Nat* numeral_value() const;

  const VarSet& free_vars() const;
  bool closed() const { return free_vars().empty(); }
  std::size_t hash() const;
  std::size_t size() const;  // node count of the tree, saturating

  bool same_node(const Term& o) const { return node_ == o.node_; }
  friend bool operator==(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Node n);
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Eq, Tr, Not, Imp, Forall };

  static Formula eq(Term a, Term b);
  static Formula tr(Term t);
  static Formula neg(Formula f);
  static Formula imp(Formula a, Formula b);
  static Formula forall(VarId v, Formula body);

  Kind kind() const;
  std::span<const Term> terms() const;        // Eq: 2, Tr: 1
  std::span<const Formula> children() const;  // Not: 1, Imp: 2, Forall: 1
  VarId bound_var() const;                    // Forall only

  const Term& lhs() const { return terms()[0]; }
  const Term& rhs() const { return terms()[1]; }
  const Formula& body() const { return children()[0]; }
  const Formula& antecedent() const { return children()[0]; }
  const Formula& consequent() const { return children()[1]; }

  bool is_atomic() const { return kind() == Kind::Eq || kind() == Kind::Tr; }
  const VarSet& free_vars() const;
  bool is_sentence() const { return free_vars().empty(); }
  std::size_t hash() const;
  std::size_t size() const;

  bool same_node(const Formula& o) const { return node_ == o.node_; }
  friend bool operator==(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);
  std::shared_ptr<const Node> node_;
};

// Derived connectives, expanded into {~, ->, forall}.
Formula conj(Formula a, Formula b);     // ~(a -> ~b)
Formula disj(Formula a, Formula b);     // ~a -> b
Formula iff(Formula a, Formula b);      // (a -> b) /\ (b -> a)
Formula exists(VarId v, Formula body);  // ~forall v. ~body

// Inverse of iff(); nullopt when f does not have that exact shape.
std::optional<std::pair<Formula, Formula>> match_iff(const Formula& f);

VarSet free_vars(const Term& t);
VarSet free_vars(const Formula& f);
bool occurs_free(VarId v, const Formula& f);

// Smallest index not in `avoid`.
VarId fresh_var(const VarSet& avoid);

// Capture-avoiding substitution of t for the free occurrences of v. Bound
// variables that would capture a variable of t are renamed to the smallest
// fresh index. Returns the argument unchanged when v does not occur free.
Term substitute(const Term& s, VarId v, const Term& t);
Formula substitute(const Formula& f, VarId v, const Term& t);

// Replaces every occurrence of the atom `from` (compared structurally) by `to`.
Formula replace_atom(const Formula& f, const Formula& from, const Formula& to);

// Positions address a term occurrence inside a formula: a path of child
// indices through formula children, then formula terms, then term arguments.
// For Eq and Tr the step into the terms uses the term index.
using Position = std::vector<std::uint32_t>;

std::optional<Term> term_at(const Formula& f, std::span<const std::uint32_t> pos);
// Throws SyntaxError when pos does not address a term.
Formula replace_term_at(const Formula& f, std::span<const std::uint32_t> pos, const Term& t);

// Concrete names: x y z u v w for 0..5, x<n> beyond.
std::string var_name(VarId v);

}  // namespace tk

template <>
struct std::hash<tk::Term> {
  std::size_t operator()(const tk::Term& t) const noexcept { return t.hash(); }
};
template <>
struct std::hash<tk::Formula> {
  std::size_t operator()(const tk::Formula& f) const noexcept { return f.hash(); }
};
