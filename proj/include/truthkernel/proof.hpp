#pragma once

// Proof objects. Nodes are immutable and shared, so a proof is a DAG; every
// node caches the formula it claims to prove (computed structurally, not
// checked). Only the checker in kernel.hpp decides whether a claim holds.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "truthkernel/syntax.hpp"

namespace tk {

enum class SchemaId : std::uint8_t {
  Prop1,  // A -> (B -> A)
  Prop2,  // (A -> (B -> C)) -> ((A -> B) -> (A -> C))
  Prop3,  // (~A -> ~B) -> (B -> A)
  Quant1,  // forall v. A -> A[t/v], t free for v
  Quant2,  // forall v. (A -> B) -> (A -> forall v. B), v not free in A
  Eq1,     // t = t
  Eq2,     // s = t -> r = r', r' replacing occurrences of s in r by t
  Eq3,     // s = t -> (A -> A'), A atomic, same replacement
  Q1, Q2, Q3, Q4, Q5, Q6, Q7,
  Cons,    // T(#~A) -> ~T(#A)
  TImp,    // T(#(A -> B)) -> (T(#A) -> T(#B))
  UInf,    // forall x. T(sub(#A, #v, x)) -> T(#(forall v. A))
  CompSub,       // sub(#c, #v, #n) = #sub_fn(c, v, n)
  CompIter0,     // forall x. iter(0, x) = x
  CompIterStep,  // forall x. forall y. iter(S(x), y) = sub(sub(#k0, #2, y), #1, x)
  CompSucc,      // S(#n) = #(n + 1)
  CompAdd,       // #a + #b = #(a + b)
  CompMul,       // #a * #b = #(a * b)
};

inline constexpr int kSchemaCount = static_cast<int>(SchemaId::CompMul) + 1;

std::string_view schema_name(SchemaId s);
std::optional<SchemaId> schema_from_name(std::string_view name);

struct TheoryConfig {
  bool has_cons = true;
  bool has_timp = true;
  bool has_uinf = true;
  bool q_axioms = true;
  bool computation_axioms = true;
  std::uint32_t omega_samples = 8;
  std::optional<std::uint32_t> max_omega_count;

  static TheoryConfig gamma();
  static TheoryConfig sigma();
  // "gamma", "sigma" or "custom".
  std::string name() const;

  friend bool operator==(const TheoryConfig&, const TheoryConfig&) = default;
};

class Proof;
struct PremiseGenerator;

struct StepCombinator {
  enum class Kind : std::uint8_t { ApplyTIntro, LiftImp, RewriteEval, ChainWith };
  Kind kind;
  Position position;                 // RewriteEval
  std::shared_ptr<const Proof> lemma;  // ChainWith

  static StepCombinator apply_tintro();
  static StepCombinator lift_imp();
  static StepCombinator rewrite_eval(Position pos);
  static StepCombinator chain_with(Proof lemma);
};

class Proof {
 public:
  enum class Kind : std::uint8_t { Axiom, MP, Gen, TIntro, Omega };

  static Proof axiom(SchemaId schema, Formula instance);
  // `minor` proves A, `major` proves A -> B; the node proves B.
  static Proof mp(Proof minor, Proof major);
  static Proof gen(VarId v, Proof premise);
  static Proof tintro(Proof premise);
  static Proof omega(std::shared_ptr<const PremiseGenerator> gen, Formula conclusion);

  Kind kind() const;
  SchemaId schema() const;        // Axiom
  VarId var() const;              // Gen
  std::span<const Proof> premises() const;  // MP: {minor, major}; Gen, TIntro: {premise}
  const PremiseGenerator& generator() const;  // Omega
  std::shared_ptr<const PremiseGenerator> generator_ptr() const;

  // The formula this node claims, or nullopt if the premises are so malformed
  // that no claim can be formed (e.g. MP on a non-implication).
  const std::optional<Formula>& claim() const;
  // claim(), throwing std::logic_error when absent.
  const Formula& conclusion() const;

  // Script form that regenerates this node (set by tactics), empty otherwise.
  const std::string& macro() const;
  Proof with_macro(std::string form) const;

  const void* id() const { return node_.get(); }
  friend bool operator==(const Proof& a, const Proof& b) { return a.node_ == b.node_; }

  struct Node;

 private:
  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// A finite certificate for the omega-rule: family(n) is family with the
// numeral of n substituted for var; base proves family(0); the steps map a
// proof of family(n) to a proof of family(n + 1) uniformly in n.
struct PremiseGenerator {
  VarId var;
  Formula family;
  Proof base;
  std::vector<StepCombinator> steps;

  Formula instance(const Nat& n) const;
};

}  // namespace tk
