#include "truthkernel/proof.hpp"

#include <array>
#include <stdexcept>

#include "truthkernel/arithmetization.hpp"

namespace tk {

namespace {

constexpr std::array<std::string_view, kSchemaCount> kSchemaNames = {
    "PROP1", "PROP2", "PROP3", "QUANT1", "QUANT2", "EQ1", "EQ2", "EQ3",
    "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7",
    "CONS", "TIMP", "UINF",
    "COMP_SUB", "COMP_ITER0", "COMP_ITER_STEP", "COMP_SUCC", "COMP_ADD", "COMP_MUL",
};

}  // namespace

std::string_view schema_name(SchemaId s) { return kSchemaNames[static_cast<std::size_t>(s)]; }

std::optional<SchemaId> schema_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSchemaNames.size(); ++i)
    if (kSchemaNames[i] == name) return static_cast<SchemaId>(i);
  return std::nullopt;
}

TheoryConfig TheoryConfig::gamma() { return TheoryConfig{}; }

TheoryConfig TheoryConfig::sigma() {
  TheoryConfig c;
  c.has_cons = false;
  return c;
}

std::string TheoryConfig::name() const {
  bool base = has_timp && has_uinf && q_axioms && computation_axioms;
  if (base && has_cons) return "gamma";
  if (base && !has_cons) return "sigma";
  return "custom";
}

StepCombinator StepCombinator::apply_tintro() { return {Kind::ApplyTIntro, {}, nullptr}; }
StepCombinator StepCombinator::lift_imp() { return {Kind::LiftImp, {}, nullptr}; }
StepCombinator StepCombinator::rewrite_eval(Position pos) { return {Kind::RewriteEval, std::move(pos), nullptr}; }
StepCombinator StepCombinator::chain_with(Proof lemma) {
  return {Kind::ChainWith, {}, std::make_shared<const Proof>(std::move(lemma))};
}

struct Proof::Node {
  Kind kind;
  SchemaId schema = SchemaId::Prop1;
  VarId var = 0;
  std::vector<Proof> premises;
  std::shared_ptr<const PremiseGenerator> gen;
  std::optional<Formula> claim;
  std::string macro;
};

Proof Proof::axiom(SchemaId schema, Formula instance) {
  Node n{Kind::Axiom};
  n.schema = schema;
  n.claim = std::move(instance);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::mp(Proof minor, Proof major) {
  Node n{Kind::MP};
  const auto& c = major.claim();
  if (c && c->kind() == Formula::Kind::Imp) n.claim = c->consequent();
  n.premises = {std::move(minor), std::move(major)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::gen(VarId v, Proof premise) {
  Node n{Kind::Gen};
  n.var = v;
  if (premise.claim()) n.claim = Formula::forall(v, *premise.claim());
  n.premises = {std::move(premise)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::tintro(Proof premise) {
  Node n{Kind::TIntro};
  if (premise.claim()) n.claim = Formula::tr(name_of(*premise.claim()));
  n.premises = {std::move(premise)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::omega(std::shared_ptr<const PremiseGenerator> gen, Formula conclusion) {
  Node n{Kind::Omega};
  n.gen = std::move(gen);
  n.claim = std::move(conclusion);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof::Kind Proof::kind() const { return node_->kind; }
SchemaId Proof::schema() const { return node_->schema; }
VarId Proof::var() const { return node_->var; }
std::span<const Proof> Proof::premises() const { return node_->premises; }
const PremiseGenerator& Proof::generator() const { return *node_->gen; }
std::shared_ptr<const PremiseGenerator> Proof::generator_ptr() const { return node_->gen; }
const std::optional<Formula>& Proof::claim() const { return node_->claim; }
const std::string& Proof::macro() const { return node_->macro; }

const Formula& Proof::conclusion() const {
  if (!node_->claim) throw std::logic_error("proof node has no well-formed conclusion");
  return *node_->claim;
}

Proof Proof::with_macro(std::string form) const {
  Node n = *node_;
  n.macro = std::move(form);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Formula PremiseGenerator::instance(const Nat& n) const { return substitute(family, var, numeral(n)); }

}  // namespace tk
