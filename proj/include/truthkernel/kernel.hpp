#pragma once

// The trusted checker.
//
// Trusted computing base: the schema matchers below, meta-level evaluation of
// sub_fn / iter_fn / successor and arithmetic (used to admit COMP_* instances),
// and omega-rule generators, which are accepted after their step combinators
// have been replayed and re-checked at omega_samples consecutive instances.
// Step combinators never branch on the value of the numeral they are applied
// at, which is what licenses the passage from the sampled instances to all n.

#include <cstddef>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "truthkernel/proof.hpp"

namespace tk {

struct CheckFailure : std::runtime_error {
  CheckFailure(std::string node, std::string rule, std::string reason);
  std::string node;    // path from the root, e.g. "root/mp.1/gen.0"
  std::string rule;
  std::string reason;
};

// A theorem constructor was asked to run in a theory lacking a schema it needs.
struct MissingSchema : std::runtime_error {
  explicit MissingSchema(SchemaId s);
  SchemaId schema;
};

struct CheckedTheorem {
  Formula formula;
  TheoryConfig theory;
  std::size_t omega_count = 0;   // max Omega nodes on a root-to-leaf path
  std::size_t samples_checked = 0;  // over all distinct Omega nodes
  std::size_t proof_size = 0;    // distinct nodes
  Proof proof;
};

struct Refutation {
  CheckedTheorem positive;
  CheckedTheorem negative;  // proves ~positive.formula
  std::vector<std::pair<std::string, Formula>> narrative;
};

// Fixed axioms.
const Formula& robinson_axiom(int i);  // i in 1..7
const Formula& iter_zero_axiom();
const Formula& iter_step_axiom();

struct AxiomVerdict {
  std::optional<SchemaId> schema;  // set on success
  std::string diagnostic;         // nearest schema and why it failed
};

// Does f instantiate an active schema?
AxiomVerdict is_axiom(const Formula& f, const TheoryConfig& config);
// Does f instantiate this particular schema? On failure *why is filled.
bool instance_of(SchemaId s, const Formula& f, const TheoryConfig& config, std::string* why = nullptr);

class Checker {
 public:
  explicit Checker(TheoryConfig config);

  // Throws CheckFailure.
  CheckedTheorem check(const Proof& p);
  // Returns the number of sampled instances; throws CheckFailure.
  std::size_t validate_generator(const PremiseGenerator& g);

  const TheoryConfig& config() const { return config_; }

 private:
  struct Verified {
    Formula conclusion;
    std::size_t omega_count;
  };

  const Verified& verify(const Proof& p, const std::string& path);
  Verified verify_node(const Proof& p, const std::string& path);
  std::pair<std::size_t, std::size_t> run_generator(const PremiseGenerator& g, const std::string& path);

  TheoryConfig config_;
  // Keyed by node identity; the Proof copy keeps the node alive.
  std::unordered_map<const void*, std::pair<Proof, Verified>> memo_;
  std::unordered_map<const void*, std::size_t> generator_samples_;
};

CheckedTheorem check(const Proof& p, const TheoryConfig& config);
std::size_t validate_generator(const PremiseGenerator& g, const TheoryConfig& config);

// Omega node concluding forall var. family; validation happens in check.
Proof omega_apply(PremiseGenerator g);

}  // namespace tk
