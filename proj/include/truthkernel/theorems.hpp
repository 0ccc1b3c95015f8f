#pragma once

// Derivations of McGee's theorem, the omega-Loeb conditions and Loeb's
// theorem for the omega-truth predicate. The *_proof functions build proof
// objects; the others also check them under a theory configuration.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "truthkernel/kernel.hpp"
#include "truthkernel/proof.hpp"
#include "truthkernel/syntax.hpp"

namespace tk {

// A predicate P(var) with constructors for the three derivability conditions.
struct ProvabilityPredicate {
  std::string name;
  VarId var;
  Formula templ;
  std::function<Proof(const Proof&)> d1;                         // |- A  gives  |- P#A
  std::function<Proof(const Formula&, const Formula&)> d2;       // P#(A -> B) -> (P#A -> P#B)
  std::function<Proof(const Formula&)> d3;                       // P#A -> P#P#A

  Formula apply(const Formula& sentence) const;
};

// T^omega with d1 = m1, d2 = m2, d3 = m3.
ProvabilityPredicate omega_truth_predicate();

// ---- Lemma (M1)-(M3) -------------------------------------------------------

Proof m1_proof(const Proof& phi);
CheckedTheorem m1(const CheckedTheorem& phi);

Proof m2_proof(const Formula& phi, const Formula& psi);
CheckedTheorem m2(const Formula& phi, const Formula& psi, const TheoryConfig& config);

Proof m3_proof(const Formula& phi);
CheckedTheorem m3(const Formula& phi, const TheoryConfig& config);

// The generator behind m1: family T(iter(y, #phi)).
PremiseGenerator m1_generator(const Proof& phi);

// ---- Loeb ------------------------------------------------------------------

Proof loeb_proof(const ProvabilityPredicate& pp, const Formula& phi, const Proof& premise);
CheckedTheorem loeb(const ProvabilityPredicate& pp, const Formula& phi, const CheckedTheorem& premise);

Proof formalized_loeb_proof(const ProvabilityPredicate& pp, const Formula& phi);
CheckedTheorem formalized_loeb(const ProvabilityPredicate& pp, const Formula& phi, const TheoryConfig& config);

// ---- McGee -----------------------------------------------------------------

struct McGeeLines {
  Formula gamma;
  std::vector<std::pair<std::string, Proof>> lines;  // "line 1" .. "line 7"
  Proof omega_step;                                   // T^omega #gamma
};

// Throws MissingSchema when config lacks Cons, T-Imp or UInf.
McGeeLines mcgee_lines(const TheoryConfig& config);
Refutation mcgee_original(const TheoryConfig& config);

struct LoebRoute {
  Proof not_zero_one;   // ~(0 = 1)
  Proof reflection;     // T^omega #(0 = 1) -> 0 = 1
  Proof zero_one;       // 0 = 1
};
LoebRoute mcgee_via_loeb_proofs(const TheoryConfig& config);
Refutation mcgee_via_loeb(const TheoryConfig& config);

struct WitnessReport {
  VarId var;
  Formula family;                        // psi(var) = T(iter(var, #gamma))
  CheckedTheorem universal_negation;     // ~forall var. psi
  std::vector<CheckedTheorem> instances;  // psi(#n) for n < K
};

WitnessReport omega_witness(const TheoryConfig& config, std::size_t k);

// Every omega generator occurring in p (including inside other generators).
std::vector<const PremiseGenerator*> generators_of(const Proof& p);

}  // namespace tk
