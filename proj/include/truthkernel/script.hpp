#pragma once

// Proof scripts: an S-expression serialization of proof DAGs.
//
//   script    := form*
//   form      := (theory gamma|sigma)
//              | (def NAME proof)          ; names a shared subproof
//              | proof                     ; exactly one: the root
//   proof     := (ref NAME)
//              | (axiom SCHEMA "formula")
//              | (mp proof proof)          ; minor premise, then major
//              | (gen VAR proof)
//              | (tintro proof)
//              | (omega (family VAR "formula") (base proof) (step comb*))
//              | (taut "formula") | (eval "term") | (A1 "formula")
//              | (A2 "formula") | (diag "formula" VAR)
//   comb      := (apply-tintro) | (lift-imp) | (rewrite-eval INDEX*)
//              | (chain proof)
//
// Formulas and terms are written in the concrete grammar of parser.hpp.
// `;` starts a comment running to the end of the line. The macro forms run
// the corresponding tactic; the kernel proof it returns is what gets checked.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "truthkernel/kernel.hpp"
#include "truthkernel/proof.hpp"

namespace tk {

struct ScriptError : std::runtime_error {
  ScriptError(const std::string& msg, std::size_t line);
  std::size_t line;
};

struct Script {
  std::optional<std::string> theory;  // as written in (theory ...)
  Proof proof;
};

Script parse_script(std::string_view text);
std::string serialize_script(const Proof& p, const std::string& theory);

// "gamma" / "sigma"; throws std::invalid_argument otherwise.
TheoryConfig theory_by_name(const std::string& name);

struct Certificate {
  std::string formula;
  std::string theory;
  std::size_t omega_count = 0;
  std::size_t samples_checked = 0;
  std::size_t proof_size = 0;

  static Certificate of(const CheckedTheorem& t);
  nlohmann::json to_json() const;
  // Throws std::invalid_argument on missing or mistyped fields.
  static Certificate from_json(const nlohmann::json& j);

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct BundledProof {
  std::string name;    // file stem under scripts/
  std::string theory;  // theory the script declares
  std::string description;
  Proof proof;
};

// The shipped derivations, built in memory.
std::vector<BundledProof> bundled_proofs();
// File contents for scripts/<name>.tk.
std::string bundled_script_text(const BundledProof& b);

}  // namespace tk
