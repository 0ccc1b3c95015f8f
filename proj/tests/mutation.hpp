#pragma once

// Single-node mutations of proof DAGs. A mutant replaces one node and rebuilds
// every ancestor on the way back to the root, generator bases and chained
// lemmas included.

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "oracles.hpp"
#include "truthkernel/kernel.hpp"
#include "truthkernel/proof.hpp"

namespace mutation {

using tk::Formula;
using tk::Proof;
using tk::Term;

inline std::vector<Proof> children(const Proof& p) {
  std::vector<Proof> out(p.premises().begin(), p.premises().end());
  if (p.kind() == Proof::Kind::Omega) {
    out.push_back(p.generator().base);
    for (const auto& s : p.generator().steps)
      if (s.lemma) out.push_back(*s.lemma);
  }
  return out;
}

// Distinct nodes, each listed once.
inline std::vector<Proof> nodes(const Proof& root) {
  std::vector<Proof> out;
  std::unordered_set<const void*> seen;
  std::vector<Proof> stack{root};
  while (!stack.empty()) {
    Proof p = stack.back();
    stack.pop_back();
    if (!seen.insert(p.id()).second) continue;
    out.push_back(p);
    for (const Proof& c : children(p)) stack.push_back(c);
  }
  return out;
}

// Perturbs one term occurrence: t becomes S(t).
inline Formula perturb(const Formula& f, oracle::Gen& g) {
  auto positions = oracle::term_positions(f);
  const tk::Position& pos = positions[g.below(positions.size())];
  return tk::replace_term_at(f, pos, Term::succ(*tk::term_at(f, pos)));
}

struct Mutant {
  Proof proof;
  std::string description;
};

// Replacement for `p` that claims something else or is built differently.
inline Mutant mutate_node(const Proof& p, oracle::Gen& g) {
  switch (p.kind()) {
    case Proof::Kind::Axiom: {
      const Formula& f = p.conclusion();
      if (g.coin(0.8)) return {Proof::axiom(p.schema(), perturb(f, g)), "axiom term perturbed"};
      return {Proof::axiom(p.schema(), Formula::neg(f)), "axiom negated"};
    }
    case Proof::Kind::MP: {
      const Proof& minor = p.premises()[0];
      const Proof& major = p.premises()[1];
      if (g.coin()) return {Proof::mp(major, minor), "mp premises swapped"};
      return {Proof::mp(minor, minor), "mp major replaced by minor"};
    }
    case Proof::Kind::Gen: {
      tk::VarId v = p.var();
      tk::VarId w = static_cast<tk::VarId>((v + 1 + g.below(5)) % 6);
      if (g.coin(0.7)) return {Proof::gen(w, p.premises()[0]), "gen variable changed"};
      return {p.premises()[0], "gen dropped"};
    }
    case Proof::Kind::TIntro:
      if (g.coin()) return {Proof::tintro(Proof::tintro(p.premises()[0])), "tintro doubled"};
      return {p.premises()[0], "tintro dropped"};
    case Proof::Kind::Omega: {
      tk::PremiseGenerator gen = p.generator();
      switch (g.below(3)) {
        case 0:
          if (!gen.steps.empty()) {
            gen.steps.erase(gen.steps.begin() + static_cast<long>(g.below(gen.steps.size())));
            return {Proof::omega(std::make_shared<tk::PremiseGenerator>(gen), p.conclusion()), "omega step removed"};
          }
          [[fallthrough]];
        case 1: {
          gen.steps.push_back(gen.steps.empty() ? tk::StepCombinator::apply_tintro() : gen.steps.front());
          return {Proof::omega(std::make_shared<tk::PremiseGenerator>(gen), p.conclusion()), "omega step repeated"};
        }
        default: {
          Formula family = perturb(gen.family, g);
          gen.family = family;
          return {tk::omega_apply(gen), "omega family perturbed"};
        }
      }
    }
  }
  return {p, "unchanged"};
}

// Rebuilds root with `target` replaced by `replacement`.
class Rebuilder {
 public:
  Rebuilder(const Proof& target, const Proof& replacement) : target_(target.id()), replacement_(replacement) {}

  Proof operator()(const Proof& p) {
    if (p.id() == target_) return replacement_;
    if (auto it = memo_.find(p.id()); it != memo_.end()) return it->second;
    Proof out = p;
    std::vector<Proof> kids = children(p);
    std::vector<Proof> rebuilt;
    bool changed = false;
    for (const Proof& k : kids) {
      rebuilt.push_back((*this)(k));
      changed = changed || !(rebuilt.back() == k);
    }
    if (changed) {
      switch (p.kind()) {
        case Proof::Kind::Axiom: break;
        case Proof::Kind::MP: out = Proof::mp(rebuilt[0], rebuilt[1]); break;
        case Proof::Kind::Gen: out = Proof::gen(p.var(), rebuilt[0]); break;
        case Proof::Kind::TIntro: out = Proof::tintro(rebuilt[0]); break;
        case Proof::Kind::Omega: {
          tk::PremiseGenerator gen = p.generator();
          gen.base = rebuilt[0];
          std::size_t i = 1;
          for (auto& s : gen.steps)
            if (s.lemma) s = tk::StepCombinator::chain_with(rebuilt[i++]);
          out = Proof::omega(std::make_shared<tk::PremiseGenerator>(gen), p.conclusion());
          break;
        }
      }
    }
    memo_.emplace(p.id(), out);
    return out;
  }

 private:
  const void* target_;
  Proof replacement_;
  std::unordered_map<const void*, Proof> memo_;
};

}  // namespace mutation
