#include "truthkernel/script.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

#include "truthkernel/arithmetization.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"
#include "truthkernel/theorems.hpp"

namespace tk {

ScriptError::ScriptError(const std::string& msg, std::size_t l)
    : std::runtime_error("script line " + std::to_string(l) + ": " + msg), line(l) {}

TheoryConfig theory_by_name(const std::string& name) {
  if (name == "gamma") return TheoryConfig::gamma();
  if (name == "sigma") return TheoryConfig::sigma();
  throw std::invalid_argument("unknown theory '" + name + "' (expected gamma or sigma)");
}

// ---------------------------------------------------------------------------
// Reading

namespace {

struct SExpr {
  enum class Kind { List, Symbol, String } kind;
  std::string text;
  std::vector<SExpr> items;
  std::size_t line;
};

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    while (skip(), i_ < s_.size()) out.push_back(read());
    return out;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;

  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++i_;
      } else if (c == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip();
    if (i_ >= s_.size()) throw ScriptError("unexpected end of input", line_);
    std::size_t line = line_;
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      SExpr list{SExpr::Kind::List, {}, {}, line};
      for (;;) {
        skip();
        if (i_ >= s_.size()) throw ScriptError("unclosed '(' opened here", line);
        if (s_[i_] == ')') {
          ++i_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (c == ')') throw ScriptError("unexpected ')'", line);
    if (c == '"') {
      std::size_t end = s_.find('"', i_ + 1);
      if (end == std::string_view::npos) throw ScriptError("unterminated string", line);
      std::string text(s_.substr(i_ + 1, end - i_ - 1));
      for (char ch : text)
        if (ch == '\n') ++line_;
      i_ = end + 1;
      return {SExpr::Kind::String, std::move(text), {}, line};
    }
    std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' && s_[i_] != ')' &&
           s_[i_] != '"' && s_[i_] != ';')
      ++i_;
    return {SExpr::Kind::Symbol, std::string(s_.substr(start, i_ - start)), {}, line};
  }
};

class Interpreter {
 public:
  Script run(const std::vector<SExpr>& forms) {
    std::optional<std::string> theory;
    std::optional<Proof> root;
    for (const SExpr& f : forms) {
      if (f.kind == SExpr::Kind::List && !f.items.empty() && f.items[0].kind == SExpr::Kind::Symbol) {
        const std::string& head = f.items[0].text;
        if (head == "theory") {
          arity(f, 2);
          theory = symbol(f.items[1]);
          try {
            theory_by_name(*theory);
          } catch (const std::invalid_argument& e) {
            throw ScriptError(e.what(), f.line);
          }
          continue;
        }
        if (head == "def") {
          arity(f, 3);
          std::string name = symbol(f.items[1]);
          if (defs_.count(name)) throw ScriptError("'" + name + "' is already defined", f.line);
          defs_.emplace(name, proof(f.items[2]));
          continue;
        }
      }
      if (root) throw ScriptError("more than one root proof", f.line);
      root = proof(f);
    }
    if (!root) throw ScriptError("script contains no proof", forms.empty() ? 1 : forms.back().line);
    return {theory, *root};
  }

 private:
  std::unordered_map<std::string, Proof> defs_;

  static void arity(const SExpr& e, std::size_t n) {
    if (e.items.size() != n)
      throw ScriptError("(" + e.items[0].text + " ...) takes " + std::to_string(n - 1) + " argument(s)", e.line);
  }

  static const std::string& symbol(const SExpr& e) {
    if (e.kind != SExpr::Kind::Symbol) throw ScriptError("expected a symbol", e.line);
    return e.text;
  }

  static const std::string& string(const SExpr& e) {
    if (e.kind != SExpr::Kind::String) throw ScriptError("expected a quoted string", e.line);
    return e.text;
  }

  static Formula formula(const SExpr& e) {
    try {
      return parse_formula(string(e));
    } catch (const SyntaxError& err) {
      throw ScriptError(err.what(), e.line);
    }
  }

  static Term term(const SExpr& e) {
    try {
      return parse_term(string(e));
    } catch (const SyntaxError& err) {
      throw ScriptError(err.what(), e.line);
    }
  }

  static VarId var(const SExpr& e) {
    try {
      return parse_var(symbol(e));
    } catch (const SyntaxError& err) {
      throw ScriptError(err.what(), e.line);
    }
  }

  static const SExpr& tagged(const SExpr& e, const char* tag) {
    if (e.kind != SExpr::Kind::List || e.items.empty() || e.items[0].kind != SExpr::Kind::Symbol ||
        e.items[0].text != tag)
      throw ScriptError(std::string("expected (") + tag + " ...)", e.line);
    return e;
  }

  Proof proof(const SExpr& e) {
    if (e.kind != SExpr::Kind::List || e.items.empty() || e.items[0].kind != SExpr::Kind::Symbol)
      throw ScriptError("expected a proof form", e.line);
    const std::string& head = e.items[0].text;
    try {
      if (head == "ref") {
        arity(e, 2);
        auto it = defs_.find(symbol(e.items[1]));
        if (it == defs_.end()) throw ScriptError("undefined name '" + e.items[1].text + "'", e.line);
        return it->second;
      }
      if (head == "axiom") {
        arity(e, 3);
        auto s = schema_from_name(symbol(e.items[1]));
        if (!s) throw ScriptError("unknown schema '" + e.items[1].text + "'", e.line);
        return Proof::axiom(*s, formula(e.items[2]));
      }
      if (head == "mp") {
        arity(e, 3);
        return Proof::mp(proof(e.items[1]), proof(e.items[2]));
      }
      if (head == "gen") {
        arity(e, 3);
        return Proof::gen(var(e.items[1]), proof(e.items[2]));
      }
      if (head == "tintro") {
        arity(e, 2);
        return Proof::tintro(proof(e.items[1]));
      }
      if (head == "omega") return omega(e);
      if (head == "taut") {
        arity(e, 2);
        return taut(formula(e.items[1]));
      }
      if (head == "eval") {
        arity(e, 2);
        return eval_closed(term(e.items[1]));
      }
      if (head == "A1") {
        arity(e, 2);
        return derive_A1(formula(e.items[1]));
      }
      if (head == "A2") {
        arity(e, 2);
        return derive_A2(formula(e.items[1]));
      }
      if (head == "diag") {
        arity(e, 3);
        return diagonal_lemma(formula(e.items[1]), var(e.items[2])).equivalence_proof;
      }
    } catch (const ScriptError&) {
      throw;
    } catch (const std::exception& err) {
      throw ScriptError("(" + head + " ...): " + err.what(), e.line);
    }
    throw ScriptError("unknown proof form '" + head + "'", e.line);
  }

  Proof omega(const SExpr& e) {
    arity(e, 4);
    const SExpr& fam = tagged(e.items[1], "family");
    arity(fam, 3);
    const SExpr& base = tagged(e.items[2], "base");
    arity(base, 2);
    const SExpr& step = tagged(e.items[3], "step");
    PremiseGenerator g{var(fam.items[1]), formula(fam.items[2]), proof(base.items[1]), {}};
    for (std::size_t i = 1; i < step.items.size(); ++i) g.steps.push_back(combinator(step.items[i]));
    return omega_apply(std::move(g));
  }

  StepCombinator combinator(const SExpr& e) {
    if (e.kind != SExpr::Kind::List || e.items.empty() || e.items[0].kind != SExpr::Kind::Symbol)
      throw ScriptError("expected a step combinator", e.line);
    const std::string& head = e.items[0].text;
    if (head == "apply-tintro") {
      arity(e, 1);
      return StepCombinator::apply_tintro();
    }
    if (head == "lift-imp") {
      arity(e, 1);
      return StepCombinator::lift_imp();
    }
    if (head == "rewrite-eval") {
      Position pos;
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        const std::string& s = symbol(e.items[i]);
        try {
          std::size_t used = 0;
          unsigned long v = std::stoul(s, &used);
          if (used != s.size() || v > 0xffffffffUL) throw std::invalid_argument(s);
          pos.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
          throw ScriptError("position index '" + s + "' is not a natural number", e.items[i].line);
        }
      }
      return StepCombinator::rewrite_eval(std::move(pos));
    }
    if (head == "chain") {
      arity(e, 2);
      return StepCombinator::chain_with(proof(e.items[1]));
    }
    throw ScriptError("unknown step combinator '" + head + "'", e.line);
  }
};

}  // namespace

Script parse_script(std::string_view text) {
  Reader r(text);
  return Interpreter().run(r.read_all());
}

// ---------------------------------------------------------------------------
// Writing

namespace {

class Writer {
 public:
  std::string run(const Proof& root, const std::string& theory) {
    count(root);
    out_ << "(theory " << theory << ")\n";
    std::string body = expr(root, true);
    out_ << body << "\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  std::unordered_map<const void*, std::size_t> uses_;
  std::unordered_map<const void*, std::string> names_;
  std::size_t next_ = 1;

  static std::vector<Proof> children(const Proof& p) {
    std::vector<Proof> out;
    if (!p.macro().empty()) return out;
    for (const Proof& c : p.premises()) out.push_back(c);
    if (p.kind() == Proof::Kind::Omega) {
      out.push_back(p.generator().base);
      for (const StepCombinator& s : p.generator().steps)
        if (s.lemma) out.push_back(*s.lemma);
    }
    return out;
  }

  void count(const Proof& root) {
    std::vector<Proof> stack{root};
    uses_[root.id()] = 1;
    while (!stack.empty()) {
      Proof p = stack.back();
      stack.pop_back();
      for (const Proof& c : children(p))
        if (uses_[c.id()]++ == 0) stack.push_back(c);
    }
  }

  bool inline_node(const Proof& p) const {
    if (uses_.at(p.id()) > 1) return false;
    return !p.macro().empty() || p.kind() == Proof::Kind::Axiom;
  }

  // Emits definitions for p's dependencies (post-order, iteratively) and
  // returns the text of p itself.
  std::string expr(const Proof& root, bool is_root) {
    struct Frame {
      Proof p;
      bool expanded;
    };
    std::vector<Frame> stack{{root, false}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (names_.count(f.p.id())) {
        stack.pop_back();
        continue;
      }
      if (!f.expanded) {
        f.expanded = true;
        Proof p = f.p;
        for (const Proof& c : children(p))
          if (!inline_node(c) && !names_.count(c.id())) stack.push_back({c, false});
        continue;
      }
      Proof p = f.p;
      stack.pop_back();
      if (p.id() == root.id() && is_root) return text(p);
      std::string name = "p" + std::to_string(next_++);
      out_ << "(def " << name << " " << text(p) << ")\n";
      names_.emplace(p.id(), name);
    }
    return "(ref " + names_.at(root.id()) + ")";
  }

  std::string ref(const Proof& p) {
    if (auto it = names_.find(p.id()); it != names_.end()) return "(ref " + it->second + ")";
    return text(p);
  }

  static std::string quote(const std::string& s) { return "\"" + s + "\""; }

  std::string text(const Proof& p) {
    if (!p.macro().empty()) return p.macro();
    switch (p.kind()) {
      case Proof::Kind::Axiom:
        return "(axiom " + std::string(schema_name(p.schema())) + " " + quote(pretty_print(p.conclusion())) + ")";
      case Proof::Kind::MP: return "(mp " + ref(p.premises()[0]) + " " + ref(p.premises()[1]) + ")";
      case Proof::Kind::Gen: return "(gen " + var_name(p.var()) + " " + ref(p.premises()[0]) + ")";
      case Proof::Kind::TIntro: return "(tintro " + ref(p.premises()[0]) + ")";
      case Proof::Kind::Omega: {
        const PremiseGenerator& g = p.generator();
        std::string s = "(omega (family " + var_name(g.var) + " " + quote(pretty_print(g.family)) + ") (base " +
                        ref(g.base) + ") (step";
        for (const StepCombinator& c : g.steps) {
          switch (c.kind) {
            case StepCombinator::Kind::ApplyTIntro: s += " (apply-tintro)"; break;
            case StepCombinator::Kind::LiftImp: s += " (lift-imp)"; break;
            case StepCombinator::Kind::RewriteEval:
              s += " (rewrite-eval";
              for (std::uint32_t i : c.position) s += " " + std::to_string(i);
              s += ")";
              break;
            case StepCombinator::Kind::ChainWith: s += " (chain " + ref(*c.lemma) + ")"; break;
          }
        }
        return s + "))";
      }
    }
    return "";
  }
};

}  // namespace

std::string serialize_script(const Proof& p, const std::string& theory) { return Writer().run(p, theory); }

// ---------------------------------------------------------------------------
// Certificates

Certificate Certificate::of(const CheckedTheorem& t) {
  return {pretty_print(t.formula), t.theory.name(), t.omega_count, t.samples_checked, t.proof_size};
}

nlohmann::json Certificate::to_json() const {
  return nlohmann::json{{"formula", formula},
                        {"theory", theory},
                        {"omega_count", omega_count},
                        {"samples_checked", samples_checked},
                        {"proof_size", proof_size}};
}

Certificate Certificate::from_json(const nlohmann::json& j) {
  try {
    return {j.at("formula").get<std::string>(), j.at("theory").get<std::string>(),
            j.at("omega_count").get<std::size_t>(), j.at("samples_checked").get<std::size_t>(),
            j.at("proof_size").get<std::size_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Bundled derivations

std::vector<BundledProof> bundled_proofs() {
  TheoryConfig gamma = TheoryConfig::gamma();
  Formula zz = parse_formula("0 = 0");
  Formula zo = parse_formula("0 = #1");
  ProvabilityPredicate pp = omega_truth_predicate();

  McGeeLines m = mcgee_lines(gamma);
  LoebRoute route = mcgee_via_loeb_proofs(gamma);
  Proof refl = reflexivity(Term::zero());
  Proof trivial_reflection = weaken(refl, pp.apply(zz));

  return {
      {"mcgee_omega", "gamma", "McGee, omega step: T^omega #gamma from line 7", m.omega_step},
      {"mcgee_line6", "gamma", "McGee, line 6: ~T^omega #gamma", m.lines[5].second},
      {"mcgee_via_loeb", "gamma", "0 = 1 by Loeb's theorem for T^omega and Cons", route.zero_one},
      {"not_zero_one", "sigma", "~(0 = 1) in Q", route.not_zero_one},
      {"m1_zero_eq_zero", "sigma", "(M1) for 0 = 0", m1_proof(refl)},
      {"m2_zero_one_zero", "sigma", "(M2) for 0 = 1, 0 = 0", m2_proof(zo, zz)},
      {"m3_zero_eq_zero", "sigma", "(M3) for 0 = 0", m3_proof(zz)},
      {"loeb_zero_eq_zero", "sigma", "(L1) with a trivially provable conclusion", loeb_proof(pp, zz, trivial_reflection)},
      {"formalized_loeb_zero_one", "sigma", "(L2) for 0 = 1", formalized_loeb_proof(pp, zo)},
      {"a1_zero_eq_zero", "sigma", "(A1) for 0 = 0", derive_A1(zz)},
      {"a2_zero_eq_zero", "sigma", "(A2) for 0 = 0", derive_A2(zz)},
      {"diag_mcgee", "sigma", "diagonal lemma: gamma <-> ~T^omega #gamma",
       diagonal_lemma(Formula::neg(omega_truth(Term::var(kVarX))), kVarX).equivalence_proof},
  };
}

std::string bundled_script_text(const BundledProof& b) {
  return "; " + b.description + "\n" + serialize_script(b.proof, b.theory);
}

}  // namespace tk
