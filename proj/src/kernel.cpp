#include "truthkernel/kernel.hpp"

#include <algorithm>
#include <unordered_set>

#include "truthkernel/arithmetization.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"

namespace tk {

CheckFailure::CheckFailure(std::string n, std::string r, std::string why)
    : std::runtime_error("check failed at " + n + " [" + r + "]: " + why),
      node(std::move(n)),
      rule(std::move(r)),
      reason(std::move(why)) {}

MissingSchema::MissingSchema(SchemaId s)
    : std::runtime_error("MissingSchema(" + std::string(schema_name(s)) + ")"), schema(s) {}

// ---------------------------------------------------------------------------
// Fixed axioms

const Formula& robinson_axiom(int i) {
  static const std::vector<Formula> q = {
      parse_formula("forall x. ~S(x) = 0"),
      parse_formula("forall x. forall y. S(x) = S(y) -> x = y"),
      parse_formula("forall x. ~x = 0 -> exists y. x = S(y)"),
      parse_formula("forall x. (x + 0) = x"),
      parse_formula("forall x. forall y. (x + S(y)) = S((x + y))"),
      parse_formula("forall x. (x * 0) = 0"),
      parse_formula("forall x. forall y. (x * S(y)) = ((x * y) + x)"),
  };
  if (i < 1 || i > 7) throw std::out_of_range("Robinson axioms are numbered 1..7");
  return q[static_cast<std::size_t>(i - 1)];
}

const Formula& iter_zero_axiom() {
  static const Formula f = parse_formula("forall x. iter(0, x) = x");
  return f;
}

const Formula& iter_step_axiom() {
  static const Formula f = [] {
    Term x = Term::var(kVarX);
    Term y = Term::var(kVarY);
    Term inner = Term::app(FnSymbol::Sub, {numeral(iter_step_code()), numeral(Nat(kVarZ)), y});
    Term rhs = Term::app(FnSymbol::Sub, {inner, numeral(Nat(kVarY)), x});
    Term lhs = Term::app(FnSymbol::Iter, {Term::succ(x), y});
    return Formula::forall(kVarX, Formula::forall(kVarY, Formula::eq(lhs, rhs)));
  }();
  return f;
}

// ---------------------------------------------------------------------------
// Schema matchers

namespace {

using K = Formula::Kind;

// Result of matching one schema: ok, or how far the shape got before failing.
struct Match {
  bool ok = false;
  int progress = 0;
  std::string why;
};

Match pass() { return {true, 100, {}}; }
Match fail(int progress, std::string why) { return {false, progress, std::move(why)}; }

bool is_imp(const Formula& f) { return f.kind() == K::Imp; }

Match match_prop1(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.consequent())) return fail(0, "expected A -> (B -> A)");
  if (!(f.antecedent() == f.consequent().consequent())) return fail(2, "outer antecedent differs from inner consequent");
  return pass();
}

Match match_prop2(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.antecedent()) || !is_imp(f.antecedent().consequent()) || !is_imp(f.consequent()) ||
      !is_imp(f.consequent().antecedent()) || !is_imp(f.consequent().consequent()))
    return fail(0, "expected (A -> (B -> C)) -> ((A -> B) -> (A -> C))");
  const Formula& a = f.antecedent().antecedent();
  const Formula& b = f.antecedent().consequent().antecedent();
  const Formula& c = f.antecedent().consequent().consequent();
  const Formula& ab = f.consequent().antecedent();
  const Formula& ac = f.consequent().consequent();
  if (!(ab.antecedent() == a) || !(ab.consequent() == b)) return fail(2, "middle implication is not A -> B");
  if (!(ac.antecedent() == a) || !(ac.consequent() == c)) return fail(2, "final implication is not A -> C");
  return pass();
}

Match match_prop3(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.antecedent()) || !is_imp(f.consequent()) ||
      f.antecedent().antecedent().kind() != K::Not || f.antecedent().consequent().kind() != K::Not)
    return fail(0, "expected (~A -> ~B) -> (B -> A)");
  const Formula& a = f.antecedent().antecedent().body();
  const Formula& b = f.antecedent().consequent().body();
  if (!(f.consequent().antecedent() == b) || !(f.consequent().consequent() == a))
    return fail(2, "consequent is not B -> A");
  return pass();
}

// Finds t with c = b[t/v] where no free variable of t is captured.
struct InstMatcher {
  VarId v;
  std::optional<Term> t;
  std::vector<VarId> bound;

  bool captured(const Term& u) const {
    for (VarId w : u.free_vars())
      if (std::find(bound.begin(), bound.end(), w) != bound.end()) return true;
    return false;
  }

  bool term(const Term& b, const Term& c) {
    if (!contains(b.free_vars(), v)) return b == c;
    if (b.kind() == Term::Kind::Var) {
      if (captured(c)) return false;
      if (t) return *t == c;
      t = c;
      return true;
    }
    if (b.kind() != c.kind() || b.args().size() != c.args().size()) return false;
    if (b.kind() == Term::Kind::App && b.symbol() != c.symbol()) return false;
    for (std::size_t i = 0; i < b.args().size(); ++i)
      if (!term(b.args()[i], c.args()[i])) return false;
    return true;
  }

  bool formula(const Formula& b, const Formula& c) {
    if (!occurs_free(v, b)) return b == c;
    if (b.kind() != c.kind()) return false;
    switch (b.kind()) {
      case K::Eq: return term(b.lhs(), c.lhs()) && term(b.rhs(), c.rhs());
      case K::Tr: return term(b.lhs(), c.lhs());
      case K::Not: return formula(b.body(), c.body());
      case K::Imp: return formula(b.antecedent(), c.antecedent()) && formula(b.consequent(), c.consequent());
      case K::Forall: {
        if (b.bound_var() != c.bound_var()) return false;
        bound.push_back(b.bound_var());
        bool ok = formula(b.body(), c.body());
        bound.pop_back();
        return ok;
      }
    }
    return false;
  }
};

Match match_quant1(const Formula& f) {
  if (!is_imp(f) || f.antecedent().kind() != K::Forall) return fail(0, "expected forall v. A -> A[t/v]");
  InstMatcher m{f.antecedent().bound_var(), std::nullopt, {}};
  if (!m.formula(f.antecedent().body(), f.consequent()))
    return fail(2, "consequent is not an instance of the quantified body (or the term would be captured)");
  return pass();
}

Match match_quant2(const Formula& f) {
  if (!is_imp(f) || f.antecedent().kind() != K::Forall || !is_imp(f.antecedent().body()) || !is_imp(f.consequent()) ||
      f.consequent().consequent().kind() != K::Forall)
    return fail(0, "expected forall v. (A -> B) -> (A -> forall v. B)");
  VarId v = f.antecedent().bound_var();
  const Formula& a = f.antecedent().body().antecedent();
  const Formula& b = f.antecedent().body().consequent();
  if (!(f.consequent().antecedent() == a)) return fail(2, "antecedents differ");
  if (f.consequent().consequent().bound_var() != v || !(f.consequent().consequent().body() == b))
    return fail(2, "generalized consequent differs");
  if (occurs_free(v, a)) return fail(3, "variable " + var_name(v) + " occurs free in the antecedent");
  return pass();
}

// r' arises from r by replacing some occurrences of s with t.
bool replaces(const Term& r, const Term& r2, const Term& s, const Term& t) {
  if (r == r2) return true;
  if (r == s && r2 == t) return true;
  if (r.kind() != r2.kind() || r.args().size() != r2.args().size() || r.args().empty()) return false;
  if (r.kind() == Term::Kind::App && r.symbol() != r2.symbol()) return false;
  for (std::size_t i = 0; i < r.args().size(); ++i)
    if (!replaces(r.args()[i], r2.args()[i], s, t)) return false;
  return true;
}

Match match_eq1(const Formula& f) {
  if (f.kind() != K::Eq) return fail(0, "expected t = t");
  if (!(f.lhs() == f.rhs())) return fail(1, "sides differ");
  return pass();
}

Match match_eq2(const Formula& f) {
  if (!is_imp(f) || f.antecedent().kind() != K::Eq || f.consequent().kind() != K::Eq)
    return fail(0, "expected s = t -> r = r'");
  const Formula& h = f.antecedent();
  const Formula& c = f.consequent();
  if (!replaces(c.lhs(), c.rhs(), h.lhs(), h.rhs())) return fail(2, "r' is not r with occurrences of s replaced by t");
  return pass();
}

Match match_eq3(const Formula& f) {
  if (!is_imp(f) || f.antecedent().kind() != K::Eq || !is_imp(f.consequent()))
    return fail(0, "expected s = t -> (A -> A')");
  const Formula& h = f.antecedent();
  const Formula& a = f.consequent().antecedent();
  const Formula& a2 = f.consequent().consequent();
  if (!a.is_atomic() || a.kind() != a2.kind()) return fail(1, "A and A' must be atomic formulas of the same predicate");
  for (std::size_t i = 0; i < a.terms().size(); ++i)
    if (!replaces(a.terms()[i], a2.terms()[i], h.lhs(), h.rhs()))
      return fail(2, "A' is not A with occurrences of s replaced by t");
  return pass();
}

Match match_fixed(const Formula& f, const Formula& axiom, const char* label) {
  if (!(f == axiom)) return fail(0, std::string("not the axiom ") + label);
  return pass();
}

// Value of a canonical numeral subterm, or nullptr.
const Nat* num(const Term& t) { return t.numeral_value(); }

std::optional<Formula> sentence_coded_by(const Nat& c) {
  try {
    Formula f = decode_formula(c);
    if (f.is_sentence()) return f;
  } catch (const DecodeError&) {
  }
  return std::nullopt;
}

Match match_cons(const Formula& f) {
  if (!is_imp(f) || f.antecedent().kind() != K::Tr || f.consequent().kind() != K::Not ||
      f.consequent().body().kind() != K::Tr)
    return fail(0, "expected T(#~A) -> ~T(#A)");
  const Nat* neg = num(f.antecedent().lhs());
  const Nat* pos = num(f.consequent().body().lhs());
  if (!neg || !pos) return fail(1, "truth predicate arguments must be numerals");
  auto a = sentence_coded_by(*pos);
  if (!a) return fail(2, "#" + pos->get_str() + " is not the code of a sentence");
  if (encode(Formula::neg(*a)) != *neg) return fail(3, "antecedent is not the code of the negation");
  return pass();
}

Match match_timp(const Formula& f) {
  if (!is_imp(f) || f.antecedent().kind() != K::Tr || !is_imp(f.consequent()) ||
      f.consequent().antecedent().kind() != K::Tr || f.consequent().consequent().kind() != K::Tr)
    return fail(0, "expected T(#(A -> B)) -> (T(#A) -> T(#B))");
  const Nat* ab = num(f.antecedent().lhs());
  const Nat* an = num(f.consequent().antecedent().lhs());
  const Nat* bn = num(f.consequent().consequent().lhs());
  if (!ab || !an || !bn) return fail(1, "truth predicate arguments must be numerals");
  auto a = sentence_coded_by(*an);
  auto b = sentence_coded_by(*bn);
  if (!a || !b) return fail(2, "arguments are not codes of sentences");
  if (encode(Formula::imp(*a, *b)) != *ab) return fail(3, "first argument is not the code of A -> B");
  return pass();
}

Match match_uinf(const Formula& f) {
  if (!is_imp(f) || f.antecedent().kind() != K::Forall || f.antecedent().body().kind() != K::Tr ||
      f.consequent().kind() != K::Tr)
    return fail(0, "expected forall x. T(sub(#A, #v, x)) -> T(#(forall v. A))");
  VarId x = f.antecedent().bound_var();
  const Term& d = f.antecedent().body().lhs();
  if (d.kind() != Term::Kind::App || d.symbol() != FnSymbol::Sub || d.args()[2].kind() != Term::Kind::Var ||
      d.args()[2].var_index() != x)
    return fail(1, "premise is not a dot term sub(#A, #v, x)");
  const Nat* c = num(d.args()[0]);
  const Nat* v = num(d.args()[1]);
  const Nat* q = num(f.consequent().lhs());
  if (!c || !v || !q) return fail(2, "codes must be numerals");
  if (!v->fits_uint_p() || *v > 0xffffffffu) return fail(2, "variable index out of range");
  VarId vv = static_cast<VarId>(v->get_ui());
  std::optional<Formula> decoded;
  try {
    decoded = decode_formula(*c);
  } catch (const DecodeError& e) {
    return fail(3, std::string("not a formula code: ") + e.what());
  }
  const Formula& a = *decoded;
  for (VarId w : a.free_vars())
    if (w != vv) return fail(3, "coded formula has free variable " + var_name(w) + " besides " + var_name(vv));
  if (encode(Formula::forall(vv, a)) != *q) return fail(4, "conclusion is not the code of forall v. A");
  return pass();
}

Match match_comp_sub(const Formula& f) {
  if (f.kind() != K::Eq || f.lhs().kind() != Term::Kind::App || f.lhs().symbol() != FnSymbol::Sub)
    return fail(0, "expected sub(#c, #v, #n) = #k");
  const Nat* c = num(f.lhs().args()[0]);
  const Nat* v = num(f.lhs().args()[1]);
  const Nat* n = num(f.lhs().args()[2]);
  const Nat* k = num(f.rhs());
  if (!c || !v || !n || !k) return fail(1, "arguments must be numerals");
  if (!v->fits_uint_p() || *v > 0xffffffffu) return fail(2, "variable index out of range");
  Nat expect;
  try {
    expect = sub_fn(*c, static_cast<VarId>(v->get_ui()), *n);
  } catch (const DecodeError& e) {
    return fail(2, std::string("sub applied to a non-formula code: ") + e.what());
  }
  if (expect != *k) return fail(3, "sub evaluates to " + expect.get_str() + ", not " + k->get_str());
  return pass();
}

Match match_comp_succ(const Formula& f) {
  if (f.kind() != K::Eq || f.lhs().kind() != Term::Kind::Succ) return fail(0, "expected S(#n) = #m");
  const Nat* n = num(f.lhs().args()[0]);
  const Nat* m = num(f.rhs());
  if (!n || !m) return fail(1, "arguments must be numerals");
  if (*m != *n + 1) return fail(2, "successor of " + n->get_str() + " is not " + m->get_str());
  return pass();
}

Match match_comp_arith(const Formula& f, Term::Kind op) {
  const char* sym = op == Term::Kind::Add ? "+" : "*";
  if (f.kind() != K::Eq || f.lhs().kind() != op) return fail(0, std::string("expected #a ") + sym + " #b = #c");
  const Nat* a = num(f.lhs().args()[0]);
  const Nat* b = num(f.lhs().args()[1]);
  const Nat* c = num(f.rhs());
  if (!a || !b || !c) return fail(1, "arguments must be numerals");
  Nat expect = op == Term::Kind::Add ? Nat(*a + *b) : Nat(*a * *b);
  if (expect != *c) return fail(2, "evaluates to " + expect.get_str() + ", not " + c->get_str());
  return pass();
}

bool active(SchemaId s, const TheoryConfig& cfg) {
  switch (s) {
    case SchemaId::Cons: return cfg.has_cons;
    case SchemaId::TImp: return cfg.has_timp;
    case SchemaId::UInf: return cfg.has_uinf;
    case SchemaId::Q1: case SchemaId::Q2: case SchemaId::Q3: case SchemaId::Q4:
    case SchemaId::Q5: case SchemaId::Q6: case SchemaId::Q7:
      return cfg.q_axioms;
    case SchemaId::CompSub: case SchemaId::CompIter0: case SchemaId::CompIterStep:
    case SchemaId::CompSucc: case SchemaId::CompAdd: case SchemaId::CompMul:
      return cfg.computation_axioms;
    default: return true;
  }
}

Match match_schema(SchemaId s, const Formula& f) {
  switch (s) {
    case SchemaId::Prop1: return match_prop1(f);
    case SchemaId::Prop2: return match_prop2(f);
    case SchemaId::Prop3: return match_prop3(f);
    case SchemaId::Quant1: return match_quant1(f);
    case SchemaId::Quant2: return match_quant2(f);
    case SchemaId::Eq1: return match_eq1(f);
    case SchemaId::Eq2: return match_eq2(f);
    case SchemaId::Eq3: return match_eq3(f);
    case SchemaId::Q1: return match_fixed(f, robinson_axiom(1), "Q1");
    case SchemaId::Q2: return match_fixed(f, robinson_axiom(2), "Q2");
    case SchemaId::Q3: return match_fixed(f, robinson_axiom(3), "Q3");
    case SchemaId::Q4: return match_fixed(f, robinson_axiom(4), "Q4");
    case SchemaId::Q5: return match_fixed(f, robinson_axiom(5), "Q5");
    case SchemaId::Q6: return match_fixed(f, robinson_axiom(6), "Q6");
    case SchemaId::Q7: return match_fixed(f, robinson_axiom(7), "Q7");
    case SchemaId::Cons: return match_cons(f);
    case SchemaId::TImp: return match_timp(f);
    case SchemaId::UInf: return match_uinf(f);
    case SchemaId::CompSub: return match_comp_sub(f);
    case SchemaId::CompIter0: return match_fixed(f, iter_zero_axiom(), "COMP_ITER0");
    case SchemaId::CompIterStep: return match_fixed(f, iter_step_axiom(), "COMP_ITER_STEP");
    case SchemaId::CompSucc: return match_comp_succ(f);
    case SchemaId::CompAdd: return match_comp_arith(f, Term::Kind::Add);
    case SchemaId::CompMul: return match_comp_arith(f, Term::Kind::Mul);
  }
  return fail(0, "unknown schema");
}

}  // namespace

bool instance_of(SchemaId s, const Formula& f, const TheoryConfig& config, std::string* why) {
  if (!active(s, config)) {
    if (why) *why = "schema " + std::string(schema_name(s)) + " is not active in theory " + config.name();
    return false;
  }
  Match m = match_schema(s, f);
  if (!m.ok && why) *why = m.why;
  return m.ok;
}

AxiomVerdict is_axiom(const Formula& f, const TheoryConfig& config) {
  int best = -1;
  std::string diag;
  for (int i = 0; i < kSchemaCount; ++i) {
    auto s = static_cast<SchemaId>(i);
    Match m = match_schema(s, f);
    if (m.ok) {
      if (active(s, config)) return {s, {}};
      m = fail(99, "matches " + std::string(schema_name(s)) + ", which is not active in theory " + config.name());
    }
    if (m.progress > best) {
      best = m.progress;
      diag = "nearest schema " + std::string(schema_name(s)) + ": " + m.why;
    }
  }
  return {std::nullopt, diag};
}

// ---------------------------------------------------------------------------
// Checker

Checker::Checker(TheoryConfig config) : config_(std::move(config)) {}

// Failure locations are assembled while the exception unwinds, so successful
// checks never build path strings.
const Checker::Verified& Checker::verify(const Proof& p, const std::string& label) {
  if (auto it = memo_.find(p.id()); it != memo_.end()) return it->second.second;
  try {
    Verified v = verify_node(p, "");
    return memo_.emplace(p.id(), std::make_pair(p, std::move(v))).first->second.second;
  } catch (const CheckFailure& f) {
    throw CheckFailure(label + f.node, f.rule, f.reason);
  }
}

Checker::Verified Checker::verify_node(const Proof& p, const std::string& path) {
  auto claim_matches = [&](const Formula& proved, const char* rule) {
    if (!p.claim() || !(*p.claim() == proved))
      throw CheckFailure(path, rule, "node claims a different formula than its premises establish");
  };
  switch (p.kind()) {
    case Proof::Kind::Axiom: {
      std::string why;
      if (!p.claim()) throw CheckFailure(path, "axiom", "missing instance");
      if (!instance_of(p.schema(), *p.claim(), config_, &why))
        throw CheckFailure(path, std::string(schema_name(p.schema())), why + " in: " + pretty_print(*p.claim()));
      return {*p.claim(), 0};
    }
    case Proof::Kind::MP: {
      const Verified& minor = verify(p.premises()[0], "/mp.0");
      const Verified& major = verify(p.premises()[1], "/mp.1");
      if (major.conclusion.kind() != Formula::Kind::Imp)
        throw CheckFailure(path, "mp", "major premise is not an implication: " + pretty_print(major.conclusion));
      if (!(major.conclusion.antecedent() == minor.conclusion))
        throw CheckFailure(path, "mp", "minor premise " + pretty_print(minor.conclusion) +
                                           " does not match antecedent " + pretty_print(major.conclusion.antecedent()));
      Formula c = major.conclusion.consequent();
      claim_matches(c, "mp");
      return {c, std::max(minor.omega_count, major.omega_count)};
    }
    case Proof::Kind::Gen: {
      const Verified& prem = verify(p.premises()[0], "/gen.0");
      Formula c = Formula::forall(p.var(), prem.conclusion);
      claim_matches(c, "gen");
      return {c, prem.omega_count};
    }
    case Proof::Kind::TIntro: {
      const Verified& prem = verify(p.premises()[0], "/tintro.0");
      if (!prem.conclusion.is_sentence())
        throw CheckFailure(path, "tintro", "premise is not a sentence: " + pretty_print(prem.conclusion));
      Formula c = Formula::tr(name_of(prem.conclusion));
      claim_matches(c, "tintro");
      return {c, prem.omega_count};
    }
    case Proof::Kind::Omega: {
      const PremiseGenerator& g = p.generator();
      Formula c = Formula::forall(g.var, g.family);
      claim_matches(c, "omega");
      auto [samples, inner] = run_generator(g, path);
      generator_samples_[p.id()] = samples;
      std::size_t count = inner + 1;
      if (config_.max_omega_count && count > *config_.max_omega_count)
        throw CheckFailure(path, "omega", "omega count " + std::to_string(count) + " exceeds the configured maximum " +
                                              std::to_string(*config_.max_omega_count));
      return {c, count};
    }
  }
  throw CheckFailure(path, "?", "unknown node kind");
}

std::pair<std::size_t, std::size_t> Checker::run_generator(const PremiseGenerator& g, const std::string& path) {
  std::size_t inner = 0;
  Formula target = g.instance(0);
  const Verified& base = verify(g.base, "/omega.base");
  if (!(base.conclusion == target))
    throw CheckFailure(path, "omega", "sample 0: base proves " + pretty_print(base.conclusion) + ", expected " +
                                          pretty_print(target));
  inner = base.omega_count;
  for (std::size_t i = 0; i < g.steps.size(); ++i)
    if (g.steps[i].lemma) inner = std::max(inner, verify(*g.steps[i].lemma, "/omega.lemma." + std::to_string(i)).omega_count);

  Proof current = g.base;
  for (std::uint32_t k = 1; k <= config_.omega_samples; ++k) {
    target = g.instance(k);
    std::string sample_path = "/omega.sample." + std::to_string(k);
    try {
      for (const StepCombinator& s : g.steps) current = apply_step(s, current, target);
    } catch (const CheckFailure&) {
      throw;
    } catch (const std::exception& e) {
      throw CheckFailure(sample_path, "omega", "sample " + std::to_string(k) + ": step failed: " + e.what());
    }
    const Verified& v = verify(current, sample_path);
    if (!(v.conclusion == target))
      throw CheckFailure(sample_path, "omega", "sample " + std::to_string(k) + ": step produced " +
                                                   pretty_print(v.conclusion) + ", expected " + pretty_print(target));
    inner = std::max(inner, v.omega_count);
  }
  return {config_.omega_samples, inner};
}

std::size_t Checker::validate_generator(const PremiseGenerator& g) { try {
    return run_generator(g, "").first;
  } catch (const CheckFailure& f) {
    throw CheckFailure("generator" + f.node, f.rule, f.reason);
  } }

namespace {

// Distinct nodes of the proof proper (generated samples are not part of it)
// and the distinct Omega nodes among them.
void collect(const Proof& p, std::unordered_set<const void*>& seen, std::vector<const void*>& omegas) {
  std::vector<Proof> stack{p};
  while (!stack.empty()) {
    Proof q = stack.back();
    stack.pop_back();
    if (!seen.insert(q.id()).second) continue;
    for (const Proof& c : q.premises()) stack.push_back(c);
    if (q.kind() == Proof::Kind::Omega) {
      omegas.push_back(q.id());
      stack.push_back(q.generator().base);
      for (const StepCombinator& s : q.generator().steps)
        if (s.lemma) stack.push_back(*s.lemma);
    }
  }
}

}  // namespace

CheckedTheorem Checker::check(const Proof& p) {
  const Verified& v = verify(p, "root");
  std::unordered_set<const void*> seen;
  std::vector<const void*> omegas;
  collect(p, seen, omegas);
  std::size_t samples = 0;
  for (const void* o : omegas) samples += generator_samples_.at(o);
  return CheckedTheorem{v.conclusion, config_, v.omega_count, samples, seen.size(), p};
}

CheckedTheorem check(const Proof& p, const TheoryConfig& config) { return Checker(config).check(p); }

std::size_t validate_generator(const PremiseGenerator& g, const TheoryConfig& config) {
  return Checker(config).validate_generator(g);
}

Proof omega_apply(PremiseGenerator g) {
  Formula c = Formula::forall(g.var, g.family);
  return Proof::omega(std::make_shared<const PremiseGenerator>(std::move(g)), c);
}

}  // namespace tk
