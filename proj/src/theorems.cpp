#include "truthkernel/theorems.hpp"

#include <unordered_set>

#include "truthkernel/arithmetization.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"

namespace tk {

namespace {

Formula imp(Formula a, Formula b) { return Formula::imp(std::move(a), std::move(b)); }

void require(const TheoryConfig& c, SchemaId s) {
  bool on = true;
  switch (s) {
    case SchemaId::Cons: on = c.has_cons; break;
    case SchemaId::TImp: on = c.has_timp; break;
    case SchemaId::UInf: on = c.has_uinf; break;
    default: break;
  }
  if (!on) throw MissingSchema(s);
}

// T(iter(v, t))
Formula iterated(VarId v, const Term& t) {
  return Formula::tr(Term::app(FnSymbol::Iter, {Term::var(v), t}));
}

Proof towards(const Proof& current, const Formula& target, const Position& pos) {
  return apply_step(StepCombinator::rewrite_eval(pos), current, target);
}

}  // namespace

Formula ProvabilityPredicate::apply(const Formula& sentence) const {
  return substitute(templ, var, name_of(sentence));
}

ProvabilityPredicate omega_truth_predicate() {
  ProvabilityPredicate pp{"T^omega", kVarX, omega_truth(Term::var(kVarX)), nullptr, nullptr, nullptr};
  pp.d1 = [](const Proof& p) { return m1_proof(p); };
  pp.d2 = [](const Formula& a, const Formula& b) { return m2_proof(a, b); };
  pp.d3 = [](const Formula& a) { return m3_proof(a); };
  return pp;
}

// ---------------------------------------------------------------------------
// (M1)-(M3)

PremiseGenerator m1_generator(const Proof& phi) {
  Term c = name_of(phi.conclusion());
  Formula family = iterated(kVarY, c);
  Proof base = towards(Proof::tintro(phi), substitute(family, kVarY, Term::zero()), {0});
  return PremiseGenerator{kVarY, family, base,
                          {StepCombinator::apply_tintro(), StepCombinator::rewrite_eval({0})}};
}

Proof m1_proof(const Proof& phi) { return omega_apply(m1_generator(phi)); }

CheckedTheorem m1(const CheckedTheorem& phi) { return check(m1_proof(phi.proof), phi.theory); }

Proof m2_proof(const Formula& phi, const Formula& psi) {
  Term a = name_of(imp(phi, psi));
  Term b = name_of(phi);
  Term c = name_of(psi);
  const VarId y = kVarY;
  Formula family = imp(iterated(y, a), imp(iterated(y, b), iterated(y, c)));
  const std::vector<Position> spots = {{0, 0}, {1, 0, 0}, {1, 1, 0}};

  Formula f0 = substitute(family, y, Term::zero());
  Proof base = Proof::axiom(SchemaId::TImp, imp(Formula::tr(a), imp(Formula::tr(b), Formula::tr(c))));
  for (const Position& p : spots) base = towards(base, f0, p);
  std::vector<StepCombinator> steps = {StepCombinator::lift_imp()};
  for (const Position& p : spots) steps.push_back(StepCombinator::rewrite_eval(p));
  Proof all = omega_apply(PremiseGenerator{y, family, base, steps});

  // From forall y. C(y) to T^w a -> (T^w b -> T^w c).
  Formula wa = omega_truth(a), wb = omega_truth(b);
  Formula ya = iterated(y, a), yb = iterated(y, b), yc = iterated(y, c);
  Proof cy = instantiate(all, Term::var(y));
  Proof ia = Proof::axiom(SchemaId::Quant1, imp(wa, ya));
  Proof ib = Proof::axiom(SchemaId::Quant1, imp(wb, yb));
  Proof t = taut(imp(imp(ya, imp(yb, yc)), imp(imp(wa, ya), imp(imp(wb, yb), imp(wa, imp(wb, yc))))));
  Proof open = Proof::mp(ib, Proof::mp(ia, Proof::mp(cy, t)));  // wa -> (wb -> yc)
  Proof outer = generalize_consequent(open, y);  // wa -> forall y. (wb -> yc)
  Formula inner = outer.conclusion().consequent();
  Proof q2 = Proof::axiom(SchemaId::Quant2, imp(inner, imp(wb, Formula::forall(y, yc))));
  return map_consequent(outer, 1, q2);
}

CheckedTheorem m2(const Formula& phi, const Formula& psi, const TheoryConfig& config) {
  require(config, SchemaId::TImp);
  return check(m2_proof(phi, psi), config);
}

Proof m3_proof(const Formula& phi) {
  Formula rho = omega_truth(name_of(phi));
  Term r = name_of(rho);
  const VarId y = kVarY;
  Formula family = imp(rho, iterated(y, r));
  Proof a1 = derive_A1(phi);
  Proof base = towards(a1, substitute(family, y, Term::zero()), {1, 0});
  std::vector<StepCombinator> steps = {StepCombinator::lift_imp(), StepCombinator::chain_with(a1),
                                       StepCombinator::rewrite_eval({1, 0})};
  Proof all = omega_apply(PremiseGenerator{y, family, base, steps});
  Formula q2 = imp(all.conclusion(), imp(rho, Formula::forall(y, iterated(y, r))));
  return Proof::mp(all, Proof::axiom(SchemaId::Quant2, q2));
}

CheckedTheorem m3(const Formula& phi, const TheoryConfig& config) {
  require(config, SchemaId::TImp);
  require(config, SchemaId::UInf);
  return check(m3_proof(phi), config);
}

// ---------------------------------------------------------------------------
// Loeb

namespace {

struct LoebCore {
  DiagonalResult diag;
  Formula p_psi;
  Formula p_phi;
  Proof p_psi_to_p_phi;
};

// Diagonalizes P(v) -> phi and derives P#psi -> P#phi from D1-D3.
LoebCore loeb_core(const ProvabilityPredicate& pp, const Formula& phi) {
  if (!phi.is_sentence()) throw TacticError("loeb: " + pretty_print(phi) + " is not a sentence");
  DiagonalResult d = diagonal_lemma(imp(pp.templ, phi), pp.var);
  const Formula& psi = d.gamma;
  Formula p_psi = pp.apply(psi);
  Formula p_phi = pp.apply(phi);
  Formula body = imp(p_psi, phi);
  Formula pp_psi = pp.apply(p_psi);

  Proof fwd = iff_forward(d.equivalence_proof);                  // psi -> (P psi -> phi)
  Proof s3 = pp.d1(fwd);                                          // P#(psi -> (P psi -> phi))
  Proof s4 = Proof::mp(s3, pp.d2(psi, body));                     // P psi -> P#(P psi -> phi)
  Proof s5 = hypothetical_syllogism(s4, pp.d2(p_psi, phi));       // P psi -> (P P psi -> P phi)
  Proof prop2 = Proof::axiom(SchemaId::Prop2, imp(imp(p_psi, imp(pp_psi, p_phi)),
                                                  imp(imp(p_psi, pp_psi), imp(p_psi, p_phi))));
  Proof s6 = Proof::mp(pp.d3(psi), Proof::mp(s5, prop2));         // P psi -> P phi
  return {std::move(d), p_psi, p_phi, s6};
}

}  // namespace

Proof loeb_proof(const ProvabilityPredicate& pp, const Formula& phi, const Proof& premise) {
  if (!(premise.conclusion() == imp(pp.apply(phi), phi)))
    throw TacticError("loeb: premise must be " + pretty_print(imp(pp.apply(phi), phi)));
  LoebCore core = loeb_core(pp, phi);
  Proof s7 = hypothetical_syllogism(core.p_psi_to_p_phi, premise);  // P psi -> phi
  Proof psi = Proof::mp(s7, iff_backward(core.diag.equivalence_proof));
  return Proof::mp(pp.d1(psi), s7);
}

CheckedTheorem loeb(const ProvabilityPredicate& pp, const Formula& phi, const CheckedTheorem& premise) {
  return check(loeb_proof(pp, phi, premise.proof), premise.theory);
}

Proof formalized_loeb_proof(const ProvabilityPredicate& pp, const Formula& phi) {
  LoebCore core = loeb_core(pp, phi);
  const Formula& psi = core.diag.gamma;
  Formula refl = imp(core.p_phi, phi);
  Proof t = taut(imp(imp(core.p_psi, core.p_phi), imp(refl, imp(core.p_psi, phi))));
  Proof a = Proof::mp(core.p_psi_to_p_phi, t);                               // refl -> (P psi -> phi)
  Proof b = hypothetical_syllogism(a, iff_backward(core.diag.equivalence_proof));  // refl -> psi
  Proof c = Proof::mp(pp.d1(b), pp.d2(refl, psi));                          // P#refl -> P psi
  return hypothetical_syllogism(c, core.p_psi_to_p_phi);
}

CheckedTheorem formalized_loeb(const ProvabilityPredicate& pp, const Formula& phi, const TheoryConfig& config) {
  require(config, SchemaId::TImp);
  require(config, SchemaId::UInf);
  return check(formalized_loeb_proof(pp, phi), config);
}

// ---------------------------------------------------------------------------
// McGee

McGeeLines mcgee_lines(const TheoryConfig& config) {
  require(config, SchemaId::Cons);
  require(config, SchemaId::TImp);
  require(config, SchemaId::UInf);

  DiagonalResult d = diagonal_lemma(Formula::neg(omega_truth(Term::var(kVarX))), kVarX);
  const Formula& gamma = d.gamma;
  Formula w = omega_truth(name_of(gamma));  // T^w #gamma
  Formula n = Formula::neg(w);

  Proof l1 = d.equivalence_proof;
  Proof fwd = iff_forward(l1);
  Proof bwd = iff_backward(l1);
  Proof l2 = iff_intro(lift_imp(fwd), lift_imp(bwd));
  Proof cons = Proof::axiom(SchemaId::Cons, imp(Formula::tr(name_of(n)), Formula::neg(Formula::tr(name_of(w)))));
  Proof l3 = hypothetical_syllogism(iff_forward(l2), cons);
  Proof l4 = hypothetical_syllogism(l3, contrapose(derive_A1(gamma)));
  Proof l5 = derive_A2(gamma);
  Proof l6 = Proof::mp(hypothetical_syllogism(l5, l4), taut(imp(imp(w, n), n)));
  Proof l7 = Proof::mp(l6, bwd);

  McGeeLines out{gamma, {}, m1_proof(l7)};
  out.lines = {{"line 1", l1}, {"line 2", l2}, {"line 3", l3}, {"line 4", l4},
               {"line 5", l5}, {"line 6", l6}, {"line 7", l7}};
  return out;
}

Refutation mcgee_original(const TheoryConfig& config) {
  McGeeLines m = mcgee_lines(config);
  Checker checker(config);
  Refutation r{checker.check(m.omega_step), checker.check(m.lines[5].second), {}};
  for (const auto& [label, p] : m.lines) r.narrative.emplace_back(label, checker.check(p).formula);
  r.narrative.emplace_back("omega", r.positive.formula);
  return r;
}

LoebRoute mcgee_via_loeb_proofs(const TheoryConfig& config) {
  require(config, SchemaId::Cons);
  require(config, SchemaId::TImp);
  require(config, SchemaId::UInf);

  Term zero = Term::zero();
  Term one = numeral(1);
  Formula z = Formula::eq(zero, one);  // 0 = 1
  Formula nz = Formula::neg(z);

  // ~(0 = 1) from Q1 at 0 and symmetry.
  Proof one_ne_zero = instantiate(Proof::axiom(SchemaId::Q1, robinson_axiom(1)), zero);  // ~S(0) = 0
  Proof flip = discharge_middle(
      Proof::axiom(SchemaId::Eq3, imp(z, imp(Formula::eq(zero, zero), Formula::eq(one, zero)))),
      reflexivity(zero));  // 0 = 1 -> 1 = 0
  Proof not_z = Proof::mp(one_ne_zero, contrapose(flip));

  // ~T#(0=1) by T-Intro and Cons, then ~T^w#(0=1) by A2.
  Proof t_not_z = Proof::tintro(not_z);
  Proof cons = Proof::axiom(SchemaId::Cons, imp(Formula::tr(name_of(nz)), Formula::neg(Formula::tr(name_of(z)))));
  Proof not_tz = Proof::mp(t_not_z, cons);
  Proof not_wz = Proof::mp(not_tz, contrapose(derive_A2(z)));
  Formula wz = omega_truth(name_of(z));
  Proof reflection = Proof::mp(not_wz, taut(imp(Formula::neg(wz), imp(wz, z))));

  Proof zero_one = loeb_proof(omega_truth_predicate(), z, reflection);
  return {not_z, reflection, zero_one};
}

Refutation mcgee_via_loeb(const TheoryConfig& config) {
  LoebRoute route = mcgee_via_loeb_proofs(config);
  Checker checker(config);
  Refutation r{checker.check(route.zero_one), checker.check(route.not_zero_one), {}};
  r.narrative.emplace_back("Q: ~(0 = 1)", r.negative.formula);
  r.narrative.emplace_back("Cons, A2: T^w#(0=1) -> 0 = 1", checker.check(route.reflection).formula);
  r.narrative.emplace_back("L1 (M1-M3): 0 = 1", r.positive.formula);
  return r;
}

WitnessReport omega_witness(const TheoryConfig& config, std::size_t k) {
  McGeeLines m = mcgee_lines(config);
  Term g = name_of(m.gamma);
  const VarId x = kVarX;
  Formula family = iterated(x, g);

  // Line 6 is ~forall y. T(iter(y, #gamma)); restate it with the bound x.
  Formula all_x = Formula::forall(x, family);
  Proof spec = Proof::axiom(SchemaId::Quant1, imp(all_x, iterated(kVarY, g)));
  Proof rename = generalize_consequent(spec, kVarY);
  Proof neg = Proof::mp(m.lines[5].second, contrapose(rename));

  Checker checker(config);
  WitnessReport out{x, family, checker.check(neg), {}};
  if (k == 0) return out;
  Proof cur = towards(Proof::tintro(m.lines[6].second), substitute(family, x, Term::zero()), {0});
  out.instances.push_back(checker.check(cur));
  for (std::size_t n = 1; n < k; ++n) {
    Formula target = substitute(family, x, numeral(Nat(static_cast<unsigned long>(n))));
    cur = towards(Proof::tintro(cur), target, {0});
    out.instances.push_back(checker.check(cur));
  }
  return out;
}

std::vector<const PremiseGenerator*> generators_of(const Proof& p) {
  std::vector<const PremiseGenerator*> out;
  std::unordered_set<const void*> seen;
  std::vector<Proof> stack{p};
  while (!stack.empty()) {
    Proof q = stack.back();
    stack.pop_back();
    if (!seen.insert(q.id()).second) continue;
    for (const Proof& c : q.premises()) stack.push_back(c);
    if (q.kind() == Proof::Kind::Omega) {
      out.push_back(&q.generator());
      stack.push_back(q.generator().base);
      for (const StepCombinator& s : q.generator().steps)
        if (s.lemma) stack.push_back(*s.lemma);
    }
  }
  return out;
}

}  // namespace tk
