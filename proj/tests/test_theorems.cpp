#include <doctest.h>

#include "oracles.hpp"
#include "truthkernel/arithmetization.hpp"
#include "truthkernel/kernel.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"
#include "truthkernel/theorems.hpp"

using namespace tk;

namespace {

Formula F(const char* s) { return parse_formula(s); }

Formula Tw(const Formula& f) { return omega_truth(name_of(f)); }

}  // namespace

TEST_CASE("M1") {
  TheoryConfig sigma = TheoryConfig::sigma();
  CheckedTheorem zz = check(reflexivity(Term::zero()), sigma);
  CheckedTheorem t = m1(zz);
  CHECK(t.formula == Tw(F("0 = 0")));
  CHECK(t.omega_count == zz.omega_count + 1);

  PremiseGenerator g = m1_generator(zz.proof);
  Nat c = encode(F("0 = 0"));
  for (unsigned long n = 0; n < 8; ++n) {
    Term it = Term::app(FnSymbol::Iter, {oracle::numeral(Nat(n)), oracle::numeral(c)});
    CHECK(g.instance(Nat(n)) == Formula::tr(it));
    CHECK(oracle::value(it) == iter_fn(Nat(n), c));
  }

  // nesting raises the count
  CHECK(m1(t).omega_count == 2);
}

TEST_CASE("M2 and M3 under sigma") {
  TheoryConfig sigma = TheoryConfig::sigma();
  Formula a = F("0 = 0"), b = F("0 = #1");
  CheckedTheorem t2 = m2(a, b, sigma);
  CHECK(t2.formula == Formula::imp(Tw(Formula::imp(a, b)), Formula::imp(Tw(a), Tw(b))));
  CHECK(t2.omega_count == 1);
  CheckedTheorem t3 = m3(a, sigma);
  CHECK(t3.formula == Formula::imp(Tw(a), Tw(Tw(a))));
  CHECK(t3.omega_count == 1);

  TheoryConfig no_timp = sigma;
  no_timp.has_timp = false;
  CHECK_THROWS_AS(m2(a, b, no_timp), MissingSchema);
  TheoryConfig no_uinf = sigma;
  no_uinf.has_uinf = false;
  CHECK_THROWS_AS(m3(a, no_uinf), MissingSchema);
}

TEST_CASE("the omega-truth predicate satisfies D1-D3") {
  ProvabilityPredicate pp = omega_truth_predicate();
  TheoryConfig sigma = TheoryConfig::sigma();
  Formula a = F("T(#3)"), b = F("~0 = 0");
  CHECK(pp.apply(a) == Tw(a));
  CHECK(check(pp.d1(reflexivity(Term::zero())), sigma).formula == Tw(F("0 = 0")));
  CHECK(check(pp.d2(a, b), sigma).formula ==
        Formula::imp(pp.apply(Formula::imp(a, b)), Formula::imp(pp.apply(a), pp.apply(b))));
  CHECK(check(pp.d3(a), sigma).formula == Formula::imp(pp.apply(a), pp.apply(pp.apply(a))));
}

TEST_CASE("Loeb and its formalization") {
  ProvabilityPredicate pp = omega_truth_predicate();
  TheoryConfig sigma = TheoryConfig::sigma();
  Formula zz = F("0 = 0");
  CheckedTheorem premise = check(weaken(reflexivity(Term::zero()), pp.apply(zz)), sigma);
  CheckedTheorem l = loeb(pp, zz, premise);
  CHECK(l.formula == zz);
  CHECK(l.omega_count == 2);

  Formula zo = F("0 = #1");
  CheckedTheorem fl = formalized_loeb(pp, zo, sigma);
  CHECK(fl.formula == Formula::imp(pp.apply(Formula::imp(pp.apply(zo), zo)), pp.apply(zo)));

  // a premise for a different sentence is refused
  CHECK_THROWS(loeb(pp, zo, premise));
}

TEST_CASE("McGee: lines 1-7 and the omega step") {
  McGeeLines m = mcgee_lines(TheoryConfig::gamma());
  REQUIRE(m.lines.size() == 7);
  Checker checker(TheoryConfig::gamma());
  for (std::size_t i = 0; i < m.lines.size(); ++i) {
    CHECK(m.lines[i].first == "line " + std::to_string(i + 1));
    CHECK(checker.check(m.lines[i].second).omega_count == 0);
  }
  Formula wg = Tw(m.gamma);
  CHECK(m.lines[5].second.conclusion() == Formula::neg(wg));
  CHECK(m.lines[6].second.conclusion() == m.gamma);
  CheckedTheorem pos = checker.check(m.omega_step);
  CHECK(pos.formula == wg);
  CHECK(pos.omega_count == 1);
  // gamma is the diagonal sentence of ~T^w(x)
  DiagonalSentence d = diagonal_sentence(Formula::neg(omega_truth(Term::var(kVarX))), kVarX);
  CHECK(d.gamma == m.gamma);

  Refutation r = mcgee_original(TheoryConfig::gamma());
  CHECK(r.negative.formula == Formula::neg(r.positive.formula));
  CHECK(r.narrative.size() == 8);
}

TEST_CASE("McGee needs Cons, T-Imp and UInf") {
  CHECK_THROWS_AS(mcgee_lines(TheoryConfig::sigma()), MissingSchema);
  try {
    mcgee_original(TheoryConfig::sigma());
    FAIL("expected MissingSchema");
  } catch (const MissingSchema& e) {
    CHECK(e.schema == SchemaId::Cons);
  }
  CHECK_THROWS_AS(mcgee_via_loeb(TheoryConfig::sigma()), MissingSchema);
}

TEST_CASE("McGee via Loeb") {
  Refutation r = mcgee_via_loeb(TheoryConfig::gamma());
  CHECK(r.positive.formula == F("0 = #1"));
  CHECK(r.negative.formula == F("~0 = #1"));
  CHECK(r.positive.omega_count <= 3);
  CHECK(r.negative.omega_count == 0);
}

TEST_CASE("omega witness") {
  WitnessReport w = omega_witness(TheoryConfig::gamma(), 4);
  CHECK(w.universal_negation.formula == Formula::neg(Formula::forall(w.var, w.family)));
  CHECK(w.universal_negation.omega_count == 0);
  REQUIRE(w.instances.size() == 4);
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(w.instances[n].formula == substitute(w.family, w.var, oracle::numeral(Nat(n))));
    CHECK(w.instances[n].omega_count == 0);
  }
}

TEST_CASE("generators_of finds nested generators") {
  CheckedTheorem zz = check(reflexivity(Term::zero()), TheoryConfig::sigma());
  CHECK(generators_of(zz.proof).empty());
  CHECK(generators_of(m1_proof(zz.proof)).size() == 1);
  CHECK(generators_of(m1_proof(m1_proof(zz.proof))).size() == 2);
}
