// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "mutation.hpp"
#include "oracles.hpp"
#include "truthkernel/arithmetization.hpp"
#include "truthkernel/kernel.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/script.hpp"
#include "truthkernel/tactics.hpp"
#include "truthkernel/theorems.hpp"

using namespace tk;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kMcGeeSeconds = 10.0;
constexpr double kSweepSeconds = 60.0;
constexpr int kMutations = 1000;

struct Run {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(TRUTHK_PATH) + " " + args + " 2>&1";
  auto t0 = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

// Returns a one-line summary; throws Failed.
using Criterion = std::function<std::string()>;

std::string criterion1() {
  Run r = run("--json demo mcgee --theory gamma");
  require(r.status == 0, "exit status " + std::to_string(r.status) + ": " + r.out);
  json j = json::parse(r.out);
  Formula pos = parse_formula(j["positive"]["formula"].get<std::string>());
  Formula neg = parse_formula(j["negative"]["formula"].get<std::string>());
  Formula gamma = parse_formula(j["gamma"].get<std::string>());
  require(pos == omega_truth(name_of(gamma)), "positive side is not T^w#gamma");
  require(neg == Formula::neg(pos), "negative side does not negate the positive side");
  require(j["positive"]["omega_count"] == 1, "positive omega_count " + j["positive"]["omega_count"].dump());
  require(j["negative"]["omega_count"] == 0, "negative omega_count " + j["negative"]["omega_count"].dump());
  std::vector<std::string> labels;
  for (const auto& e : j["narrative"]) labels.push_back(e["label"]);
  std::vector<std::string> expected = {"line 1", "line 2", "line 3", "line 4", "line 5", "line 6", "line 7", "omega"};
  require(labels == expected, "narrative labels differ");

  McGeeLines lines = mcgee_lines(TheoryConfig::gamma());
  Checker checker(TheoryConfig::gamma());
  for (const auto& [label, p] : lines.lines) {
    CheckedTheorem t = checker.check(p);
    require(t.omega_count == 0, label + " uses the omega-rule");
  }
  require(lines.lines[5].second.conclusion() == neg, "line 6 is not the negative side");
  require(r.seconds < kMcGeeSeconds, "wall time " + std::to_string(r.seconds) + " s");
  std::ostringstream s;
  s << "lines 1-7 omega 0, positive omega 1, " << r.seconds << " s (limit " << kMcGeeSeconds << " s)";
  return s.str();
}

std::string criterion2() {
  constexpr std::size_t k = 5;
  Run r = run("--json demo witness --samples 5");
  require(r.status == 0, "exit status " + std::to_string(r.status) + ": " + r.out);
  json j = json::parse(r.out);
  VarId v = parse_var(j["var"].get<std::string>());
  Formula psi = parse_formula(j["family"].get<std::string>());
  Formula neg = parse_formula(j["universal_negation"]["formula"].get<std::string>());
  require(neg == Formula::neg(Formula::forall(v, psi)), "universal negation has the wrong shape");
  require(j["universal_negation"]["omega_count"] == 0, "universal negation uses the omega-rule");
  require(j["instances"].size() == k, "expected 5 instances");
  for (std::size_t n = 0; n < k; ++n) {
    const json& c = j["instances"][n];
    require(parse_formula(c["formula"].get<std::string>()) == substitute(psi, v, oracle::numeral(Nat(n))),
            "instance " + std::to_string(n) + " is not psi(#n)");
    require(c["omega_count"] == 0, "instance " + std::to_string(n) + " uses the omega-rule");
  }
  return "~forall x. psi and psi(#0..#4) checked, all omega 0";
}

std::string criterion3() {
  TheoryConfig sigma = TheoryConfig::sigma();
  Formula zz = parse_formula("0 = 0");
  Formula zo = parse_formula("0 = #1");
  CheckedTheorem base = check(reflexivity(Term::zero()), sigma);
  std::vector<std::pair<std::string, CheckedTheorem>> done;
  done.emplace_back("m1", m1(base));
  done.emplace_back("m2", m2(zz, zo, sigma));
  done.emplace_back("m3", m3(zz, sigma));
  done.emplace_back("A1", check(derive_A1(zz), sigma));
  done.emplace_back("A2", check(derive_A2(zz), sigma));
  done.emplace_back("formalized_loeb", formalized_loeb(omega_truth_predicate(), zo, sigma));
  for (const auto& [name, t] : done) require(t.theory.name() == "sigma", name + " not checked under sigma");

  for (const char* demo : {"mcgee", "mcgee-via-loeb"}) {
    Run r = run(std::string("demo ") + demo + " --theory sigma");
    require(r.status == 1, std::string(demo) + ": exit status " + std::to_string(r.status));
    require(r.out.find("MissingSchema(CONS)") != std::string::npos, std::string(demo) + ": " + r.out);
  }
  return "m1 m2 m3 A1 A2 formalized_loeb check under sigma; both McGee demos report MissingSchema(CONS)";
}

std::string criterion4() {
  Run r = run("--json demo mcgee-via-loeb --theory gamma");
  require(r.status == 0, "exit status " + std::to_string(r.status) + ": " + r.out);
  json j = json::parse(r.out);
  Formula zo = parse_formula("0 = #1");
  require(parse_formula(j["positive"]["formula"].get<std::string>()) == zo, "positive side is not 0 = 1");
  require(parse_formula(j["negative"]["formula"].get<std::string>()) == Formula::neg(zo), "negative side is not ~0 = 1");
  std::size_t count = j["positive"]["omega_count"];
  require(count <= 3, "omega_count " + std::to_string(count));

  // The positive side is exactly the generic Loeb construction at T^w.
  TheoryConfig gamma = TheoryConfig::gamma();
  LoebRoute route = mcgee_via_loeb_proofs(gamma);
  CheckedTheorem generic = loeb(omega_truth_predicate(), zo, check(route.reflection, gamma));
  require(Certificate::of(generic).to_json() == j["positive"], "certificate differs from the generic Loeb instance");
  return "0 = 1 and ~0 = 1 under gamma, omega_count " + std::to_string(count) + " (limit 3)";
}

std::string criterion5() {
  oracle::Gen g(20261019);
  std::ostringstream s;

  // (a) round trip and injectivity
  std::map<Nat, Expr> seen;
  for (int i = 0; i < 10000; ++i) {
    Expr e = g.coin() ? Expr(g.formula(6)) : Expr(g.term(5));
    Nat c = encode(e);
    require(decode(c) == e, "round trip failed at sample " + std::to_string(i));
    auto [it, fresh] = seen.emplace(c, e);
    require(fresh || it->second == e, "two expressions share a code");
  }
  s << "(a) 10000 ok, " << seen.size() << " distinct codes; ";

  // (b) sub_fn against substitute-then-encode
  for (int i = 0; i < 500; ++i) {
    Formula f = g.formula(4);
    VarId v = static_cast<VarId>(g.below(6));
    Nat n = g.small_nat();
    require(sub_fn(encode(f), v, n) == encode(substitute(f, v, oracle::numeral(n))),
            "sub_fn disagrees at sample " + std::to_string(i));
  }
  s << "(b) 500 ok; ";

  // (c) taut against truth tables
  std::vector<Formula> atoms = {parse_formula("0 = 0"), parse_formula("T(x)"), parse_formula("forall y. y = #1"),
                                parse_formula("T(iter(#2, 0))")};
  std::vector<std::vector<Formula>> by_size(6);
  by_size[1] = atoms;
  for (int n = 2; n <= 5; ++n) {
    for (const Formula& a : by_size[n - 1]) by_size[n].push_back(Formula::neg(a));
    for (int l = 1; l + 1 < n; ++l)
      for (const Formula& a : by_size[l])
        for (const Formula& b : by_size[n - 1 - l]) by_size[n].push_back(Formula::imp(a, b));
  }
  std::vector<Formula> cases;
  for (const auto& v : by_size) cases.insert(cases.end(), v.begin(), v.end());
  std::size_t exhaustive = cases.size();
  for (int i = 0; i < 1000; ++i) cases.push_back(g.propositional(atoms, 6));
  std::size_t proved = 0, rejected = 0;
  Checker checker(TheoryConfig::sigma());
  for (const Formula& f : cases) {
    if (oracle::tautology(f)) {
      CheckedTheorem t = checker.check(taut(f));
      require(t.formula == f, "taut proved another formula");
      ++proved;
    } else {
      try {
        taut(f);
        throw Failed("taut accepted a non-tautology: " + pretty_print(f));
      } catch (const NotTautology& e) {
        std::vector<Formula> ats;
        unsigned assignment = 0;
        for (std::size_t i = 0; i < e.counterexample.size(); ++i) {
          ats.push_back(e.counterexample[i].first);
          if (e.counterexample[i].second) assignment |= 1u << i;
        }
        require(!oracle::truth(f, ats, assignment), "counterexample does not falsify " + pretty_print(f));
      }
      ++rejected;
    }
  }
  s << "(c) " << exhaustive << " exhaustive + 1000 random: " << proved << " proved, " << rejected << " rejected; ";

  // (d) eval_closed against the term evaluator
  for (int i = 0; i < 200; ++i) {
    Term t = oracle::closed_term(g, 4);
    CheckedTheorem c = checker.check(eval_closed(t));
    require(c.formula == Formula::eq(t, oracle::numeral(oracle::value(t))),
            "eval_closed disagrees on " + pretty_print(t));
  }
  s << "(d) 200 ok";
  return s.str();
}

std::string criterion6() {
  oracle::Gen g(6);
  std::vector<BundledProof> bundled = bundled_proofs();
  std::vector<std::vector<Proof>> all_nodes;
  std::vector<Checker> checkers;
  for (const BundledProof& b : bundled) {
    all_nodes.push_back(mutation::nodes(b.proof));
    checkers.emplace_back(theory_by_name(b.theory));
  }
  int rejected = 0, changed = 0, silent = 0;
  std::map<std::string, int> kinds;
  for (int i = 0; i < kMutations; ++i) {
    std::size_t which = static_cast<std::size_t>(i) % bundled.size();
    const Proof& root = bundled[which].proof;
    const std::vector<Proof>& ns = all_nodes[which];
    Proof target = ns[g.below(ns.size())];
    mutation::Mutant m = mutation::mutate_node(target, g);
    ++kinds[m.description];
    Proof mutated = mutation::Rebuilder(target, m.proof)(root);
    try {
      CheckedTheorem t = checkers[which].check(mutated);
      if (t.formula == root.conclusion()) {
        ++silent;
        std::cerr << "silent acceptance: " << bundled[which].name << ", " << m.description << "\n";
      } else {
        ++changed;
      }
    } catch (const CheckFailure&) {
      ++rejected;
    }
  }
  require(silent == 0, std::to_string(silent) + " silent acceptances");
  return std::to_string(kMutations) + " mutations: " + std::to_string(rejected) + " rejected, " +
         std::to_string(changed) + " accepted with a different conclusion, 0 silent";
}

std::string criterion7() {
  auto t0 = Clock::now();
  std::vector<BundledProof> bundled = bundled_proofs();
  std::size_t generators = 0;
  for (std::uint32_t samples : {8u, 16u}) {
    for (const BundledProof& b : bundled) {
      TheoryConfig cfg = theory_by_name(b.theory);
      cfg.omega_samples = samples;
      auto gens = generators_of(b.proof);
      for (const PremiseGenerator* gen : gens)
        require(validate_generator(*gen, cfg) == samples, b.name + ": generator sample count");
      CheckedTheorem t = check(b.proof, cfg);
      require(gens.empty() || t.samples_checked >= samples, b.name + ": samples_checked " +
                                                                  std::to_string(t.samples_checked));
      generators += gens.size();
    }
  }
  double secs = since(t0);
  require(secs < kSweepSeconds, "sweep took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << generators / 2 << " generators validated at 8 and 16 samples, " << secs << " s (limit " << kSweepSeconds
    << " s)";
  return s.str();
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Criterion>> criteria = {
      {"1 McGee refutation under gamma", criterion1},
      {"2 omega-inconsistency witness, K=5", criterion2},
      {"3 sigma: Cons never required", criterion3},
      {"4 McGee via Loeb under gamma", criterion4},
      {"5 oracle suites", criterion5},
      {"6 mutation fuzzing", criterion6},
      {"7 generator sample sweep", criterion7},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = fn();
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) ++failed;
    std::printf("[%s] %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(), since(t0));
    std::fflush(stdout);
  }
  return failed;
}
