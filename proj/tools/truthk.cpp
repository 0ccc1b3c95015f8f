// truthk: check proof scripts, run the bundled derivations, inspect codes.
//
// Exit status: 0 success, 1 check failure, 2 usage or parse error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "truthkernel/arithmetization.hpp"
#include "truthkernel/kernel.hpp"
#include "truthkernel/parser.hpp"
#include "truthkernel/script.hpp"
#include "truthkernel/tactics.hpp"
#include "truthkernel/theorems.hpp"

using namespace tk;
using nlohmann::json;

namespace {

struct Options {
  std::optional<std::string> theory;
  std::uint32_t samples = 8;
  bool samples_given = false;
  std::string max_omega = "unlimited";
  bool json_out = false;
  bool quiet = false;
  bool full = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

TheoryConfig config_for(const Options& o, const std::string& fallback) {
  TheoryConfig c;
  try {
    c = theory_by_name(o.theory.value_or(fallback));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  c.omega_samples = o.samples;
  if (o.max_omega != "unlimited") {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(o.max_omega, &used);
      if (used != o.max_omega.size()) throw std::invalid_argument(o.max_omega);
      c.max_omega_count = static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw UsageError("--max-omega expects a natural number or 'unlimited'");
    }
  }
  return c;
}

// Long numerals are shortened for reading; --full prints them whole.
std::string show(const std::string& s, const Options& o) {
  if (o.full) return s;
  static const std::regex long_numeral("#([0-9]{8})([0-9]{17,})");
  std::string out;
  auto begin = std::sregex_iterator(s.begin(), s.end(), long_numeral);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const std::smatch& m = *it;
    out.append(s, last, static_cast<std::size_t>(m.position()) - last);
    out += "#" + m[1].str() + "..[" + std::to_string(m[1].length() + m[2].length()) + " digits]";
    last = static_cast<std::size_t>(m.position() + m.length());
  }
  out.append(s, last, std::string::npos);
  return out;
}

std::string show(const Formula& f, const Options& o) { return show(pretty_print(f), o); }

json cert_json(const CheckedTheorem& t) { return Certificate::of(t).to_json(); }

void print_cert(std::ostream& out, const std::string& label, const CheckedTheorem& t, const Options& o) {
  out << label << ": " << show(t.formula, o) << "\n"
      << "    omega_count=" << t.omega_count << " samples_checked=" << t.samples_checked
      << " proof_size=" << t.proof_size << " theory=" << t.theory.name() << "\n";
}

// ---------------------------------------------------------------------------

int cmd_check(const std::vector<std::string>& files, const Options& o) {
  struct Outcome {
    int status = 0;
    std::string out, err;
    json j;
  };
  auto run_one = [&o](const std::string& file) {
    Outcome r;
    std::ifstream in(file);
    if (!in) {
      r.status = 2;
      r.err = file + ": cannot open\n";
      return r;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      Script s = parse_script(buf.str());
      TheoryConfig cfg = config_for(o, s.theory.value_or("gamma"));
      CheckedTheorem t = check(s.proof, cfg);
      r.j = cert_json(t);
      r.j["script"] = file;
      std::ostringstream os;
      print_cert(os, file, t, o);
      r.out = os.str();
    } catch (const CheckFailure& e) {
      r.status = 1;
      r.err = file + ": " + e.what() + "\n";
    } catch (const MissingSchema& e) {
      r.status = 1;
      r.err = file + ": " + e.what() + "\n";
    } catch (const std::exception& e) {
      r.status = 2;
      r.err = file + ": " + e.what() + "\n";
    }
    return r;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const std::string& f : files) jobs.push_back(std::async(std::launch::async, run_one, f));
  int status = 0;
  json all = json::array();
  for (auto& job : jobs) {
    Outcome r = job.get();
    std::cerr << r.err;
    if (r.status == 0) {
      if (o.json_out)
        all.push_back(r.j);
      else if (!o.quiet)
        std::cout << r.out;
    }
    status = std::max(status, r.status);
  }
  if (o.json_out) std::cout << (files.size() == 1 && !all.empty() ? all[0] : all).dump(2) << "\n";
  return status;
}

const std::map<std::string, std::string>& mcgee_justification() {
  static const std::map<std::string, std::string> j = {
      {"line 1", "diagonal lemma"}, {"line 2", "1, T-Intro, T-Imp"}, {"line 3", "2, Cons"},
      {"line 4", "3, A1"},          {"line 5", "A2"},                {"line 6", "4, 5"},
      {"line 7", "1, 6"},           {"omega", "7, T-Intro, omega-rule"}};
  return j;
}

json refutation_json(const Refutation& r) {
  json n = json::array();
  for (const auto& [label, f] : r.narrative) n.push_back({{"label", label}, {"formula", pretty_print(f)}});
  return {{"positive", cert_json(r.positive)}, {"negative", cert_json(r.negative)}, {"narrative", n}};
}

int demo_mcgee(const Options& o) {
  TheoryConfig cfg = config_for(o, "gamma");
  McGeeLines lines = mcgee_lines(cfg);
  Refutation r = mcgee_original(cfg);
  if (o.json_out) {
    json j = refutation_json(r);
    j["gamma"] = pretty_print(lines.gamma);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (o.quiet) return 0;
  std::cout << "gamma := " << show(lines.gamma, o) << "\n\n";
  for (const auto& [label, f] : r.narrative)
    std::cout << label << "  " << show(f, o) << "\n        [" << mcgee_justification().at(label) << "]\n";
  std::cout << "\nRefutation\n";
  print_cert(std::cout, "  positive", r.positive, o);
  print_cert(std::cout, "  negative", r.negative, o);
  return 0;
}

int demo_via_loeb(const Options& o) {
  TheoryConfig cfg = config_for(o, "gamma");
  Refutation r = mcgee_via_loeb(cfg);
  if (o.json_out) {
    std::cout << refutation_json(r).dump(2) << "\n";
    return 0;
  }
  if (o.quiet) return 0;
  for (const auto& [label, f] : r.narrative) std::cout << label << "\n    " << show(f, o) << "\n";
  std::cout << "\nRefutation\n";
  print_cert(std::cout, "  positive", r.positive, o);
  print_cert(std::cout, "  negative", r.negative, o);
  return 0;
}

int demo_loeb(const Options& o) {
  TheoryConfig cfg = config_for(o, "gamma");
  Formula zz = parse_formula("0 = 0");
  Formula zo = parse_formula("0 = #1");
  ProvabilityPredicate pp = omega_truth_predicate();
  std::vector<std::pair<std::string, CheckedTheorem>> rows;
  rows.emplace_back("M1 (0 = 0)", m1(check(reflexivity(Term::zero()), cfg)));
  rows.emplace_back("M2 (0 = 1, 0 = 0)", m2(zo, zz, cfg));
  rows.emplace_back("M3 (0 = 0)", m3(zz, cfg));
  CheckedTheorem premise = check(weaken(reflexivity(Term::zero()), pp.apply(zz)), cfg);
  rows.emplace_back("L1 (0 = 0)", loeb(pp, zz, premise));
  rows.emplace_back("L2 (0 = 1)", formalized_loeb(pp, zo, cfg));
  if (o.json_out) {
    json j = json::array();
    for (const auto& [label, t] : rows) {
      json c = cert_json(t);
      c["label"] = label;
      j.push_back(c);
    }
    std::cout << j.dump(2) << "\n";
  } else if (!o.quiet) {
    for (const auto& [label, t] : rows) print_cert(std::cout, label, t, o);
  }
  return 0;
}

int demo_witness(const Options& o) {
  Options inner = o;
  inner.samples = 8;
  TheoryConfig cfg = config_for(inner, "gamma");
  std::size_t k = o.samples_given ? o.samples : 8;
  WitnessReport w = omega_witness(cfg, k);
  if (o.json_out) {
    json inst = json::array();
    for (const auto& t : w.instances) inst.push_back(cert_json(t));
    std::cout << json{{"family", pretty_print(w.family)},
                      {"var", var_name(w.var)},
                      {"universal_negation", cert_json(w.universal_negation)},
                      {"instances", inst}}
                     .dump(2)
              << "\n";
    return 0;
  }
  if (o.quiet) return 0;
  std::cout << "psi(" << var_name(w.var) << ") := " << show(w.family, o) << "\n";
  print_cert(std::cout, "~forall " + var_name(w.var) + ". psi", w.universal_negation, o);
  for (std::size_t n = 0; n < w.instances.size(); ++n)
    print_cert(std::cout, "psi(#" + std::to_string(n) + ")", w.instances[n], o);
  return 0;
}

Nat parse_nat(const std::string& s) {
  Nat n;
  bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
  if (s.empty() || n.set_str(hex ? s.substr(2) : s, hex ? 16 : 10) != 0 || n < 0)
    throw UsageError("'" + s + "' is not a natural number");
  return n;
}

int cmd_code(const std::string& text, const Options& o) {
  Expr e = [&]() -> Expr {
    try {
      return parse_formula(text);
    } catch (const ParseError&) {
      return parse_term(text);
    }
  }();
  Nat c = encode(e);
  if (o.json_out)
    std::cout << json{{"decimal", c.get_str(10)}, {"hex", "0x" + c.get_str(16)}}.dump(2) << "\n";
  else
    std::cout << "decimal: " << c.get_str(10) << "\nhex:     0x" << c.get_str(16) << "\n";
  return 0;
}

int cmd_decode(const std::string& text, const Options& o) {
  Nat n = parse_nat(text);
  Expr e = decode(n);
  std::string printed = std::visit([](const auto& x) { return pretty_print(x); }, e);
  std::string kind = std::holds_alternative<Formula>(e) ? "formula" : "term";
  if (o.json_out)
    std::cout << json{{"kind", kind}, {"expression", printed}}.dump(2) << "\n";
  else
    std::cout << kind << ": " << show(printed, o) << "\n";
  return 0;
}

int cmd_diag(const std::string& text, const std::string& var, const Options& o) {
  TheoryConfig cfg = config_for(o, "gamma");
  Formula phi = parse_formula(text);
  VarId v = parse_var(var);
  DiagonalResult d = diagonal_lemma(phi, v);
  CheckedTheorem t = check(d.equivalence_proof, cfg);
  if (o.json_out) {
    json j = cert_json(t);
    j["theta"] = pretty_print(d.theta);
    j["gamma"] = pretty_print(d.gamma);
    std::cout << j.dump(2) << "\n";
  } else if (!o.quiet) {
    std::cout << "theta := " << show(d.theta, o) << "\n"
              << "gamma := " << show(d.gamma, o) << "\n";
    print_cert(std::cout, "equivalence", t, o);
  }
  return 0;
}

int cmd_eval(const std::string& text, const Options& o) {
  TheoryConfig cfg = config_for(o, "gamma");
  Term t = parse_term(text);
  if (!t.closed()) throw UsageError("eval expects a closed term");
  Nat v = evaluate(t);
  Proof p = eval_closed(t);
  // The macro form would only repeat the command; print the expansion.
  Proof expanded = p.with_macro("");
  CheckedTheorem c = check(expanded, cfg);
  if (o.json_out) {
    json j = cert_json(c);
    j["value"] = v.get_str(10);
    j["script"] = serialize_script(expanded, cfg.name());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "value: " << v.get_str(10) << "\n";
    if (!o.quiet) std::cout << serialize_script(expanded, cfg.name());
  }
  return 0;
}

int cmd_export(const std::string& dir, const Options& o) {
  std::filesystem::create_directories(dir);
  for (const BundledProof& b : bundled_proofs()) {
    std::string path = (std::filesystem::path(dir) / (b.name + ".tk")).string();
    std::ofstream out(path);
    out << bundled_script_text(b);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (!o.quiet) std::cout << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truthk: proof kernel for truth theories over Robinson arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--theory", o.theory, "gamma or sigma");
  auto* samples = app.add_option("--samples", o.samples, "omega-rule samples (for 'demo witness': instances)");
  app.add_option("--max-omega", o.max_omega, "cap on omega_count: N or unlimited");
  app.add_flag("--json", o.json_out, "print JSON");
  app.add_flag("--quiet", o.quiet, "suppress non-essential output");
  app.add_flag("--full", o.full, "print numerals in full");

  std::vector<std::string> files;
  auto* check_cmd = app.add_subcommand("check", "check proof scripts");
  check_cmd->add_option("scripts", files, "script files")->required();

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "run a bundled derivation");
  demo_cmd->add_option("name", demo_name, "mcgee | mcgee-via-loeb | loeb | witness")
      ->required()
      ->check(CLI::IsMember({"mcgee", "mcgee-via-loeb", "loeb", "witness"}));

  std::string text, var;
  auto* code_cmd = app.add_subcommand("code", "print the code of a formula or term");
  code_cmd->add_option("expression", text)->required();
  auto* decode_cmd = app.add_subcommand("decode", "decode a number");
  decode_cmd->add_option("number", text)->required();
  auto* diag_cmd = app.add_subcommand("diag", "diagonalize a formula in a variable");
  diag_cmd->add_option("formula", text)->required();
  diag_cmd->add_option("var", var)->required();
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a closed term and print its proof");
  eval_cmd->add_option("term", text)->required();
  std::string dir;
  auto* export_cmd = app.add_subcommand("export", "write the bundled proof scripts");
  export_cmd->add_option("dir", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.samples_given = samples->count() > 0;
  if (o.samples == 0 && !(demo_cmd->parsed() && demo_name == "witness")) {
    std::cerr << "--samples must be positive\n";
    return 2;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(files, o);
    if (demo_cmd->parsed()) {
      if (demo_name == "mcgee") return demo_mcgee(o);
      if (demo_name == "mcgee-via-loeb") return demo_via_loeb(o);
      if (demo_name == "loeb") return demo_loeb(o);
      return demo_witness(o);
    }
    if (code_cmd->parsed()) return cmd_code(text, o);
    if (decode_cmd->parsed()) return cmd_decode(text, o);
    if (diag_cmd->parsed()) return cmd_diag(text, var, o);
    if (eval_cmd->parsed()) return cmd_eval(text, o);
    if (export_cmd->parsed()) return cmd_export(dir, o);
  } catch (const CheckFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const MissingSchema& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
