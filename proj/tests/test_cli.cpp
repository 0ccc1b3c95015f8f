#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "truthkernel/arithmetization.hpp"
#include "truthkernel/parser.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run truthk(const std::string& args) {
  Run r;
  std::string cmd = std::string(TRUTHK_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "truthk_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::string script(const char* name) { return (fs::path(SOURCE_DIR) / "scripts" / name).string(); }

}  // namespace

TEST_CASE("check: exit codes") {
  CHECK(truthk("check " + script("m1_zero_eq_zero.tk")).status == 0);
  CHECK(truthk("check " + scratch("bad.tk", "(axiom EQ1 \"0 = #1\")\n").string()).status == 1);
  CHECK(truthk("check " + scratch("broken.tk", "(axiom EQ1 \"0 = 0\"\n").string()).status == 2);
  CHECK(truthk("check /nonexistent/file.tk").status == 2);
  // worst status wins across several files
  CHECK(truthk("check " + script("m1_zero_eq_zero.tk") + " " + scratch("bad.tk", "(axiom EQ1 \"0 = #1\")\n").string())
            .status == 1);
}

TEST_CASE("check: failure names the node and rule") {
  Run r = truthk("check " + scratch("bad2.tk", "(mp (axiom EQ1 \"0 = 0\") (axiom PROP1 \"0 = 0 -> 0 = #1\"))\n").string());
  CHECK(r.status == 1);
  CHECK(r.out.find("PROP1") != std::string::npos);
  CHECK(r.out.find("mp.1") != std::string::npos);
}

TEST_CASE("check: JSON certificate and the omega options") {
  Run r = truthk("--json check " + script("m1_zero_eq_zero.tk"));
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["omega_count"] == 1);
  CHECK(j["samples_checked"] == 8);
  CHECK(j["theory"] == "sigma");
  CHECK(j["formula"].get<std::string>().rfind("forall y. T(iter(y, #", 0) == 0);

  CHECK(nlohmann::json::parse(truthk("--json --samples 16 check " + script("m1_zero_eq_zero.tk")).out)["samples_checked"] ==
        16);
  CHECK(truthk("--max-omega 0 check " + script("m1_zero_eq_zero.tk")).status == 1);
  CHECK(truthk("--max-omega 1 check " + script("m1_zero_eq_zero.tk")).status == 0);
  CHECK(truthk("--max-omega lots check " + script("m1_zero_eq_zero.tk")).status == 2);
  CHECK(truthk("--samples 0 check " + script("m1_zero_eq_zero.tk")).status == 2);
  // a gamma-only script fails under an explicit sigma
  CHECK(truthk("--theory sigma check " + script("mcgee_line6.tk")).status == 1);
}

TEST_CASE("usage errors") {
  CHECK(truthk("").status == 2);
  CHECK(truthk("frobnicate").status == 2);
  CHECK(truthk("demo nothing").status == 2);
  CHECK(truthk("--theory delta demo mcgee").status == 2);
  CHECK(truthk("eval x").status == 2);
  CHECK(truthk("code \"0 = \"").status == 2);
  CHECK(truthk("--help").status == 0);
}

TEST_CASE("demos") {
  Run m = truthk("demo mcgee");
  CHECK(m.status == 0);
  for (const char* label : {"line 1", "line 7", "omega", "positive", "negative"})
    CHECK(m.out.find(label) != std::string::npos);
  CHECK(truthk("demo mcgee --theory sigma").status == 1);
  CHECK(truthk("demo mcgee-via-loeb --theory sigma").status == 1);
  Run l = truthk("--json demo loeb --theory sigma");
  CHECK(l.status == 0);
  CHECK(nlohmann::json::parse(l.out).is_array());
  Run w = truthk("--json demo witness --samples 3");
  REQUIRE(w.status == 0);
  CHECK(nlohmann::json::parse(w.out)["instances"].size() == 3);
}

TEST_CASE("code, decode, eval, diag") {
  Run c = truthk("--json code \"0 = 0\"");
  REQUIRE(c.status == 0);
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["decimal"] == tk::encode(tk::parse_formula("0 = 0")).get_str());
  Run d = truthk("--json decode " + j["decimal"].get<std::string>());
  REQUIRE(d.status == 0);
  CHECK(nlohmann::json::parse(d.out)["expression"] == "0 = 0");
  Run h = truthk("--json decode " + j["hex"].get<std::string>());
  CHECK(nlohmann::json::parse(h.out)["expression"] == "0 = 0");
  CHECK(truthk("decode 12345").status == 2);

  Run e = truthk("eval \"#6 * #7\"");
  CHECK(e.status == 0);
  CHECK(e.out.rfind("value: 42", 0) == 0);
  CHECK(e.out.find("(axiom COMP_MUL") != std::string::npos);

  Run g = truthk("--json diag \"~T(v)\" v");
  REQUIRE(g.status == 0);
  CHECK(nlohmann::json::parse(g.out)["omega_count"] == 0);
}

TEST_CASE("export reproduces the shipped scripts") {
  fs::path dir = fs::temp_directory_path() / "truthk_cli_export";
  fs::remove_all(dir);
  REQUIRE(truthk("--quiet export " + dir.string()).status == 0);
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(SOURCE_DIR) / "scripts")) {
    ++n;
    fs::path mine = dir / entry.path().filename();
    REQUIRE(fs::exists(mine));
    CHECK(fs::file_size(mine) == entry.file_size());
  }
  CHECK(n == 12);
}
