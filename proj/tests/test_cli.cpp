#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI with stderr folded into stdout.
Run iterwb(const std::string& args) {
  std::string cmd = std::string(ITERWB_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("iterwb_cli_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval and type") {
  fs::path t = write("lmin.lam", "(\\t:W. lmin t '01') '1'\n");
  Run r = iterwb("eval " + t.string());
  CHECK(r.code == 0);
  CHECK(r.out == "'1'\n");

  fs::path f = write("fn.lam", "\\t:W. lmin t '01'\n");
  r = iterwb("type " + f.string());
  CHECK(r.code == 0);
  CHECK(r.out == "W->W\n");
  r = iterwb("eval " + f.string());
  CHECK(r.out == "<function : W->W>\n");

  fs::path x = write("x.lam", "f (f '1')\n");
  fs::path g = write("g.lam", "\\x:W. app0 x\n");
  r = iterwb("eval " + x.string() + " --bind f=" + g.string());
  CHECK(r.code == 0);
  CHECK(r.out == "'100'\n");
}

TEST_CASE("eval errors") {
  Run r = iterwb("eval " + write("bad.lam", "lmin (\\t:W.t)\n").string());
  CHECK(r.code == 2);
  CHECK(r.out.find("type error") != std::string::npos);
  r = iterwb("eval " + write("syn.lam", "\\x:W.\n x )\n").string());
  CHECK(r.code == 2);
  CHECK(r.out.find("2:4") != std::string::npos);
  fs::path big = write(
      "big.lam",
      "(\\f:W->W. f (f (f (f (f (f (f (f (f (f (f '0'))))))))))) (\\x:W. cat x x)\n");
  r = iterwb("eval " + big.string() + " --cap 1000");
  CHECK(r.code == 3);
  CHECK(r.out.find("resource exceeded") != std::string::npos);
  r = iterwb("eval " + big.string());
  CHECK(r.code == 0);
  r = iterwb("eval /nonexistent/term.lam");
  CHECK(r.code == 2);
}

TEST_CASE("cap from the environment") {
  fs::path big = write("env.lam", "iter (\\x:W. cat x x) '' '0' '0'\n");
  CHECK(iterwb("eval " + big.string()).code == 0);
  fs::path grow = write("grow.lam",
                        "(\\f:W->W. f (f (f (f (f (f '0')))))) (\\x:W. cat x x)\n");
  Run r = iterwb("eval " + grow.string());
  CHECK(r.out.size() == 64 + 3);
  std::string cmd = "env ITERWB_CAP=16 " + std::string(ITERWB_BINARY) + " eval " +
                    grow.string() + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("run primitives") {
  Run r = iterwb("run --primitive iterk --k 1 --phi app1 --a 0 --c 0000");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("'01'\n", 0) == 0);
  CHECK(r.out.find("ell=1") != std::string::npos);

  fs::path trace = scratch() / "trace.json";
  r = iterwb("run --primitive jterk --k 0 --phi app1 --a 0 --c 000 --trace " +
             trace.string());
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(trace));
  CHECK(j["kind"] == "lookahead");
  CHECK(j["ell"] == 1);

  r = iterwb("run --primitive iter --phi app1 --a \"''\" --b 1111 --c 000");
  CHECK(r.out.rfind("'111'\n", 0) == 0);
  r = iterwb("run --primitive jter --phi app1 --a \"''\" --b 11 --c 000");
  CHECK(r.out.rfind("'111'\n", 0) == 0);
  r = iterwb("run --primitive rec0 --phi \"(on2 t app1)\" --a \"''\" --b 1111 --c 00");
  CHECK(r.code == 0);
  CHECK(r.out == "'11'\n");
  r = iterwb("run --primitive rec --phi \"(on2 t app1)\" --psi \"(const '1111')\" "
             "--a \"''\" --c 00");
  CHECK(r.out == "'11'\n");
  r = iterwb("run --primitive iterk --phi \"(cond_empty (const '111') dropl)\" --a 101 --c 11");
  CHECK(r.out.rfind("'1'\n", 0) == 0);
  r = iterwb("run --primitive iter --phi \"(compose app1\" --a 0 --c 0");
  CHECK(r.code == 2);
  r = iterwb("run --primitive bogus --phi app1 --a 0 --c 0");
  CHECK(r.code != 0);
}

TEST_CASE("translate emits closed typed terms") {
  Run r = iterwb("translate --lemma lemma2-iter-jter");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-- iter_from_jter : ", 0) == 0);

  fs::path out = scratch() / "iterk2.lam";
  r = iterwb("translate --lemma lemma8-iterk --k 2 -o " + out.string());
  CHECK(r.code == 0);
  Run t = iterwb("type " + out.string());
  CHECK(t.code == 0);
  CHECK(t.out == "((W->W)->W->W->W->W)->(W->W)->W->W->W\n");

  // Applying the emitted term to the iter constant gives a working iter_k.
  std::string text = slurp(out);
  fs::path use = write("use.lam", "(" + text + ") iter app1 '0' '0000'\n");
  Run e = iterwb("eval " + use.string());
  CHECK(e.code == 0);
  CHECK(e.out == "'011'\n");

  CHECK(iterwb("translate --lemma unknown_builder").code == 2);
}

TEST_CASE("check and falsify exit codes and JSON") {
  fs::path json = scratch() / "report.json";
  Run r = iterwb("check --lemma lemma2-iter-jter --trials 100 --seed 42 --json " +
                 json.string());
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["lemma"] == "lemma2-iter-jter");
  CHECK(j["failure_count"] == 0);
  std::string first = slurp(json);
  iterwb("check --lemma lemma2-iter-jter --trials 100 --seed 42 --json " + json.string());
  CHECK(slurp(json) == first);

  r = iterwb("check --lemma mutant/iter0-short-bound --trials 100");
  CHECK(r.code == 1);
  r = iterwb("check --lemma no-such-lemma --trials 10");
  CHECK(r.code == 2);

  r = iterwb("falsify --lemma mutant/jterk-no-final-step --budget 5");
  CHECK(r.code == 1);
  r = iterwb("falsify --lemma sec4-jterk-iterk --budget 0.3");
  CHECK(r.code == 0);
}
