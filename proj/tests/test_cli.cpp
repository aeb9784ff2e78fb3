#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "brute_force.hpp"
#include "doctest.h"

namespace {

struct Run {
  std::string out;
  int exit_code;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SHIFTLAB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string graph(const std::string& name) { return brute::corpus("graphs/" + name + ".graph"); }
std::string code(const std::string& name) { return brute::corpus("maps/" + name + ".code"); }

bool has(const Run& r, const std::string& text) { return r.out.find(text) != std::string::npos; }

}  // namespace

TEST_CASE("language commands") {
  const Run r = run("lang count " + graph("golden") + " 6");
  CHECK(r.exit_code == 0);
  CHECK(has(r, "report count\n"));
  CHECK(has(r, "count 21\n"));
  const Run b = run("lang blocks " + graph("golden") + " 2");
  CHECK(has(b, "block 00\nblock 01\nblock 10\n"));
  const Run t = run("--format tsv lang count " + graph("golden") + " 3");
  CHECK(has(t, "count\t5"));
}

TEST_CASE("cover and sync commands") {
  const Run f = run("cover fischer " + graph("even4"));
  CHECK(f.exit_code == 0);
  std::size_t vertices = 0;
  for (std::size_t at = f.out.find("vertex "); at != std::string::npos; at = f.out.find("vertex ", at + 1)) ++vertices;
  CHECK(vertices == 2);
  CHECK(has(run("sync find " + graph("even")), "word 1\n"));
  const Run s = run("sync check " + graph("even") + " 0");
  CHECK(has(s, "verdict not-synchronizing"));
  CHECK(has(s, "witness 1 1"));
  CHECK(has(run("sync half " + brute::corpus("oracles/even.oracle") + " 1"), "verdict holds-at-horizon"));
}

TEST_CASE("map commands") {
  CHECK(has(run("map decoder " + code("evenmap")), "decoder-block 1 anticipation 0"));
  CHECK(has(run("map degree " + code("xor")), "degree 2"));
  CHECK(has(run("map hyperbolic " + code("xor")), "hyperbolic word 0 d 2 k 0 blocks 00 11"));
  CHECK(has(run("code apply " + code("xor") + " 0110"), "101"));
}

TEST_CASE("consistency checks and exit codes") {
  const Run neg = run("check t42 " + code("xor"));
  CHECK(neg.exit_code == 0);
  CHECK(has(neg, "report t42\nstatus agree-negative\n"));
  const Run pos = run("check t42 " + code("evenmap"));
  CHECK(has(pos, "status agree-positive"));
  const Run inc = run("check t33 " + code("collapse"));
  CHECK(inc.exit_code == 2);
  CHECK(has(inc, "status inconclusive"));
  const Run ext = run("check t34 " + code("identity_full2") + " " + code("xor") + " " + code("xor") + " " +
                      code("identity_full2"));
  CHECK(ext.exit_code == 0);
  CHECK(has(ext, "status agree-positive"));
}

TEST_CASE("input errors exit with code 1") {
  const Run missing = run("lang count /nonexistent.graph 3");
  CHECK(missing.exit_code == 1);
  CHECK(has(missing, "error:"));
  CHECK(run("lang count").exit_code == 1);
  CHECK(run("nonsense").exit_code == 1);
  const Run bad = run("sync check " + graph("even") + " 2");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("corpus run-all is deterministic") {
  const Run a = run("corpus run-all");
  const Run b = run("corpus run-all");
  CHECK(a.out == b.out);
  CHECK(has(a, "criterion 9"));
}
