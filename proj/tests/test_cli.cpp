#include <cstdio>
#include <string>

#include "doctest.h"

// Golden tests against the installed command-line surface: byte-exact
// output and the full exit-code contract (0 pass, 1 fail, 2 usage/parse,
// 3 resource abort, 4 precondition).

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(IMPALG_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) { return std::string(IMPALG_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli check: pass, fail, terse") {
  const RunResult pass = run("check " + fixture("ia2.alg") + " --class ia");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out == "class ia\npassed\n");

  const RunResult fail = run("check " + fixture("h3.alg") + " --class ia");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out ==
        "class ia\n"
        "failed\n"
        "violation Contraction (b,a) count 1\n"
        "violation Quasi-commutativity (a,b) count 2\n"
        "total 3\n");

  const RunResult terse = run("check " + fixture("h3.alg") + " --class positive-ia --format terse");
  CHECK(terse.exit_code == 0);
  CHECK(terse.out == "passed\n");
}

TEST_CASE("cli check: usage and parse errors exit 2") {
  CHECK(run("check " + fixture("missing.alg") + " --class ia").exit_code == 2);
  CHECK(run("check " + fixture("ia2.alg") + " --class boolean").exit_code == 2);
  CHECK(run("check " + fixture("ia2.alg") + " --class ia --bogus-flag").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("cli check: missing table is a precondition violation, exit 4") {
  CHECK(run("check " + fixture("ia2.alg") + " --class isg").exit_code == 4);
}

TEST_CASE("cli order") {
  const RunResult r = run("order " + fixture("ia2.alg"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "one 1\n"
        "leq a a\n"
        "leq a 1\n"
        "leq 1 1\n"
        "join\n"
        "a: a 1\n"
        "1: 1 1\n");
}

TEST_CASE("cli reduct emits the algebra format") {
  const RunResult r = run("reduct " + fixture("s2.alg") + " --target isg");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "elements 0 1\n"
        "arrow\n"
        "0: 1 1\n"
        "1: 0 1\n"
        "compose\n"
        "0: 0 0\n"
        "1: 0 1\n");
  CHECK(run("reduct " + fixture("ia2.alg") + " --target isg").exit_code == 4);
}

TEST_CASE("cli filters and filter operations") {
  const RunResult all = run("filters " + fixture("ia2.alg") + " --kind all");
  CHECK(all.exit_code == 0);
  CHECK(all.out == "{1}\n{a, 1}\n");

  const RunResult prime = run("filters " + fixture("b4.alg") + " --kind prime");
  CHECK(prime.exit_code == 0);
  CHECK(prime.out == "{p, 1}\n{q, 1}\n");

  const RunResult irr = run("filters " + fixture("b4.alg") + " --kind irreducible");
  CHECK(irr.out == prime.out);

  CHECK(run("filter-gen " + fixture("b4.alg") + " --filter 1 --element p").out == "{p, 1}\n");
  CHECK(run("prime-extend " + fixture("b4.alg") + " --filter 1 --avoid p").out == "{q, 1}\n");
  CHECK(run("prime-discriminate " + fixture("b4.alg") + " --filter 1 --a p --b 0").out == "{p, 1}\n");
  CHECK(run("prime-discriminate " + fixture("b4.alg") + " --filter 1 --a p --b p").exit_code == 4);
  CHECK(run("prime-extend " + fixture("b4.alg") + " --filter 1 --avoid 1").exit_code == 4);
}

TEST_CASE("cli stone") {
  const RunResult r = run("stone " + fixture("b4.alg"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "base 2\n"
        "filter 0 = {p, 1}\n"
        "filter 1 = {q, 1}\n"
        "map 0 = {}\n"
        "map p = {0}\n"
        "map q = {1}\n"
        "map 1 = {0, 1}\n");

  const RunResult verify = run("stone " + fixture("b4.alg") + " --verify --format terse");
  CHECK(verify.exit_code == 0);
  CHECK(verify.out == "pass\n");

  CHECK(run("stone " + fixture("h3.alg")).exit_code == 4);
}

TEST_CASE("cli verify-rep") {
  const RunResult pass = run("verify-rep " + fixture("s2.alg") + " " + fixture("s2_diag.rep"));
  CHECK(pass.exit_code == 0);
  CHECK(pass.out == "pass\n");

  const RunResult fail = run("verify-rep " + fixture("s2.alg") + " " + fixture("s2_diag.rep") +
                             " --profile arrow,compose,zero-empty");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out == "fail\nviolation zero-empty h(0) contains (0,0)\n");
}

TEST_CASE("cli quotient-identity and empty-zero") {
  const RunResult q = run("quotient-identity " + fixture("q2.alg") + " " + fixture("q2_full.rep"));
  CHECK(q.exit_code == 0);
  CHECK(q.out ==
        "base 1\n"
        "top (0,0)\n"
        "map 0 =\n"
        "map e = (0,0)\n"
        "mode absolute\n"
        "profile arrow,compose,strict-identity\n");

  const RunResult ez = run("empty-zero " + fixture("s2.alg") + " " + fixture("s2_diag.rep"));
  CHECK(ez.exit_code == 0);
  CHECK(ez.out ==
        "base 1\n"
        "top (0,0)\n"
        "map 0 =\n"
        "map 1 = (0,0)\n"
        "mode relative\n"
        "profile arrow,compose,zero-empty\n");

  // q2 has no designated zero: precondition violation.
  CHECK(run("empty-zero " + fixture("q2.alg") + " " + fixture("q2_full.rep")).exit_code == 4);
}

TEST_CASE("cli weakening commands") {
  const RunResult yes = run("weakening-check " + fixture("chain2.poset") + " --rel \"(0,1)\"");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "true\n");

  const RunResult no = run("weakening-check " + fixture("chain2.poset") + " --rel \"(1,0)\"");
  CHECK(no.exit_code == 1);
  CHECK(no.out == "false\n");

  const RunResult arrow = run("weakening-arrow " + fixture("chain2.poset") + " --r \"(0,1)\" --s \"\"");
  CHECK(arrow.exit_code == 0);
  CHECK(arrow.out == "rel\n");

  const RunResult full = run("weakening-arrow " + fixture("chain2.poset") + " --r \"\" --s \"\"");
  CHECK(full.out == "rel (0,0) (0,1) (1,0) (1,1)\n");

  CHECK(run("weakening-arrow " + fixture("chain2.poset") + " --r \"(1,0)\" --s \"\"").exit_code == 4);
}

TEST_CASE("cli search-rep: found, exhausted, aborted") {
  const RunResult found = run("search-rep " + fixture("s2.alg") + " --max-base 2");
  CHECK(found.exit_code == 0);
  CHECK(found.out ==
        "base 1\n"
        "top (0,0)\n"
        "map 0 =\n"
        "map 1 = (0,0)\n"
        "mode relative\n"
        "profile arrow,compose\n");

  const RunResult exhausted = run("search-rep " + fixture("s2.alg") + " --max-base 0");
  CHECK(exhausted.exit_code == 1);
  CHECK(exhausted.out == "exhausted 0\n");

  const RunResult aborted = run("search-rep " + fixture("s2.alg") + " --max-base 2 --node-limit 1");
  CHECK(aborted.exit_code == 3);
  CHECK(aborted.out == "aborted 1\n");

  const RunResult iso = run("search-rep " + fixture("s2.alg") + " --max-base 2 --up-to-iso");
  CHECK(iso.exit_code == 0);

  CHECK(run("search-rep " + fixture("h3.alg") + " --max-base 1 --profile arrow").exit_code == 4);
}

TEST_CASE("cli output is byte-identical across runs") {
  for (const std::string& args :
       {"stone " + fixture("b4.alg"), "filters " + fixture("b4.alg") + " --kind all",
        "search-rep " + fixture("s2.alg") + " --max-base 2",
        "check " + fixture("h3.alg") + " --class ia"}) {
    const RunResult first = run(args);
    const RunResult second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
  }
}

TEST_CASE("cli help exits 0") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("check --help").exit_code == 0);
}
