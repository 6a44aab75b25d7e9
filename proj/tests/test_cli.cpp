// Command-line front end: exit codes, text/JSON output, seed-file loading,
// and the environment cap override.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "truthlab/cli.hpp"
#include "truthlab/errors.hpp"
#include "truthlab/parser.hpp"
#include "truthlab/syntax.hpp"

using namespace truthlab;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Writes `content` to a fresh file under the system temp directory and
// returns its path.
std::string write_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("truthlab_" + name);
  std::ofstream f(path);
  f << content;
  f.close();
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval subcommand evaluates sentences on a bounded structure") {
  const CliResult r =
      run_cli({"eval", "--scheme", "sk", "--domain", "5", "(E v0 (v0 = S(S(0))))"});
  CHECK(r.code == 0);
  CHECK(r.out == "True\n");
  CHECK(r.err.empty());

  // Undecided P-atom under the partial schemes, decided once P says so.
  CHECK(run_cli({"eval", "--domain", "1", "P(S(0))"}).out == "Undefined\n");
  CHECK(run_cli({"eval", "--domain", "1", "--p-pos", "1", "P(S(0))"}).out == "True\n");
  CHECK(run_cli({"eval", "--domain", "1", "--p-neg", "1", "P(S(0))"}).out == "False\n");

  // Weak Kleene differs from strong Kleene on a half-decided disjunction.
  const std::string disj = "(P(0) | (0 = 0))";
  CHECK(run_cli({"eval", "--scheme", "sk", "--domain", "2", disj}).out == "True\n");
  CHECK(run_cli({"eval", "--scheme", "wk", "--domain", "2", disj}).out ==
        "Undefined\n");

  // Classical evaluation refuses P; P-free formulas report True/False.
  CHECK(run_cli({"eval", "--scheme", "classical", "--domain", "2", disj}).code == 2);
  CHECK(run_cli({"eval", "--scheme", "classical", "--domain", "2", "(0 = S(0))"}).out ==
        "False\n");

  // Free variables come from --assign.
  const CliResult open =
      run_cli({"eval", "--domain", "4", "--assign", "v0=3", "(v0 = S(S(S(0))))"});
  CHECK(open.code == 0);
  CHECK(open.out == "True\n");
}

TEST_CASE("parse subcommand reprints canonically, expanding sugar") {
  const CliResult r = run_cli({"parse", "A v0 (v0 = 0)"});
  CHECK(r.code == 0);
  CHECK(r.out == "~E v0 ~(v0 = 0)\n");

  const CliResult many = run_cli({"parse", "((0=0)&(0=0))", "(0 = 0)"});
  CHECK(many.code == 0);
  CHECK(many.out == "~(~(0 = 0) | ~(0 = 0))\n(0 = 0)\n");
}

TEST_CASE("encode and decode agree with the frozen code table") {
  CHECK(run_cli({"encode", "(0 = 0)"}).out == "15\n");
  CHECK(run_cli({"encode", "--term", "v0"}).out == "10\n");
  CHECK(run_cli({"encode", "S(0)"}).out == "1\n");  // bare terms are accepted

  CHECK(run_cli({"decode", "15"}).out == "(0 = 0)\n");
  CHECK(run_cli({"decode", "7"}).out == "(S(0) + 0)\n");
  const CliResult bad = run_cli({"decode", "2"});
  CHECK(bad.code == 0);
  CHECK(bad.out == "invalid\n");

  CHECK(run_cli({"decode", "notanumber"}).code == 2);
}

TEST_CASE("fixpoint subcommand reports stages and members") {
  const std::string seed = write_file("fix_seed.txt", "~~(0 = 0)\n");
  const CliResult r = run_cli({"fixpoint", "--seed", seed, "--domain", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "universe 2, stages 1, fixpoint 2"));
  CHECK(contains(r.out, "15\t@0\t(0 = 0)"));
  CHECK(contains(r.out, "@1\t~~(0 = 0)"));

  // The serial reference step prints the same report.
  const CliResult s =
      run_cli({"fixpoint", "--seed", seed, "--domain", "2", "--serial"});
  CHECK(s.out == r.out);
}

TEST_CASE("check subcommand exit codes follow the audit verdict") {
  const std::string seed = write_file(
      "chk_seed.txt",
      "~~(0 = 0)\nE v0 (v0 = S(S(0)))\n(P(S(0)) | (0 = 0))\n~P(0)\n");
  const CliResult pass = run_cli({"check", "--theory", "pt", "--truthset", "fixpoint",
                                  "--seed", seed, "--domain", "4"});
  CHECK(pass.code == 0);
  CHECK(contains(pass.out, "theory PT-"));
  CHECK(contains(pass.out, "result PASS"));

  // Weak-theory disjunction clause fails on a strong Kleene fixpoint whose
  // true disjunction has an undecided disjunct.
  const std::string sep = write_file(
      "sep_seed.txt", "(P(S(S(0))) | (0 = 0))\n~P(S(S(0)))\n~(0 = 0)\n");
  const CliResult fail = run_cli({"check", "--theory", "wpt", "--truthset", "fixpoint",
                                  "--seed", sep, "--domain", "2"});
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "result FAIL"));
  CHECK(contains(fail.out, "clause 2a"));

  // Same fixpoint still satisfies the ungated family.
  const CliResult pt = run_cli({"check", "--theory", "pt", "--truthset", "fixpoint",
                                "--seed", sep, "--domain", "2"});
  CHECK(pt.code == 0);

  // --phis is mandatory for the schematic families.
  CHECK(run_cli({"check", "--theory", "gc", "--truthset", "fixpoint", "--seed", seed,
                 "--domain", "2"})
            .code == 2);
}

TEST_CASE("usage errors exit with status 2 and a diagnostic") {
  const CliResult unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());

  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"eval"}).code == 2);                       // missing formula
  CHECK(run_cli({"eval", "--domain", "2", "(0 = "}).code == 2);  // parse error
  CHECK(run_cli({"check", "--theory", "nope", "--seed", "x", "--domain", "2"}).code ==
        2);
  CHECK(run_cli({"fixpoint", "--seed", "/no/such/file.txt"}).code == 2);
}

TEST_CASE("gen subcommand prints the construction and its code") {
  const CliResult ind = run_cli({"gen", "ind", "--formula", "(v0 = v0)", "--var", "0"});
  CHECK(ind.code == 0);
  // First line is the induction instance, second its code.
  const Formula expected = parse_formula(
      "(~E v0 ~((v0 = v0) -> (S(v0) = S(v0))) -> ((0 = 0) -> ~E v0 ~(v0 = v0)))");
  CHECK(contains(ind.out, print_formula(expected) + "\n"));
  CHECK(contains(ind.out, "code: "));
  CHECK_FALSE(contains(ind.out, "omitted"));

  const std::string psis = write_file("psis.txt", "(0 = 0)\n(0 = S(0))\n");
  const CliResult chain = run_cli({"gen", "theta-chain", "--psis", psis});
  CHECK(chain.code == 0);
  CHECK(contains(chain.out, "((0 = 0) | ((0 = S(0)) | ~(v0 = v0)))"));
  CHECK(contains(chain.out, "code: "));

  // tau codes exceed the print guard and are omitted honestly.
  const CliResult tau = run_cli({"gen", "tau", "--index-bound", "1", "--length", "2"});
  CHECK(tau.code == 0);
  CHECK(contains(tau.out, "tau: "));
  CHECK(contains(tau.out, "code: (omitted: exceeds print guard)"));

  CHECK(run_cli({"gen", "stopping"}).code == 2);  // missing --alphas/--betas
}

TEST_CASE("json output is deterministic and flag position does not matter") {
  const std::vector<std::string> before = {"--format", "json", "encode", "(0 = 0)"};
  const std::vector<std::string> after = {"encode", "(0 = 0)", "--format", "json"};
  const CliResult a = run_cli(before);
  const CliResult b = run_cli(after);
  const CliResult c = run_cli(before);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(contains(a.out, "\"code\": \"15\""));

  const std::string seed = write_file("json_seed.txt", "(P(0) | ~~(0 = 0))\n");
  const std::vector<std::string> chk = {"check",  "--theory", "pt",
                                        "--seed", seed,       "--truthset",
                                        "fixpoint", "--domain", "3",
                                        "--format", "json"};
  const CliResult r1 = run_cli(chk);
  const CliResult r2 = run_cli(chk);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(contains(r1.out, "\"pass\": true"));

  const CliResult fx1 = run_cli({"--format", "json", "fixpoint", "--seed", seed,
                                 "--domain", "3"});
  const CliResult fx2 = run_cli({"fixpoint", "--seed", seed, "--domain", "3",
                                 "--format", "json"});
  CHECK(fx1.out == fx2.out);
}

TEST_CASE("TRUTHLAB_CAP_UNIVERSE bounds closure, --cap overrides it") {
  const std::string seed = write_file("cap_seed.txt", "E v0 (v0 = S(0))\n");

  // Generous env cap: fine.
  setenv("TRUTHLAB_CAP_UNIVERSE", "100", 1);
  CHECK(run_cli({"fixpoint", "--seed", seed, "--domain", "2"}).code == 0);

  // Tight env cap: closure of the quantifier needs four sentences.
  setenv("TRUTHLAB_CAP_UNIVERSE", "2", 1);
  const CliResult capped = run_cli({"fixpoint", "--seed", seed, "--domain", "2"});
  CHECK(capped.code == 2);
  CHECK_FALSE(capped.err.empty());

  // The --cap flag wins over the environment.
  CHECK(run_cli({"fixpoint", "--seed", seed, "--domain", "2", "--cap", "100"}).code ==
        0);

  setenv("TRUTHLAB_CAP_UNIVERSE", "twelve", 1);
  const CliResult junk = run_cli({"fixpoint", "--seed", seed, "--domain", "2"});
  CHECK(junk.code == 2);
  CHECK(contains(junk.err, "not a natural number"));

  unsetenv("TRUTHLAB_CAP_UNIVERSE");
}

TEST_CASE("load_seed skips comments and reports the failing line") {
  const std::string ok = write_file("seed_ok.txt",
                                    "# header comment\n"
                                    "\n"
                                    "   \n"
                                    "~~(0 = 0)\n"
                                    "  # indented comment\n");
  const auto fs = load_seed(ok);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0] == neg(neg(eq(zero(), zero()))));

  const std::string empty = write_file("seed_empty.txt", "# nothing here\n\n");
  CHECK(load_seed(empty).empty());

  const std::string bad = write_file("seed_bad.txt", "(0 = 0)\n\n(0 = \n");
  try {
    load_seed(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(contains(e.what(), "seed_bad.txt:3"));
  }

  CHECK_THROWS_AS(load_seed("/no/such/dir/seeds.txt"), IoError);

  const std::string terms = write_file("terms.txt", "S(0)\n(v0 + 0)\n# done\n");
  const auto ts = load_terms(terms);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == succ(zero()));
  CHECK(ts[1] == add(var(0), zero()));
}
