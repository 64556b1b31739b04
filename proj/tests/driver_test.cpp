#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "singlehead/driver.hpp"
#include "support/generators.hpp"

using namespace singlehead;
using testkit::cl;

namespace {

bool contains_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current))
    if (current == line) return true;
  return false;
}

std::string corpus(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("formula assembly puts equivalence specs first") {
  Formula f = assemble_formula({"a->b", "abd->c", "b=d", "b->c"},
                               VarMode::Single);
  CHECK(f.clauses() == std::vector<Clause>{cl("b->d"), cl("d->b"), cl("a->b"),
                                           cl("abd->c"), cl("b->c")});
}

TEST_CASE("formula mode reproduces the reference report") {
  ModeResult r = run_formula_mode({"a->b", "abd->c", "b=d", "b->c"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "## cmdline formula ##\n"
        "formula: a->b abd->c b=d b->c\n"
        "b->d | | | b->d\n"
        "d->b | | | d->b\n"
        "a->b | [head already in shmin]\n"
        "abd->c | bd | b | b->c\n"
        "b->c | [head already in shmin]\n"
        "shmin: b->d d->b b->c\n"
        "shmin equivalent: False\n"
        "expected result: None\n");
}

TEST_CASE("formula mode on a single clause") {
  ModeResult r = run_formula_mode({"a->b"});
  CHECK(r.exit_code == 0);
  CHECK(contains_line(r.out, "shmin: a->b"));
  CHECK(contains_line(r.out, "shmin equivalent: True"));
  CHECK(contains_line(r.out, "expected result: None"));
}

TEST_CASE("formula mode with a redundant clause") {
  ModeResult r = run_formula_mode({"a->b", "b->c", "a->c"});
  CHECK(contains_line(r.out, "shmin: a->b b->c"));
  CHECK(contains_line(r.out, "shmin equivalent: True"));
  CHECK(contains_line(r.out, "a->c | [head already in shmin]"));
}

TEST_CASE("formula mode rejects bad specs") {
  ModeResult r = run_formula_mode({"a->"});
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("formula mode output is stable") {
  RunOptions options;
  options.attempts = 8;
  options.seed = 42;
  ModeResult a = run_formula_mode({"a->b", "b->a", "b->c", "c->a"}, options);
  ModeResult b = run_formula_mode({"a->b", "b->a", "b->c", "c->a"}, options);
  CHECK(a.out == b.out);
}

TEST_CASE("test file parsing") {
  std::istringstream in(
      "# comment\n"
      "name: first\n"
      "expect: false\n"
      "a->b\n"
      "\n"
      "name: second\n"
      "expect: none\n"
      "b=c\n");
  auto cases = parse_test_cases(in);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].name == "first");
  CHECK(cases[0].expect == Expectation::False);
  CHECK(cases[0].clause_specs == std::vector<std::string>{"a->b"});
  CHECK(cases[1].expect == Expectation::None);

  std::istringstream bad("expect: true\n");
  CHECK_THROWS_AS(parse_test_cases(bad), ParseError);
  std::istringstream bad2("name: x\nexpect: maybe\na->b\n");
  CHECK_THROWS_AS(parse_test_cases(bad2), ParseError);
  std::istringstream bad3("name: x\nexpect: true\n");
  CHECK_THROWS_AS(parse_test_cases(bad3), ParseError);
}

TEST_CASE("verdict table") {
  CHECK(case_verdict(Expectation::False, false) == TestVerdict::Passed);
  CHECK(case_verdict(Expectation::False, true) == TestVerdict::Failed);
  CHECK(case_verdict(Expectation::True, true) == TestVerdict::Passed);
  CHECK(case_verdict(Expectation::True, false) == TestVerdict::Inconclusive);
  CHECK(case_verdict(Expectation::None, true) == TestVerdict::Passed);
  CHECK(case_verdict(Expectation::None, false) == TestVerdict::Inconclusive);
}

TEST_CASE("test mode verdict lines and exit codes") {
  ModeResult passed = run_test_mode(corpus("conditiontwo.txt"));
  CHECK(passed.exit_code == 0);
  CHECK(contains_line(passed.out, "TEST PASSED"));
  CHECK(contains_line(passed.out, "expected result: False"));

  ModeResult inconclusive = run_test_mode(corpus("twoequiv.txt"));
  CHECK(inconclusive.exit_code == 3);
  CHECK(contains_line(inconclusive.out, "TEST INCONCLUSIVE"));

  ModeResult missing = run_test_mode(corpus("no-such-file.txt"));
  CHECK(missing.exit_code == 2);
}

TEST_CASE("forget mode") {
  ModeResult naive = run_forget_mode(
      {"a->b", "b->c", "c->d", "d->e", "e->f", "a->c", "b->d", "c->e",
       "d->f"},
      {"bcde"}, true);
  CHECK(naive.exit_code == 0);
  CHECK(contains_line(naive.out, "result: a->f"));
  CHECK(contains_line(naive.out, "preprocessed: False"));

  ModeResult fast = run_forget_mode(
      {"a->b", "b->c", "c->d", "d->e", "e->f", "a->c", "b->d", "c->e",
       "d->f"},
      {"bcde"}, false);
  CHECK(fast.exit_code == 0);
  CHECK(contains_line(fast.out, "result: a->f"));
  CHECK(contains_line(fast.out, "preprocessed: True"));
  CHECK(contains_line(fast.out, "branches: 1"));

  ModeResult nothing = run_forget_mode({"a->b"}, {}, true);
  CHECK(nothing.exit_code == 2);  // empty variable list

  ModeResult echo = run_forget_mode({"a->b"}, {"b"}, true);
  CHECK(contains_line(echo.out, "result:"));

  ModeResult unknown = run_forget_mode({"a->b"}, {"z"}, true);
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("graph mode") {
  ModeResult syn = run_graph_mode({"ab->c"}, GraphKind::Syntactic);
  CHECK(syn.exit_code == 0);
  CHECK(syn.out == "digraph {\n  a -> c;\n  b -> c;\n}\n");

  ModeResult sem = run_graph_mode({"ay->x", "a->x"}, GraphKind::Semantic);
  CHECK(sem.exit_code == 0);
  CHECK(sem.out == "digraph {\n  a -> x;\n}\n");
}

TEST_CASE("multi-token mode round trip") {
  RunOptions options;
  options.mode = VarMode::Multi;
  ModeResult r = run_formula_mode({"alpha->beta", "beta->gamma"}, options);
  CHECK(r.exit_code == 0);
  CHECK(contains_line(r.out, "shmin: alpha->beta beta->gamma"));
}
