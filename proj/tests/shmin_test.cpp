#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "singlehead/analysis.hpp"
#include "singlehead/shmin.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace singlehead;
using testkit::cl;
using testkit::fml;
using testkit::var;
using testkit::vars;

TEST_CASE("worked minimization trace") {
  // clause order matters; this is the order the CLI builds for
  // 'a->b abd->c b=d b->c'
  Formula f({cl("b->d"), cl("a->b"), cl("abd->c"), cl("d->b"), cl("b->c")});
  ShminOutcome out = shmin(f);

  CHECK(out.formula.clauses() ==
        std::vector<Clause>{cl("b->d"), cl("d->b"), cl("b->c")});
  CHECK_FALSE(out.equivalent);

  REQUIRE(out.trace.size() == 5);
  CHECK(out.trace[0].source == cl("b->d"));
  CHECK(out.trace[0].order_phase_bodies.empty());
  CHECK(out.trace[0].subset_phase_bodies.empty());
  CHECK(out.trace[0].result == cl("b->d"));

  CHECK(out.trace[1].source == cl("a->b"));
  CHECK(out.trace[1].order_phase_bodies == std::vector<VarSet>{vars("cd")});
  CHECK(out.trace[1].subset_phase_bodies == std::vector<VarSet>{vars("d")});
  CHECK(out.trace[1].result == cl("d->b"));

  CHECK(out.trace[2].source == cl("abd->c"));
  CHECK(out.trace[2].order_phase_bodies == std::vector<VarSet>{vars("bd")});
  CHECK(out.trace[2].subset_phase_bodies == std::vector<VarSet>{vars("b")});
  CHECK(out.trace[2].result == cl("b->c"));

  CHECK(out.trace[3].skipped);
  CHECK(out.trace[4].skipped);
}

TEST_CASE("redundant clause disappears") {
  ShminOutcome out = shmin(fml({"a->b", "b->c", "a->c"}));
  CHECK(out.formula.clauses() == std::vector<Clause>{cl("a->b"), cl("b->c")});
  CHECK(out.equivalent);
  CHECK(out.trace[0].order_phase_bodies.empty());
  CHECK(out.trace[0].subset_phase_bodies.empty());
  CHECK(out.trace[2].skipped);
}

TEST_CASE("chain with jumps reduces to the chain") {
  Formula f = fml({"a->b", "b->c", "c->d", "d->e", "e->f", "a->c", "b->d",
                   "c->e", "d->f"});
  ShminOutcome out = shmin(f);
  CHECK(out.formula ==
        Formula({cl("a->b"), cl("b->c"), cl("c->d"), cl("d->e"), cl("e->f")},
                f.universe()));
  CHECK(out.equivalent);
  for (const ShminTraceEntry& e : out.trace) {
    if (e.skipped) continue;
    CHECK(e.order_phase_bodies.empty());
    CHECK(e.subset_phase_bodies.empty());
  }
}

TEST_CASE("cyclic counterexample is not recognized as equivalent") {
  ShminOutcome out = shmin(fml({"ab->x", "bx->c", "ac->d", "d->x"}));
  CHECK(out.formula.clauses() ==
        std::vector<Clause>{cl("d->x"), cl("bx->c"), cl("ac->d")});
  CHECK_FALSE(out.equivalent);
}

TEST_CASE("trace entries are well-formed") {
  testkit::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    Formula f = testkit::random_formula(rng, 6, 9);
    ShminOutcome out = shmin(f);
    REQUIRE(out.trace.size() == f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      const ShminTraceEntry& e = out.trace[k];
      CHECK(e.source == f.clauses()[k]);
      if (e.skipped) {
        CHECK(e.order_phase_bodies.empty());
        CHECK(e.subset_phase_bodies.empty());
        CHECK_FALSE(e.result.has_value());
      } else {
        REQUIRE(e.result.has_value());
        CHECK(e.result->head() == e.source.head());
      }
    }
  }
}

TEST_CASE("the candidate is single-head and entailed by the input") {
  testkit::Rng rng(52);
  for (int i = 0; i < 400; ++i) {
    Formula f = testkit::random_formula(rng, 7, 10);
    ShminOutcome out = shmin(f);
    CHECK(is_single_head(out.formula));
    CHECK(entails_formula(f, out.formula));
    if (out.equivalent) CHECK(entails_formula(out.formula, f));
  }
}

TEST_CASE("propagation call budget stays quadratic") {
  testkit::Rng rng(53);
  for (int i = 0; i < 150; ++i) {
    Formula f = testkit::random_formula(rng, 7, 10);
    ShminOutcome out = shmin(f);
    std::size_t n = f.universe().size();
    for (const ShminTraceEntry& e : out.trace) {
      if (e.skipped) continue;
      CHECK(e.propagate_calls <= 2 * (n + 1) * (n + 1) + 1);
    }
  }
}

TEST_CASE("complete on inequivalent single-head-equivalent formulae") {
  testkit::Rng rng(54);
  int verified = 0;
  for (int i = 0; i < 200; ++i) {
    Formula f = testkit::random_acyclic_formula(rng, 5, 7);
    bool expected = oracle::single_head_equivalent(f);
    CHECK(shmin(f).equivalent == expected);
    // on these formulae the candidate is exactly the minimal-body formula
    if (expected && is_inequivalent(f)) {
      ShminOutcome out = shmin(f);
      Formula m = min_formula(f);
      CHECK(out.formula.size() == m.size());
      for (const Clause& c : out.formula.clauses()) CHECK(m.contains(c));
      ++verified;
    }
  }
  CHECK(verified > 20);
}

TEST_CASE("restarts explore clause orders") {
  Formula f = fml({"a->b", "b->a", "b->c", "c->a"});
  CHECK_FALSE(shmin(f).equivalent);  // the given order fails
  ShminOutcome out = shmin_restarts(f, 64, 1);
  CHECK(out.equivalent);
  CHECK(equivalent(out.formula, f));

  // a single attempt is one run on a permuted formula
  ShminOutcome one = shmin_restarts(f, 1, 9);
  CHECK(one.trace.size() == f.size());

  // an immediately successful formula needs one attempt only
  CHECK(shmin_restarts(fml({"a->b"}), 5, 0).equivalent);

  CHECK_THROWS_AS(shmin_restarts(f, 0, 0), PreconditionError);
}

TEST_CASE("restarts cannot fix every formula") {
  // no single-head equivalent exists, so every order fails
  Formula f = fml({"a->b", "b->a", "b->c", "c->b"});
  CHECK_FALSE(shmin_restarts(f, 64, 7).equivalent);
}

TEST_CASE("unentailed clauses single out the gap") {
  Formula f = fml({"a->b", "b->c", "c->b"});
  ShminOutcome out = shmin(f);
  REQUIRE_FALSE(out.equivalent);
  auto missing = unentailed_clauses(f, out.formula);
  REQUIRE(missing.size() == 1);
  CHECK(missing[0] == cl("a->b"));

  auto base = out.formula.clauses();
  for (const Clause& c : missing) base.push_back(c);
  CHECK(equivalent(Formula(base), f));
}

TEST_CASE("disproving single-head equivalence") {
  Formula two_roots = fml({"a->x", "b->x"});
  CHECK(disprove_single_head_equivalence(two_roots, {{vars("a"), var('x')}}));

  Formula loop = fml({"a->b", "b->c", "c->b"});
  CHECK_FALSE(
      disprove_single_head_equivalence(loop, {{vars("a"), var('b')}}));
  CHECK_FALSE(
      disprove_single_head_equivalence(loop, {{vars("a"), var('c')}}));

  CHECK_FALSE(disprove_single_head_equivalence(two_roots, {}));

  CHECK_THROWS_AS(
      disprove_single_head_equivalence(two_roots, {{vars("x"), var('a')}}),
      PreconditionError);
}

TEST_CASE("disproof never fires on single-head-equivalent formulae") {
  testkit::Rng rng(55);
  for (int i = 0; i < 150; ++i) {
    Formula f = testkit::random_formula(rng, 5, 7);
    if (f.universe().size() > 5) continue;
    if (!oracle::single_head_equivalent(f)) continue;
    ShminOutcome out = shmin(f);
    std::vector<std::pair<VarSet, Variable>> pairs;
    for (const ShminTraceEntry& e : out.trace) {
      if (e.skipped) continue;
      for (const VarSet& b : e.order_phase_bodies)
        pairs.emplace_back(b, e.source.head());
      for (const VarSet& b : e.subset_phase_bodies)
        pairs.emplace_back(b, e.source.head());
      pairs.emplace_back(e.result->body(), e.result->head());
    }
    CHECK_FALSE(disprove_single_head_equivalence(f, pairs));
  }
}
