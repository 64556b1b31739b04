#pragma once

// Replacement-based variable forgetting. A clause whose head is forgotten
// is dropped; a forgotten variable in a body is replaced by the body of a
// clause defining it. Every combination of defining clauses is one branch;
// forgetting from a formula with duplicated heads can therefore explore
// exponentially many branches, which is exactly what forget_fast avoids by
// first converting the formula to single-head form when possible.

#include <cstdint>
#include <map>
#include <vector>

#include "singlehead/analysis.hpp"
#include "singlehead/errors.hpp"
#include "singlehead/horn.hpp"
#include "singlehead/shmin.hpp"

namespace singlehead {

struct ForgetResult {
  Formula formula;  // over the retained alphabet
  std::uint64_t branches = 0;
  bool preprocessed = false;  // whether a single-head candidate replaced the input
};

inline ForgetResult forget_replace(const Formula& f, const VarSet& vars) {
  if (!vars.subset_of(f.universe()))
    throw PreconditionError(
        "forget_replace: variables to forget must belong to the universe");

  // defining bodies per forgotten variable, in stored clause order
  std::map<Variable, std::vector<VarSet>> defs;
  for (const Clause& c : f.clauses())
    if (vars.contains(c.head())) defs[c.head()].push_back(c.body());

  std::vector<Clause> produced;
  std::uint64_t branches = 0;

  for (const Clause& clause : f.clauses()) {
    if (vars.contains(clause.head())) continue;

    // forgotten variables reachable from this body through defining bodies
    VarSet reachable;
    std::vector<Variable> work(clause.body().items());
    while (!work.empty()) {
      Variable v = work.back();
      work.pop_back();
      if (!vars.contains(v) || reachable.contains(v)) continue;
      reachable.insert(v);
      auto it = defs.find(v);
      if (it == defs.end()) continue;
      for (const VarSet& replacement : it->second)
        for (const Variable& w : replacement) work.push_back(w);
    }
    std::vector<Variable> choice_vars;
    for (const Variable& v : reachable)
      if (defs.count(v)) choice_vars.push_back(v);

    // one branch per assignment of a defining clause to each choice variable
    std::vector<std::size_t> pick(choice_vars.size(), 0);
    while (true) {
      ++branches;

      VarSet body = clause.body();
      VarSet expanded;
      bool dead = false;
      while (!dead) {
        const Variable* next = nullptr;
        for (const Variable& v : body) {
          if (vars.contains(v)) {
            next = &v;
            break;
          }
        }
        if (!next) break;
        if (expanded.contains(*next) || !defs.count(*next)) {
          // replacement cycle, or no clause to replace with: the clause's
          // precondition is unreachable on this branch
          dead = true;
          break;
        }
        std::size_t vi = static_cast<std::size_t>(
            std::find(choice_vars.begin(), choice_vars.end(), *next) -
            choice_vars.begin());
        VarSet replacement = defs[*next][pick[vi]];
        Variable v = *next;
        expanded.insert(v);
        body.erase(v);
        body = body.united(replacement);
      }
      if (!dead && !body.contains(clause.head()))
        produced.emplace_back(std::move(body), clause.head());

      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < defs[choice_vars[i]].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  if (branches == 0 && !vars.empty()) branches = 1;

  // normalize: deduplicate, drop clauses subsumed by a same-head clause
  // with a smaller body
  std::vector<Clause> unique;
  for (const Clause& c : produced)
    if (std::find(unique.begin(), unique.end(), c) == unique.end())
      unique.push_back(c);
  std::vector<Clause> kept;
  for (const Clause& c : unique) {
    bool subsumed = false;
    for (const Clause& d : unique) {
      if (d.head() == c.head() && d.body().proper_subset_of(c.body())) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.push_back(c);
  }
  return ForgetResult{Formula(std::move(kept), f.universe().minus(vars)),
                      branches, false};
}

// Forgetting with single-head preprocessing: run shmin with restarts, then
// forget from the candidate if it is equivalent, otherwise from the
// candidate plus the input clauses it fails to entail (still equivalent to
// the input, usually with fewer duplicated heads).
inline ForgetResult forget_fast(const Formula& f, const VarSet& vars,
                                unsigned attempts, std::uint64_t seed) {
  if (!vars.subset_of(f.universe()))
    throw PreconditionError(
        "forget_fast: variables to forget must belong to the universe");
  ShminOutcome outcome = shmin_restarts(f, attempts, seed);
  std::vector<Clause> base = outcome.formula.clauses();
  if (!outcome.equivalent)
    for (Clause& c : unentailed_clauses(f, outcome.formula))
      base.push_back(std::move(c));
  ForgetResult result =
      forget_replace(Formula(std::move(base), f.universe()), vars);
  result.preprocessed = outcome.equivalent;
  return result;
}

// Ground truth for testing: the full clausal closure of f restricted to
// the retained alphabet.
inline Formula forget_oracle(const Formula& f, const VarSet& vars,
                             const BruteForceCaps& caps = {}) {
  if (!vars.subset_of(f.universe()))
    throw PreconditionError(
        "forget_oracle: variables to forget must belong to the universe");
  return clausal_closure(f, f.universe().minus(vars), caps);
}

}  // namespace singlehead
