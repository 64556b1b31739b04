#pragma once

// Body minimization towards a single-head candidate.
//
// shmin() visits the clauses in stored order, keeps the first clause per
// head, and minimizes its body in two phases: first towards strictly lower
// bodies in the entailment order, then towards proper subsets. The result
// is always single-head and always entailed by the input; it is equivalent
// to the input exactly when the input is single-head equivalent, provided
// the input is inequivalent. The candidate depends on the clause order, so
// shmin_restarts() retries over seeded random permutations.
//
// Inner propagation runs against the used-clause subset of the last
// committed state; a clause usable from a smaller body is always usable
// from the larger one, so restricting to used clauses preserves the
// fixpoint. With SINGLEHEAD_SELF_CHECK defined, every inner result is
// recomputed against the full formula and compared.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "singlehead/errors.hpp"
#include "singlehead/horn.hpp"
#include "singlehead/order.hpp"
#include "singlehead/propagation.hpp"

#if defined(SINGLEHEAD_SELF_CHECK)
#include <stdexcept>
#define SINGLEHEAD_CHECK(cond)                                        \
  do {                                                                \
    if (!(cond)) throw std::logic_error("self-check failed: " #cond); \
  } while (0)
#else
#define SINGLEHEAD_CHECK(cond) ((void)0)
#endif

namespace singlehead {

struct ShminTraceEntry {
  Clause source;
  std::vector<VarSet> order_phase_bodies;   // bodies committed in phase one
  std::vector<VarSet> subset_phase_bodies;  // bodies committed in phase two
  std::optional<Clause> result;
  bool skipped = false;  // head already emitted
  std::size_t propagate_calls = 0;
};

struct ShminOutcome {
  Formula formula;  // the single-head candidate
  bool equivalent = false;
  std::vector<ShminTraceEntry> trace;
};

inline ShminOutcome shmin(const Formula& f) {
  std::vector<Clause> emitted;
  std::vector<ShminTraceEntry> trace;
  VarSet done_heads;

  for (const Clause& source : f.clauses()) {
    ShminTraceEntry entry{source, {}, {}, std::nullopt, false, 0};
    const Variable& head = source.head();
    if (done_heads.contains(head)) {
      entry.skipped = true;
      trace.push_back(std::move(entry));
      continue;
    }

    VarSet body = source.body();
    PropagationResult state = propagate(body, f);
    ++entry.propagate_calls;

    // Phase one: replace the body with a strictly lower one. Candidates are
    // the consequences of the body minus one of its underived variables and
    // the head; scanning only underived variables is what makes the
    // replacement strictly lower rather than merely equivalent.
    bool progressed = true;
    while (progressed) {
      progressed = false;
      VarSet candidates = body.minus(state.derived);
      for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        VarSet next = body.united(state.derived);
        next.erase(*it);
        next.erase(head);
        PropagationResult trial = propagate(next, state.used);
        ++entry.propagate_calls;
        SINGLEHEAD_CHECK(propagate(next, f).derived == trial.derived);
        if (trial.derived.contains(head)) {
          SINGLEHEAD_CHECK(
              next.united(trial.derived)
                  .proper_subset_of(body.united(state.derived)));
          body = std::move(next);
          state = std::move(trial);
          entry.order_phase_bodies.push_back(body);
          progressed = true;
          break;
        }
      }
    }

    // Phase two: drop single variables while the head stays derivable.
    // Removing an underived variable would give a strictly lower body,
    // which phase one ruled out, so only derived variables are tried.
    progressed = true;
    while (progressed) {
      progressed = false;
      VarSet candidates = body.intersect(state.derived);
      for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        VarSet next = body.without(*it);
        PropagationResult trial = propagate(next, state.used);
        ++entry.propagate_calls;
        SINGLEHEAD_CHECK(propagate(next, f).derived == trial.derived);
        if (trial.derived.contains(head)) {
          body = std::move(next);
          state = std::move(trial);
          entry.subset_phase_bodies.push_back(body);
          progressed = true;
          break;
        }
      }
    }

    Clause out(body, head);
    entry.result = out;
    trace.push_back(std::move(entry));
    emitted.push_back(std::move(out));
    done_heads.insert(head);
  }

  Formula candidate(std::move(emitted), f.universe());
  bool equal = equivalent(f, candidate);
  return ShminOutcome{std::move(candidate), equal, std::move(trace)};
}

// Input clauses the candidate fails to entail. Empty exactly when the
// candidate is equivalent to the input.
inline std::vector<Clause> unentailed_clauses(const Formula& input,
                                              const Formula& candidate) {
  std::vector<Clause> missing;
  for (const Clause& c : input.clauses())
    if (!entails_clause(candidate, c)) missing.push_back(c);
  return missing;
}

// Runs shmin over seeded random permutations of the clause order and
// returns the first equivalent outcome, or the last outcome if none is.
// Deterministic for a fixed seed.
inline ShminOutcome shmin_restarts(const Formula& f, unsigned attempts,
                                   std::uint64_t seed) {
  if (attempts == 0)
    throw PreconditionError("shmin_restarts: attempts must be at least 1");
  std::mt19937_64 rng(seed);
  ShminOutcome outcome;
  for (unsigned k = 0; k < attempts; ++k) {
    std::vector<Clause> order = f.clauses();
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng() % i]);
    outcome = shmin(Formula(std::move(order), f.universe()));
    if (outcome.equivalent) return outcome;
  }
  return outcome;
}

// Sufficient test that no single-head equivalent formula exists. Each given
// (body, head) pair must be entailed by f. A head is refuted when no clause
// of f with that head has a body below every entailed body recorded for it
// (the given ones plus f's own). True proves non-equivalence; false is
// inconclusive.
inline bool disprove_single_head_equivalence(
    const Formula& f, const std::vector<std::pair<VarSet, Variable>>& pairs) {
  for (const auto& [body, head] : pairs)
    if (!entails(f, body, head))
      throw PreconditionError(
          "disprove_single_head_equivalence: pair for head '" + head.name() +
          "' is not entailed by the formula");

  std::map<Variable, std::vector<VarSet>> bodies_by_head;
  for (const auto& [body, head] : pairs)
    if (!body.contains(head)) bodies_by_head[head].push_back(body);

  for (auto& [head, bodies] : bodies_by_head) {
    for (const Clause& c : f.clauses())
      if (c.head() == head) bodies.push_back(c.body());
    bool dominated = false;
    for (const Clause& c : f.clauses()) {
      if (c.head() != head) continue;
      bool below_all = true;
      for (const VarSet& b : bodies) {
        if (!body_leq(c.body(), b, f)) {
          below_all = false;
          break;
        }
      }
      if (below_all) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return true;
  }
  return false;
}

}  // namespace singlehead
