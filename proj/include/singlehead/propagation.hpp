#pragma once

// Entailment for definite Horn formulae via indexed unit propagation.
//
// propagate(seeds, f) saturates the formula from a seed set B: a clause
// fires once its whole body lies in B plus the heads fired so far. It
// returns both the derived variables (every head that fired, whether or not
// it was already known) and the used clauses (every clause whose body ended
// up entailed). This is forward chaining with the classic counter
// optimization: each clause keeps a count of body variables not yet seen,
// and a reverse index maps each variable to the clauses it appears in, so a
// full run costs O(total literal occurrences).

#include <cstddef>
#include <vector>

#include "singlehead/horn.hpp"

namespace singlehead {

struct PropagationResult {
  VarSet derived;  // variables derived through at least one clause
  Formula used;    // clauses whose bodies are entailed by the seeds
};

class PropagationIndex {
 public:
  explicit PropagationIndex(const Formula& f) : formula_(&f) {
    const std::size_t n = f.universe().size();
    const std::size_t m = f.size();
    base_remaining_.resize(m);
    head_.resize(m);
    occurs_.resize(n);
    for (std::size_t ci = 0; ci < m; ++ci) {
      const Clause& c = f.clauses()[ci];
      base_remaining_[ci] = static_cast<int>(c.body().size());
      head_[ci] = id_of(c.head());
      for (const Variable& v : c.body())
        occurs_[static_cast<std::size_t>(id_of(v))].push_back(ci);
    }
    remaining_ = base_remaining_;
    member_.assign(n, 0);
    fired_.assign(m, 0);
    derived_.assign(n, 0);
  }

  // Runs propagation from the given seed set. Seeds outside the formula's
  // universe are inert and simply ignored. Resets any previous run.
  void saturate(const VarSet& seeds) {
    remaining_ = base_remaining_;
    member_.assign(member_.size(), 0);
    fired_.assign(fired_.size(), 0);
    derived_.assign(derived_.size(), 0);
    queue_.clear();
    for (const Variable& v : seeds) {
      int i = id_of(v);
      if (i >= 0 && !member_[static_cast<std::size_t>(i)]) {
        member_[static_cast<std::size_t>(i)] = 1;
        queue_.push_back(i);
      }
    }
    for (std::size_t ci = 0; ci < remaining_.size(); ++ci)
      if (remaining_[ci] == 0) fire(ci);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int v = queue_[qi];
      for (std::size_t ci : occurs_[static_cast<std::size_t>(v)])
        if (--remaining_[ci] == 0) fire(ci);
    }
  }

  VarSet derived() const {
    std::vector<Variable> vars;
    const auto& uni = formula_->universe().items();
    for (std::size_t i = 0; i < uni.size(); ++i)
      if (derived_[i]) vars.push_back(uni[i]);
    return VarSet(std::move(vars));
  }

  Formula used_clauses() const {
    std::vector<Clause> used;
    for (std::size_t ci = 0; ci < fired_.size(); ++ci)
      if (fired_[ci]) used.push_back(formula_->clauses()[ci]);
    return Formula(std::move(used));
  }

  // Inspection hooks for the index invariants.
  int remaining(std::size_t clause_index) const {
    return remaining_[clause_index];
  }
  bool used(std::size_t clause_index) const {
    return fired_[clause_index] != 0;
  }
  bool member(const Variable& v) const {
    int i = id_of(v);
    return i >= 0 && member_[static_cast<std::size_t>(i)] != 0;
  }

 private:
  int id_of(const Variable& v) const {
    const auto& uni = formula_->universe().items();
    auto it = std::lower_bound(uni.begin(), uni.end(), v);
    if (it == uni.end() || *it != v) return -1;
    return static_cast<int>(it - uni.begin());
  }

  void fire(std::size_t ci) {
    if (fired_[ci]) return;
    fired_[ci] = 1;
    std::size_t h = static_cast<std::size_t>(head_[ci]);
    derived_[h] = 1;
    if (!member_[h]) {
      member_[h] = 1;
      queue_.push_back(static_cast<int>(h));
    }
  }

  const Formula* formula_;
  std::vector<int> base_remaining_;
  std::vector<int> remaining_;
  std::vector<int> head_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<char> member_;
  std::vector<char> fired_;
  std::vector<char> derived_;
  std::vector<int> queue_;
};

inline PropagationResult propagate(const VarSet& seeds, const Formula& f) {
  PropagationIndex index(f);
  index.saturate(seeds);
  return PropagationResult{index.derived(), index.used_clauses()};
}

// All variables entailed by the seed set: the seeds themselves plus
// everything derivable through clauses.
inline VarSet consequences(const VarSet& seeds, const Formula& f) {
  return seeds.united(propagate(seeds, f).derived);
}

// f |= body -> head. Tautologies hold in every formula.
inline bool entails(const Formula& f, const VarSet& body,
                    const Variable& head) {
  if (body.contains(head)) return true;
  return propagate(body, f).derived.contains(head);
}

inline bool entails_clause(const Formula& f, const Clause& c) {
  return entails(f, c.body(), c.head());
}

inline bool entails_formula(const Formula& f, const Formula& g) {
  for (const Clause& c : g.clauses())
    if (!entails_clause(f, c)) return false;
  return true;
}

inline bool equivalent(const Formula& f, const Formula& g) {
  return entails_formula(f, g) && entails_formula(g, f);
}

}  // namespace singlehead
