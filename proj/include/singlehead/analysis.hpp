#pragma once

// Exhaustive semantic analyses: prime implicates, the semantic graph,
// semantic acyclicity, inequivalence, the two necessary conditions for
// single-head equivalence, the formula of minimal bodies, and redundancy
// removal. Everything except reduce_irredundant enumerates variable subsets
// and is therefore capped: subset_cap bounds single-subset enumerations,
// pair_cap the quadratic subset-pair enumerations.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "singlehead/errors.hpp"
#include "singlehead/graph.hpp"
#include "singlehead/horn.hpp"
#include "singlehead/order.hpp"
#include "singlehead/propagation.hpp"

namespace singlehead {

struct BruteForceCaps {
  std::size_t subset_cap = 20;  // prime implicates, closures, witnesses
  std::size_t pair_cap = 12;    // inequivalence, condition checks, MIN
};

namespace detail {

// Bitmask view of a formula over an explicit sorted variable list.
struct MaskFormula {
  std::vector<Variable> vars;
  std::vector<std::pair<std::uint64_t, int>> clauses;  // body mask, head index

  static MaskFormula over(const Formula& f, const VarSet& alphabet) {
    MaskFormula mf;
    mf.vars = alphabet.items();
    for (const Clause& c : f.clauses()) {
      std::uint64_t body = 0;
      for (const Variable& v : c.body()) body |= bit(mf.index_of(v));
      mf.clauses.emplace_back(body, mf.index_of(c.head()));
    }
    return mf;
  }
  static MaskFormula over(const Formula& f) { return over(f, f.universe()); }

  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  int index_of(const Variable& v) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    return static_cast<int>(it - vars.begin());
  }

  std::uint64_t closure(std::uint64_t m) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [body, head] : clauses) {
        if ((body & ~m) == 0 && !(m >> head & 1)) {
          m |= bit(head);
          changed = true;
        }
      }
    }
    return m;
  }

  std::vector<std::uint64_t> all_closures() const {
    std::vector<std::uint64_t> out(std::uint64_t{1} << vars.size());
    for (std::uint64_t m = 0; m < out.size(); ++m) out[m] = closure(m);
    return out;
  }

  VarSet to_set(std::uint64_t m) const {
    std::vector<Variable> vs;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (m >> i & 1) vs.push_back(vars[i]);
    return VarSet(std::move(vs));
  }
};

inline void require_cap(const char* operation, std::size_t n,
                        std::size_t cap) {
  if (n > cap) throw CapExceededError(operation, n, cap);
}

// Lexicographic order on the sorted-variable sequences two masks denote.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace detail

// All entailed clauses with subset-minimal bodies. Deterministic order:
// heads by name, bodies by their position in the subset enumeration.
inline Formula prime_implicates(const Formula& f,
                                const BruteForceCaps& caps = {}) {
  const std::size_t n = f.universe().size();
  detail::require_cap("prime_implicates", n, caps.subset_cap);
  auto mf = detail::MaskFormula::over(f);
  auto cls = mf.all_closures();

  std::vector<Clause> primes;
  for (std::size_t h = 0; h < n; ++h) {
    const std::uint64_t hbit = detail::MaskFormula::bit(static_cast<int>(h));
    for (std::uint64_t m = 0; m < cls.size(); ++m) {
      if (m & hbit) continue;
      if (!(cls[m] & hbit)) continue;
      bool minimal = true;
      for (std::uint64_t rest = m; rest; rest &= rest - 1) {
        std::uint64_t without = m & ~(rest & ~(rest - 1));
        if (cls[without] & hbit) {
          minimal = false;
          break;
        }
      }
      if (minimal) primes.emplace_back(mf.to_set(m), mf.vars[h]);
    }
  }
  return Formula(std::move(primes), f.universe());
}

// E(F), computed as the syntactic graph of the prime implicates.
inline DirectedGraph semantic_graph(const Formula& f,
                                    const BruteForceCaps& caps = {}) {
  return syntactic_graph(prime_implicates(f, caps));
}

inline bool is_semantically_acyclic(const Formula& f,
                                    const BruteForceCaps& caps = {}) {
  return !has_nontrivial_cycle(semantic_graph(f, caps));
}

// Whenever two variable sets are equivalent under f, each must also be
// equivalent to their intersection.
inline bool is_inequivalent(const Formula& f, const BruteForceCaps& caps = {}) {
  const std::size_t n = f.universe().size();
  detail::require_cap("is_inequivalent", n, caps.pair_cap);
  auto mf = detail::MaskFormula::over(f);
  auto cls = mf.all_closures();
  for (std::uint64_t a = 0; a < cls.size(); ++a)
    for (std::uint64_t b = a + 1; b < cls.size(); ++b)
      if (cls[a] == cls[b] && cls[a & b] != cls[a]) return false;
  return true;
}

// For each variable x: the least witness set A (fewest variables first,
// then lexicographic) such that x is not in A, A entails x whenever
// anything entails x, and every set entailing x also entails A. Absent if
// no witness exists; the condition holds iff every variable has one.
inline std::map<Variable, std::optional<VarSet>> check_condition_one(
    const Formula& f, const BruteForceCaps& caps = {}) {
  const std::size_t n = f.universe().size();
  detail::require_cap("check_condition_one", n, caps.pair_cap);
  auto mf = detail::MaskFormula::over(f);
  auto cls = mf.all_closures();

  std::map<Variable, std::optional<VarSet>> out;
  for (std::size_t h = 0; h < n; ++h) {
    const std::uint64_t hbit = detail::MaskFormula::bit(static_cast<int>(h));
    std::uint64_t lower_bound_mask = ~std::uint64_t{0};
    bool entailed_by_anything = false;
    for (std::uint64_t b = 0; b < cls.size(); ++b) {
      if (b & hbit) continue;
      if (cls[b] & hbit) {
        entailed_by_anything = true;
        lower_bound_mask &= cls[b];
      }
    }
    if (!entailed_by_anything) {
      out.emplace(mf.vars[h], VarSet{});
      continue;
    }
    // candidates: subsets of every entailing set's consequences, without x,
    // themselves entailing x
    std::uint64_t pool = lower_bound_mask & ~hbit &
                         ((std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t m = pool;; m = (m - 1) & pool) {
      if (cls[m] & hbit) candidates.push_back(m);
      if (m == 0) break;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](std::uint64_t a, std::uint64_t b) {
                int pa = std::popcount(a), pb = std::popcount(b);
                if (pa != pb) return pa < pb;
                return detail::mask_lex_less(a, b);
              });
    if (candidates.empty())
      out.emplace(mf.vars[h], std::nullopt);
    else
      out.emplace(mf.vars[h], mf.to_set(candidates.front()));
  }
  return out;
}

inline bool condition_one_holds(const Formula& f,
                                const BruteForceCaps& caps = {}) {
  for (const auto& [var, witness] : check_condition_one(f, caps))
    if (!witness) return false;
  return true;
}

// Whenever f |= A -> B, some C equivalent to B must satisfy
// C \ common(B) contained in A, where common(B) collects the variables
// present in every set equivalent to B.
inline bool check_condition_two(const Formula& f,
                                const BruteForceCaps& caps = {}) {
  const std::size_t n = f.universe().size();
  detail::require_cap("check_condition_two", n, caps.pair_cap);
  auto mf = detail::MaskFormula::over(f);
  auto cls = mf.all_closures();

  // group masks by their closure; per group keep the members' intersection
  // and the deduplicated reduced members (member minus intersection)
  std::unordered_map<std::uint64_t, std::uint64_t> common;
  for (std::uint64_t m = 0; m < cls.size(); ++m) {
    auto [it, fresh] = common.emplace(cls[m], m);
    if (!fresh) it->second &= m;
  }
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> reduced;
  for (std::uint64_t m = 0; m < cls.size(); ++m) {
    auto& list = reduced[cls[m]];
    std::uint64_t r = m & ~common[cls[m]];
    if (std::find(list.begin(), list.end(), r) == list.end())
      list.push_back(r);
  }
  for (auto& [key, list] : reduced)
    std::sort(list.begin(), list.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) < std::popcount(b);
    });

  for (std::uint64_t a = 0; a < cls.size(); ++a) {
    for (std::uint64_t b = 0; b < cls.size(); ++b) {
      if (b & ~cls[a]) continue;  // f does not entail A -> B
      bool found = false;
      for (std::uint64_t r : reduced[cls[b]]) {
        if ((r & ~a) == 0) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

// MIN(F): entailed clauses whose bodies are minimal under both the
// entailment order and strict containment.
inline Formula min_formula(const Formula& f, const BruteForceCaps& caps = {}) {
  const std::size_t n = f.universe().size();
  detail::require_cap("min_formula", n, caps.pair_cap);
  auto mf = detail::MaskFormula::over(f);
  auto cls = mf.all_closures();

  std::vector<Clause> minimal;
  for (std::size_t h = 0; h < n; ++h) {
    const std::uint64_t hbit = detail::MaskFormula::bit(static_cast<int>(h));
    std::vector<std::uint64_t> entailing;
    for (std::uint64_t m = 0; m < cls.size(); ++m)
      if (!(m & hbit) && (cls[m] & hbit)) entailing.push_back(m);
    for (std::uint64_t a : entailing) {
      bool is_min = true;
      for (std::uint64_t b : entailing) {
        if (b == a) continue;
        bool strictly_below = (b & ~cls[a]) == 0 && (a & ~cls[b]) != 0;
        bool proper_subset = (b & ~a) == 0;
        if (strictly_below || proper_subset) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.emplace_back(mf.to_set(a), mf.vars[h]);
    }
  }
  return Formula(std::move(minimal), f.universe());
}

// Every non-tautologic clause over the given alphabet entailed by f.
inline Formula clausal_closure(const Formula& f, const VarSet& alphabet,
                               const BruteForceCaps& caps = {}) {
  detail::require_cap("clausal_closure", alphabet.size(), caps.subset_cap);
  auto mf = detail::MaskFormula::over(f, f.universe().united(alphabet));
  std::vector<int> alpha_ids;
  for (const Variable& v : alphabet) alpha_ids.push_back(mf.index_of(v));

  const std::size_t k = alphabet.size();
  std::vector<Clause> out;
  for (std::size_t hi = 0; hi < k; ++hi) {
    const int head = alpha_ids[hi];
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
      if (pick >> hi & 1) continue;
      std::uint64_t body = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (pick >> j & 1) body |= detail::MaskFormula::bit(alpha_ids[j]);
      if (mf.closure(body) >> head & 1)
        out.emplace_back(mf.to_set(body), mf.vars[static_cast<std::size_t>(head)]);
    }
  }
  return Formula(std::move(out), alphabet);
}

// Removes clauses entailed by the rest, in stored order, restarting after
// each removal. The result is equivalent to the input and irredundant.
inline Formula reduce_irredundant(const Formula& f) {
  Formula current = f;
  bool removed = true;
  while (removed) {
    removed = false;
    for (const Clause& c : current.clauses()) {
      Formula rest = current.without(c);
      if (entails_clause(rest, c)) {
        current = rest;
        removed = true;
        break;
      }
    }
  }
  return current;
}

// Complete decision procedure for syntactically acyclic formulae: such a
// formula is single-head equivalent exactly when its irredundant core is
// single-head.
inline bool decide_acyclic_single_head_equivalence(const Formula& f) {
  if (has_nontrivial_cycle(syntactic_graph(f)))
    throw NotSyntacticallyAcyclicError(
        "decide_acyclic_single_head_equivalence: the syntactic graph has a "
        "nontrivial cycle");
  return is_single_head(reduce_irredundant(f));
}

}  // namespace singlehead
