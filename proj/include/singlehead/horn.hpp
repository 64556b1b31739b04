#pragma once

// Core types for definite Horn formulae: variables, variable sets, clauses
// and formulae, plus the clause text syntax used by the command line tool.
//
// A clause is written <body>-><head>, e.g. "ab->c". A spec may carry several
// heads ("ab->cd" is ab->c and ab->d) or use "=" for mutual implication
// ("b=d" is b->d and d->b). Variables are single characters by default;
// VarMode::Multi switches to comma-separated identifiers.

#include <algorithm>
#include <cctype>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singlehead/errors.hpp"

namespace singlehead {

// A propositional variable. Identity and ordering are by name.
class Variable {
 public:
  explicit Variable(std::string name) : name_(std::move(name)) {
    if (name_.empty())
      throw std::invalid_argument("variable name must be non-empty");
  }

  const std::string& name() const { return name_; }

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const Variable& a,
                                          const Variable& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

// A set of variables, kept sorted by name. Value type; all set algebra
// returns fresh sets except insert/erase which edit in place.
class VarSet {
 public:
  using const_iterator = std::vector<Variable>::const_iterator;
  using const_reverse_iterator = std::vector<Variable>::const_reverse_iterator;

  VarSet() = default;
  VarSet(std::initializer_list<Variable> vars)
      : VarSet(std::vector<Variable>(vars)) {}
  explicit VarSet(std::vector<Variable> vars) : items_(std::move(vars)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  bool contains(const Variable& v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
  }
  bool subset_of(const VarSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }
  bool proper_subset_of(const VarSet& other) const {
    return size() < other.size() && subset_of(other);
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const_reverse_iterator rbegin() const { return items_.rbegin(); }
  const_reverse_iterator rend() const { return items_.rend(); }
  const std::vector<Variable>& items() const { return items_; }

  void insert(const Variable& v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) items_.insert(it, v);
  }
  void erase(const Variable& v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v) items_.erase(it);
  }

  VarSet with(const Variable& v) const {
    VarSet s = *this;
    s.insert(v);
    return s;
  }
  VarSet without(const Variable& v) const {
    VarSet s = *this;
    s.erase(v);
    return s;
  }
  VarSet united(const VarSet& other) const {
    VarSet s;
    s.items_.reserve(size() + other.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                   other.items_.end(), std::back_inserter(s.items_));
    return s;
  }
  VarSet minus(const VarSet& other) const {
    VarSet s;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(s.items_));
    return s;
  }
  VarSet intersect(const VarSet& other) const {
    VarSet s;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(s.items_));
    return s;
  }

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend auto operator<=>(const VarSet& a, const VarSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Variable> items_;
};

// A definite Horn clause body->head. Never tautologic: head not in body.
// The body may be empty for clauses built programmatically; parsed clauses
// always have at least one body variable.
class Clause {
 public:
  Clause(VarSet body, Variable head)
      : body_(std::move(body)), head_(std::move(head)) {
    if (body_.contains(head_))
      throw std::invalid_argument("tautologic clause: head '" + head_.name() +
                                  "' occurs in the body");
  }

  const VarSet& body() const { return body_; }
  const Variable& head() const { return head_; }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause& a, const Clause& b) {
    if (auto c = a.head_ <=> b.head_; c != 0) return c;
    return a.body_ <=> b.body_;
  }

 private:
  VarSet body_;
  Variable head_;
};

// An ordered collection of distinct clauses over a finite variable universe.
// Duplicate clauses are dropped, keeping the first occurrence; the stored
// order is preserved because downstream minimization depends on it. The
// universe is every occurring variable plus any explicitly declared ones.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::vector<Clause> clauses, VarSet declared = {})
      : universe_(std::move(declared)) {
    clauses_.reserve(clauses.size());
    for (auto& c : clauses) {
      if (std::find(clauses_.begin(), clauses_.end(), c) == clauses_.end())
        clauses_.push_back(std::move(c));
    }
    for (const Clause& c : clauses_) {
      universe_ = universe_.united(c.body());
      universe_.insert(c.head());
    }
  }

  const std::vector<Clause>& clauses() const { return clauses_; }
  const VarSet& universe() const { return universe_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  bool contains(const Clause& c) const {
    return std::find(clauses_.begin(), clauses_.end(), c) != clauses_.end();
  }

  // Same formula minus one clause; the universe is kept as-is so analyses
  // over the original alphabet stay meaningful.
  Formula without(const Clause& c) const {
    std::vector<Clause> rest;
    rest.reserve(clauses_.size());
    for (const Clause& d : clauses_)
      if (!(d == c)) rest.push_back(d);
    return Formula(std::move(rest), universe_);
  }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  std::vector<Clause> clauses_;
  VarSet universe_;
};

enum class VarMode { Single, Multi };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline bool valid_identifier(std::string_view tok) {
  if (tok.empty()) return false;
  unsigned char first = static_cast<unsigned char>(tok.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char ch : tok) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

// One side of a clause spec, as an ordered variable list (duplicates kept
// out, first occurrence order preserved for head expansion).
inline std::vector<Variable> parse_side(std::string_view side, VarMode mode,
                                        std::string_view whole) {
  side = trim(side);
  std::vector<Variable> vars;
  auto push = [&vars](Variable v) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      vars.push_back(std::move(v));
  };
  if (mode == VarMode::Single) {
    for (char ch : side) {
      if (!std::isalnum(static_cast<unsigned char>(ch)))
        throw ParseError("illegal character '" + std::string(1, ch) +
                         "' in clause spec '" + std::string(whole) + "'");
      push(Variable(std::string(1, ch)));
    }
  } else {
    std::size_t start = 0;
    while (start <= side.size()) {
      std::size_t comma = side.find(',', start);
      std::string_view tok = trim(
          side.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - start));
      if (!valid_identifier(tok))
        throw ParseError("illegal variable token '" + std::string(tok) +
                         "' in clause spec '" + std::string(whole) + "'");
      push(Variable(std::string(tok)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (vars.empty())
    throw ParseError("empty side in clause spec '" + std::string(whole) + "'");
  return vars;
}

}  // namespace detail

inline bool is_equivalence_spec(std::string_view text) {
  return text.find("->") == std::string_view::npos &&
         text.find('=') != std::string_view::npos;
}

// Expands a clause spec into clauses. "ab->cd" becomes ab->c and ab->d;
// "b=d" becomes b->d and d->b. Tautologic expansions (head in body) are
// dropped. Heads expand left to right.
inline std::vector<Clause> parse_clause_spec(std::string_view text,
                                             VarMode mode = VarMode::Single) {
  std::string_view spec = detail::trim(text);
  if (spec.empty()) throw ParseError("empty clause spec");

  std::vector<std::pair<std::vector<Variable>, std::vector<Variable>>> rules;
  if (std::size_t arrow = spec.find("->"); arrow != std::string_view::npos) {
    auto body = detail::parse_side(spec.substr(0, arrow), mode, spec);
    auto heads = detail::parse_side(spec.substr(arrow + 2), mode, spec);
    rules.emplace_back(std::move(body), std::move(heads));
  } else if (std::size_t eq = spec.find('='); eq != std::string_view::npos) {
    auto left = detail::parse_side(spec.substr(0, eq), mode, spec);
    auto right = detail::parse_side(spec.substr(eq + 1), mode, spec);
    rules.emplace_back(left, right);
    rules.emplace_back(std::move(right), std::move(left));
  } else {
    throw ParseError("clause spec '" + std::string(spec) +
                     "' has neither '->' nor '='");
  }

  std::vector<Clause> clauses;
  for (const auto& [body_vars, heads] : rules) {
    VarSet body((std::vector<Variable>(body_vars)));
    for (const Variable& head : heads) {
      if (body.contains(head)) continue;  // tautologic expansion
      Clause c(body, head);
      if (std::find(clauses.begin(), clauses.end(), c) == clauses.end())
        clauses.push_back(std::move(c));
    }
  }
  return clauses;
}

// Renders a variable set: concatenated names in single-character mode,
// comma-separated otherwise. Sorted either way since VarSet is sorted.
inline std::string format_vars(const VarSet& vars,
                               VarMode mode = VarMode::Single) {
  std::string out;
  bool first = true;
  for (const Variable& v : vars) {
    if (!first && mode == VarMode::Multi) out += ',';
    out += v.name();
    first = false;
  }
  return out;
}

// Body sorted lexicographically, then "->", then the head.
// parse_clause_spec(format_clause(c)) yields exactly {c}.
inline std::string format_clause(const Clause& c,
                                 VarMode mode = VarMode::Single) {
  return format_vars(c.body(), mode) + "->" + c.head().name();
}

// True iff no two clauses share a head.
inline bool is_single_head(const Formula& f) {
  VarSet heads;
  for (const Clause& c : f.clauses()) {
    if (heads.contains(c.head())) return false;
    heads.insert(c.head());
  }
  return true;
}

}  // namespace singlehead
