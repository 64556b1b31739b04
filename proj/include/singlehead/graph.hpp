#pragma once

// Directed graphs over variables. A graph is just a set of edges; isolated
// nodes carry no information here.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "singlehead/horn.hpp"

namespace singlehead {

class DirectedGraph {
 public:
  using Edge = std::pair<Variable, Variable>;

  DirectedGraph() = default;

  void add_edge(const Variable& from, const Variable& to) {
    edges_.emplace(from, to);
  }
  bool has_edge(const Variable& from, const Variable& to) const {
    return edges_.count({from, to}) != 0;
  }
  const std::set<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

  VarSet nodes() const {
    VarSet ns;
    for (const auto& [from, to] : edges_) {
      ns.insert(from);
      ns.insert(to);
    }
    return ns;
  }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::set<Edge> edges_;
};

// Y(F): an edge from every body variable to the head, one per clause.
inline DirectedGraph syntactic_graph(const Formula& f) {
  DirectedGraph g;
  for (const Clause& c : f.clauses())
    for (const Variable& v : c.body()) g.add_edge(v, c.head());
  return g;
}

// Edges y->x for every path of length >= 1. A self edge y->y appears only
// when some cycle passes through y.
inline DirectedGraph transitive_closure(const DirectedGraph& g) {
  std::map<Variable, std::vector<Variable>> succ;
  for (const auto& [from, to] : g.edges()) succ[from].push_back(to);

  DirectedGraph closure;
  for (const Variable& start : g.nodes()) {
    std::set<Variable> seen;
    std::vector<Variable> frontier;
    for (const Variable& next : succ[start]) {
      if (seen.insert(next).second) frontier.push_back(next);
    }
    while (!frontier.empty()) {
      Variable v = frontier.back();
      frontier.pop_back();
      closure.add_edge(start, v);
      for (const Variable& next : succ[v])
        if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return closure;
}

// A nontrivial cycle visits at least two distinct nodes: two different
// nodes, each reachable from the other.
inline bool has_nontrivial_cycle(const DirectedGraph& g) {
  DirectedGraph closure = transitive_closure(g);
  for (const auto& [from, to] : closure.edges())
    if (from != to && closure.has_edge(to, from)) return true;
  return false;
}

inline std::string to_dot(const DirectedGraph& g) {
  std::string out = "digraph {\n";
  for (const auto& [from, to] : g.edges())
    out += "  " + from.name() + " -> " + to.name() + ";\n";
  out += "}\n";
  return out;
}

}  // namespace singlehead
