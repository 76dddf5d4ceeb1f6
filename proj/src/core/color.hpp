#pragma once
// Exact 3-coloring with precoloring constraints, plus the chromatic-number
// and criticality probes used by the bound audits. Colors are 1..3.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace tricolor {

struct ConstraintSet {
  std::map<int, int> fixed;                    // vertex -> color in {1,2,3}
  std::set<std::pair<int, int>> equal_pairs;   // stored with u < v
  std::set<std::pair<int, int>> distinct_pairs;

  ConstraintSet& fix(int v, int c);
  ConstraintSet& equal(int u, int v);
  ConstraintSet& distinct(int u, int v);
  bool empty() const { return fixed.empty() && equal_pairs.empty() && distinct_pairs.empty(); }
  // "fix:v=c;eq:u,v;ne:u,v" in sorted order; "-" when empty.
  std::string to_text() const;
};

// invalid_constraints unless: all vertices exist, colors are 1..3, pairs have
// distinct existing endpoints, no pair appears in both sets, and no fixed
// colors contradict through equal/distinct pairs.
void validate_constraints(const Graph& g, const ConstraintSet& cs);

struct Coloring {
  std::map<int, int> map;  // total: every vertex of the graph
  int at(int v) const;
};

// Deterministic exact solver (DSATUR-ordered backtracking over the quotient
// by equal_pairs). nullopt = no proper 3-coloring meets the constraints.
std::optional<Coloring> solve(const Graph& g, const ConstraintSet& cs = {});

// True iff col is total, proper, uses colors 1..3, and meets cs.
bool verify_coloring(const Graph& g, const ConstraintSet& cs, const Coloring& col);

int chromatic_number(const Graph& g);  // exact, small graphs

// G is k-critical: chi(G) = k and every proper subgraph is (k-1)-colorable
// (equivalently: every vertex- and edge-deleted subgraph).
bool is_k_critical(const Graph& g, int k);

}  // namespace tricolor
