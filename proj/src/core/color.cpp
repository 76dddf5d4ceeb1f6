#include "core/color.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace tricolor {

ConstraintSet& ConstraintSet::fix(int v, int c) {
  fixed[v] = c;
  return *this;
}
ConstraintSet& ConstraintSet::equal(int u, int v) {
  equal_pairs.insert(std::minmax(u, v));
  return *this;
}
ConstraintSet& ConstraintSet::distinct(int u, int v) {
  distinct_pairs.insert(std::minmax(u, v));
  return *this;
}

std::string ConstraintSet::to_text() const {
  std::string s;
  auto sep = [&] {
    if (!s.empty()) s += ";";
  };
  for (auto [v, c] : fixed) {
    sep();
    s += "fix:" + std::to_string(v) + "=" + std::to_string(c);
  }
  for (auto [u, v] : equal_pairs) {
    sep();
    s += "eq:" + std::to_string(u) + "," + std::to_string(v);
  }
  for (auto [u, v] : distinct_pairs) {
    sep();
    s += "ne:" + std::to_string(u) + "," + std::to_string(v);
  }
  return s.empty() ? "-" : s;
}

int Coloring::at(int v) const {
  auto it = map.find(v);
  if (it == map.end()) fail(Errc::unknown_vertex, "no color for vertex " + std::to_string(v));
  return it->second;
}

namespace {

// Union-find over vertex indices for the equal_pairs quotient.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);  // keep smallest as root
  }
};

}  // namespace

void validate_constraints(const Graph& g, const ConstraintSet& cs) {
  for (auto [v, c] : cs.fixed) {
    if (!g.has_vertex(v))
      fail(Errc::invalid_constraints, "fixed color on unknown vertex " + std::to_string(v));
    if (c < 1 || c > 3)
      fail(Errc::invalid_constraints, "color " + std::to_string(c) + " out of range 1..3");
  }
  auto check_pair = [&](std::pair<int, int> p, const char* kind) {
    if (p.first == p.second)
      fail(Errc::invalid_constraints, std::string(kind) + " pair with equal endpoints");
    if (!g.has_vertex(p.first) || !g.has_vertex(p.second))
      fail(Errc::invalid_constraints, std::string(kind) + " pair on unknown vertex");
  };
  for (auto p : cs.equal_pairs) check_pair(p, "equal");
  for (auto p : cs.distinct_pairs) check_pair(p, "distinct");
  for (auto p : cs.equal_pairs)
    if (cs.distinct_pairs.count(p))
      fail(Errc::invalid_constraints, "pair listed as both equal and distinct");

  // Fixed colors must be consistent across equal-classes and across distinct
  // pairs; propagate through the union-find.
  Dsu dsu(g.vertex_count());
  for (auto [u, v] : cs.equal_pairs) dsu.unite(g.index_of(u), g.index_of(v));
  std::map<int, int> class_color;
  for (auto [v, c] : cs.fixed) {
    int root = dsu.find(g.index_of(v));
    auto [it, fresh] = class_color.insert({root, c});
    if (!fresh && it->second != c)
      fail(Errc::invalid_constraints, "equal-class carries two fixed colors");
  }
  for (auto [u, v] : cs.distinct_pairs) {
    int ru = dsu.find(g.index_of(u)), rv = dsu.find(g.index_of(v));
    if (ru == rv)
      fail(Errc::invalid_constraints, "distinct pair merged by equal constraints");
    auto iu = class_color.find(ru), iv = class_color.find(rv);
    if (iu != class_color.end() && iv != class_color.end() && iu->second == iv->second)
      fail(Errc::invalid_constraints, "distinct pair fixed to one color");
  }
}

namespace {

// Backtracking 3-coloring of the quotient graph. Classes are colored in
// DSATUR order (most distinctly-colored neighbors first, smallest class id
// as tie-break), values tried ascending, so the found coloring is a
// deterministic function of the instance.
struct Solver3 {
  int n = 0;                   // class count
  std::vector<uint64_t> adj;   // quotient adjacency (distinct pairs included)
  std::vector<int> color;      // 0 = unset

  bool run(int colored) {
    if (colored == n) return true;
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v]) continue;
      unsigned mask = 0;
      uint64_t r = adj[v];
      while (r) {
        int w = std::countr_zero(r);
        r &= r - 1;
        if (color[w]) mask |= 1u << (color[w] - 1);
      }
      int sat = std::popcount(mask);
      if (sat == 3) return false;  // wiped-out class: prune immediately
      if (sat > pick_sat) {
        pick = v;
        pick_sat = sat;
      }
    }
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      uint64_t r = adj[pick];
      while (r && ok) {
        int w = std::countr_zero(r);
        r &= r - 1;
        if (color[w] == c) ok = false;
      }
      if (!ok) continue;
      color[pick] = c;
      if (run(colored + 1)) return true;
      color[pick] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> solve(const Graph& g, const ConstraintSet& cs) {
  validate_constraints(g, cs);
  const int n = g.vertex_count();
  if (n == 0) return Coloring{};

  Dsu dsu(n);
  for (auto [u, v] : cs.equal_pairs) dsu.unite(g.index_of(u), g.index_of(v));
  // Class ids: roots compressed to 0..k-1 in ascending root order.
  std::vector<int> root_of(n), class_id(n, -1);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    root_of[i] = dsu.find(i);
    if (root_of[i] == i) {
      class_id[i] = static_cast<int>(roots.size());
      roots.push_back(i);
    }
  }
  const int k = static_cast<int>(roots.size());

  Solver3 sv;
  sv.n = k;
  sv.adj.assign(k, 0);
  sv.color.assign(k, 0);

  for (int i = 0; i < n; ++i) {
    int ci = class_id[root_of[i]];
    uint64_t r = g.row(i);
    while (r) {
      int j = std::countr_zero(r);
      r &= r - 1;
      int cj = class_id[root_of[j]];
      if (ci == cj) return std::nullopt;  // edge inside an equal-class
      sv.adj[ci] |= 1ull << cj;
      sv.adj[cj] |= 1ull << ci;
    }
  }
  for (auto [u, v] : cs.distinct_pairs) {
    int cu = class_id[root_of[g.index_of(u)]], cv = class_id[root_of[g.index_of(v)]];
    sv.adj[cu] |= 1ull << cv;
    sv.adj[cv] |= 1ull << cu;
  }
  int precolored = 0;
  for (auto [v, c] : cs.fixed) {
    int cv = class_id[root_of[g.index_of(v)]];
    if (sv.color[cv] && sv.color[cv] != c) return std::nullopt;
    if (!sv.color[cv]) ++precolored;
    sv.color[cv] = c;
  }
  // Conflicts among pre-colored classes end the search before it starts.
  for (int v = 0; v < k; ++v) {
    if (!sv.color[v]) continue;
    uint64_t r = sv.adj[v];
    while (r) {
      int w = std::countr_zero(r);
      r &= r - 1;
      if (sv.color[w] == sv.color[v]) return std::nullopt;
    }
  }

  if (!sv.run(precolored)) return std::nullopt;

  Coloring col;
  for (int i = 0; i < n; ++i) col.map[g.label_at(i)] = sv.color[class_id[root_of[i]]];
  assert(verify_coloring(g, cs, col));
  return col;
}

bool verify_coloring(const Graph& g, const ConstraintSet& cs, const Coloring& col) {
  for (int v : g.labels()) {
    auto it = col.map.find(v);
    if (it == col.map.end() || it->second < 1 || it->second > 3) return false;
  }
  for (auto [u, v] : g.edges())
    if (col.at(u) == col.at(v)) return false;
  for (auto [v, c] : cs.fixed)
    if (col.at(v) != c) return false;
  for (auto [u, v] : cs.equal_pairs)
    if (col.at(u) != col.at(v)) return false;
  for (auto [u, v] : cs.distinct_pairs)
    if (col.at(u) == col.at(v)) return false;
  return true;
}

namespace {

// k-colorability with value-symmetry breaking: a new color may be opened
// only as (max used so far) + 1. Vertices in dynamic most-constrained order.
bool k_colorable(const Graph& g, int k, std::vector<int>& color, int colored, int max_used) {
  const int n = g.vertex_count();
  if (colored == n) return true;
  int pick = -1, pick_sat = -1, pick_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (color[v]) continue;
    uint64_t mask = 0;
    uint64_t r = g.row(v);
    while (r) {
      int w = std::countr_zero(r);
      r &= r - 1;
      if (color[w]) mask |= 1ull << color[w];
    }
    int sat = std::popcount(mask);
    int deg = std::popcount(g.row(v));
    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = deg;
    }
  }
  int limit = std::min(k, max_used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    uint64_t r = g.row(pick);
    while (r && ok) {
      int w = std::countr_zero(r);
      r &= r - 1;
      if (color[w] == c) ok = false;
    }
    if (!ok) continue;
    color[pick] = c;
    if (k_colorable(g, k, color, colored + 1, std::max(max_used, c))) return true;
    color[pick] = 0;
  }
  return false;
}

bool k_colorable(const Graph& g, int k) {
  if (g.vertex_count() == 0) return true;
  if (k <= 0) return false;
  std::vector<int> color(g.vertex_count(), 0);
  return k_colorable(g, k, color, 0, 0);
}

Graph delete_vertex_raw(const Graph& g, int label) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> keep;
  for (int l : g.labels())
    if (l != label) keep.push_back(l);
  for (auto [u, v] : g.edges())
    if (u != label && v != label) edges.emplace_back(u, v);
  return Graph::from_edges(edges, keep);
}

Graph delete_edge_raw(const Graph& g, int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (!(u == a && v == b) && !(u == b && v == a)) edges.emplace_back(u, v);
  return Graph::from_edges(edges, g.labels());
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1; k <= g.vertex_count(); ++k)
    if (k_colorable(g, k)) return k;
  fail(Errc::internal, "chromatic number exceeded vertex count");
}

bool is_k_critical(const Graph& g, int k) {
  if (g.vertex_count() == 0) return false;
  if (!k_colorable(g, k) || k_colorable(g, k - 1)) return false;
  for (int v : g.labels())
    if (!k_colorable(delete_vertex_raw(g, v), k - 1)) return false;
  for (auto [u, v] : g.edges())
    if (!k_colorable(delete_edge_raw(g, u, v), k - 1)) return false;
  return true;
}

}  // namespace tricolor
