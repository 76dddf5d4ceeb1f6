#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "core/catalog.hpp"
#include "core/color.hpp"
#include "core/surgery.hpp"
#include "doctest.h"

using namespace tricolor;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(e);
}
Graph cube() {
  return Graph::from_edges({{0, 1},
                            {0, 2},
                            {0, 4},
                            {1, 3},
                            {1, 5},
                            {2, 3},
                            {2, 6},
                            {3, 7},
                            {4, 5},
                            {4, 6},
                            {5, 7},
                            {6, 7}});
}

}  // namespace

TEST_CASE("identify merges a non-adjacent pair into the smaller label") {
  Graph p3 = Graph::from_edges({{0, 1}, {1, 2}});
  Identification info{};
  Graph merged = identify(p3, 0, 2, &info);
  CHECK(merged.vertex_count() == 2);
  CHECK(merged.edge_count() == 1);
  CHECK(merged.adjacent(0, 1));
  CHECK(info.u == 0);
  CHECK(info.v == 2);
  CHECK(info.merged == 0);

  // Parallel edges from the merge collapse to one.
  Graph c4m = identify(cycle(4), 0, 2);
  CHECK(c4m.vertex_count() == 3);
  CHECK(c4m.edge_count() == 2);
  CHECK(c4m.adjacent(0, 1));
  CHECK(c4m.adjacent(0, 3));

  try {
    identify(cycle(4), 0, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::adjacent_pair);
  }
  try {
    identify(cycle(4), 0, 9);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::unknown_vertex);
  }
}

TEST_CASE("closed-neighborhood contraction") {
  // Star K1,3: the whole graph collapses to a single vertex.
  Graph star = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}});
  int merged = -1;
  Graph c = contract_closed_neighborhood(star, 0, &merged);
  CHECK(c.vertex_count() == 1);
  CHECK(c.edge_count() == 0);
  CHECK(merged == 0);

  // Cube: contracting N[0] gives 5 vertices and 6 edges.
  Graph q = contract_closed_neighborhood(cube(), 0);
  CHECK(q.vertex_count() == 5);
  CHECK(q.edge_count() == 6);

  try {
    contract_closed_neighborhood(cycle(4), 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::wrong_degree);
  }
  Graph k4 = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  try {
    contract_closed_neighborhood(k4, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::neighborhood_not_independent);
  }
}

TEST_CASE("contraction is sound for mono precolorings") {
  // A coloring of the contraction with the merged vertex's color lifts to a
  // coloring with a monochromatic neighborhood, and conversely.
  Graph g = cube();
  int merged = -1;
  Graph c = contract_closed_neighborhood(g, 0, &merged);
  for (int color = 1; color <= 3; ++color) {
    ConstraintSet mono;
    for (int v : g.neighbors(0)) mono.fix(v, color);
    bool orig = solve(g, mono).has_value();
    bool small = solve(c, ConstraintSet{}.fix(merged, color)).has_value();
    CHECK(orig == small);
  }
}

TEST_CASE("dhgo composition of two K4 copies") {
  Graph k4 = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  DhgoSpec spec{0, 1, 0, {1}};
  Graph o = dhgo_compose(k4, k4, spec);
  CHECK(o.vertex_count() == 7);
  CHECK(o.edge_count() == 11);
  CHECK(!o.adjacent(0, 1));  // the deleted edge stays deleted
  CHECK(is_k_critical(o, 4));
  CHECK(3 * o.edge_count() == 5 * o.vertex_count() - 2);
  CHECK(o.triangle_count() >= 4);

  // part1 size 2 gives the same graph up to isomorphism.
  Graph o2 = dhgo_compose(k4, k4, DhgoSpec{0, 1, 0, {2, 3}});
  CHECK(is_isomorphic(o, o2));
}

TEST_CASE("dhgo spec validation") {
  Graph k4 = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto code_of = [&](const DhgoSpec& s) {
    try {
      dhgo_compose(k4, k4, s);
      return Errc::ok;
    } catch (const Error& e) {
      return e.code;
    }
  };
  CHECK(code_of({0, 1, 0, {}}) == Errc::invalid_spec);            // empty part
  CHECK(code_of({0, 1, 0, {1, 2, 3}}) == Errc::invalid_spec);     // not proper
  CHECK(code_of({0, 1, 0, {1, 1}}) == Errc::invalid_spec);        // duplicate
  CHECK(code_of({0, 1, 0, {9}}) == Errc::invalid_spec);           // not a neighbor
  CHECK(code_of({0, 1, 9, {1}}) == Errc::unknown_vertex);
  CHECK(code_of({9, 1, 0, {1}}) == Errc::unknown_vertex);
  Graph c4 = cycle(4);
  try {
    dhgo_compose(c4, k4, {0, 2, 0, {1}});  // 0-2 is not an edge of C4
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::unknown_edge);
  }
}

TEST_CASE("K4-prime recognition") {
  Graph k4p = make_k4prime();
  auto occ = find_k4prime(k4p);
  REQUIRE(occ.has_value());
  CHECK(occ->apex == 0);
  CHECK(occ->mids == std::array<int, 3>{1, 2, 3});
  CHECK(occ->triangle == std::array<int, 3>{4, 5, 6});
  // Structure: apex ~ mids, mid i ~ triangle i, triangle is a triangle.
  const Graph& g = k4p;
  for (int i = 0; i < 3; ++i) {
    CHECK(g.adjacent(occ->apex, occ->mids[i]));
    CHECK(g.adjacent(occ->mids[i], occ->triangle[i]));
  }
  CHECK(g.adjacent(4, 5));
  CHECK(g.adjacent(5, 6));
  CHECK(g.adjacent(4, 6));

  CHECK(k4prime_apexes(k4p) == std::vector<int>{0});
  CHECK(!find_k4prime(cube()).has_value());
  CHECK(!find_k4prime(make_k4()).has_value());
  CHECK(k4prime_apexes(cycle(5)).empty());

  // Occurrence inside a larger host: K4' plus extra edges on non-apex
  // vertices keeps the occurrence; an extra edge at the apex kills it.
  auto host = k4p.edges();
  host.emplace_back(4, 7);
  CHECK(find_k4prime(Graph::from_edges(host)).has_value());
  auto blocked = k4p.edges();
  blocked.emplace_back(0, 7);
  CHECK(!find_k4prime(Graph::from_edges(blocked)).has_value());
}

TEST_CASE("edge and vertex edits") {
  Graph g = cycle(4);
  Graph plus = add_edge(g, 0, 2);
  CHECK(plus.edge_count() == 5);
  try {
    add_edge(g, 0, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::edge_exists);
  }
  try {
    add_edge(g, 2, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_simple);
  }

  Graph minus = delete_edge(plus, 0, 2);
  CHECK(minus == g);
  try {
    delete_edge(g, 0, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::unknown_edge);
  }

  Graph del = delete_vertex(g, 0);
  CHECK(del.vertex_count() == 3);
  CHECK(del.edge_count() == 2);
  try {
    delete_vertex(g, 9);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::unknown_vertex);
  }
}

TEST_CASE("split_vertex covers the neighborhood with two adjacent copies") {
  // Split the cube's vertex 0 (neighbors 1, 2, 4) with overlapping covers.
  Graph g = cube();
  int z1 = -1, z2 = -1;
  Graph s = split_vertex(g, 0, {1, 2}, {2, 4}, &z1, &z2);
  CHECK(s.vertex_count() == 9);
  CHECK(z1 == 0);
  CHECK(s.has_vertex(z2));
  CHECK(s.adjacent(z1, z2));
  CHECK(s.adjacent(z1, 1));
  CHECK(s.adjacent(z1, 2));
  CHECK(!s.adjacent(z1, 4));
  CHECK(s.adjacent(z2, 2));
  CHECK(s.adjacent(z2, 4));

  // Identical covers duplicate the vertex; the d-2 adynamic device.
  Graph t = split_vertex(g, 0, {1, 2, 4}, {1, 2, 4});
  CHECK(t.vertex_count() == 9);
  CHECK(t.edge_count() == 12 + 4);

  auto code_of = [&](const std::vector<int>& a, const std::vector<int>& b) {
    try {
      split_vertex(g, 0, a, b);
      return Errc::ok;
    } catch (const Error& e) {
      return e.code;
    }
  };
  CHECK(code_of({1}, {2}) == Errc::invalid_split);      // union misses 4
  CHECK(code_of({1, 2, 4, 5}, {4}) == Errc::invalid_split);  // 5 not a neighbor
  try {
    split_vertex(g, 9, {1}, {2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::unknown_vertex);
  }
}

TEST_CASE("split_vertex is the equisatisfiable adynamic device for 2-vertices") {
  // For a degree-2 vertex u with non-adjacent neighbors, G has a proper
  // coloring with N(u) monochromatic iff the doubled graph is colorable.
  Graph g = cycle(6);
  for (int u : g.labels()) {
    auto nb = g.neighbors(u);
    Graph doubled = split_vertex(g, u, nb, nb);
    ConstraintSet mono;
    mono.equal(nb[0], nb[1]);
    CHECK(solve(g, mono).has_value() == solve(doubled).has_value());
  }
}
