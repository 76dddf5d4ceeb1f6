#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "core/plane.hpp"
#include "doctest.h"

using namespace tricolor;

namespace {

Graph k4() { return Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph k5() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  return Graph::from_edges(e);
}
Graph k33() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
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
// Square 0-1-2-3 with both "poles" 4 and 5 adjacent to all four corners.
Graph octahedron() {
  return Graph::from_edges({{0, 1},
                            {1, 2},
                            {2, 3},
                            {3, 0},
                            {4, 0},
                            {4, 1},
                            {4, 2},
                            {4, 3},
                            {5, 0},
                            {5, 1},
                            {5, 2},
                            {5, 3}});
}

}  // namespace

TEST_CASE("planarity verdicts") {
  CHECK(PlaneGraph::is_planar(k4()));
  CHECK(PlaneGraph::is_planar(cube()));
  CHECK(PlaneGraph::is_planar(octahedron()));
  CHECK(!PlaneGraph::is_planar(k5()));
  CHECK(!PlaneGraph::is_planar(k33()));
  try {
    PlaneGraph::embed(k5());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::non_planar);
  }
  try {
    PlaneGraph::embed(Graph::from_edges({{0, 1}, {2, 3}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::disconnected);
  }
}

TEST_CASE("embeddings satisfy Euler's formula with the right face lengths") {
  PlaneGraph pk4 = PlaneGraph::embed(k4());
  CHECK(pk4.face_count() == 4);
  CHECK(pk4.face_length_census() == std::map<int, int>{{3, 4}});

  PlaneGraph pc5 = PlaneGraph::embed(Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  CHECK(pc5.face_count() == 2);
  CHECK(pc5.face_length_census() == std::map<int, int>{{5, 2}});

  PlaneGraph pq3 = PlaneGraph::embed(cube());
  CHECK(pq3.face_count() == 6);
  CHECK(pq3.face_length_census() == std::map<int, int>{{4, 6}});

  PlaneGraph poct = PlaneGraph::embed(octahedron());
  CHECK(poct.face_count() == 8);
  CHECK(poct.face_length_census() == std::map<int, int>{{3, 8}});
}

TEST_CASE("trees and cut vertices give non-simple face walks") {
  // P3: single face of length 4 walking the path both ways.
  PlaneGraph p = PlaneGraph::embed(Graph::from_edges({{0, 1}, {1, 2}}));
  CHECK(p.face_count() == 1);
  CHECK(p.faces()[0].length() == 4);
  CHECK(!p.faces()[0].is_simple_cycle());
  CHECK(p.faces()[0].contains(2));
  CHECK(!p.faces()[0].contains(7));
  CHECK(p.simple_faces_of_length(4).empty());
}

TEST_CASE("rotation adoption checks Euler") {
  Graph g = k4();
  PlaneGraph base = PlaneGraph::embed(g);
  // Re-adopting the embedding's own rotation reproduces its faces.
  PlaneGraph again = PlaneGraph::from_rotation(g, base.rotation());
  CHECK(again.face_count() == 4);

  // Over all 16 orientation choices (each vertex's cyclic order or its
  // reverse), planar and toroidal rotation systems both occur.
  int planar = 0, rejected = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<int>> rot = base.rotation();
    for (int v = 0; v < 4; ++v)
      if (mask & (1 << v)) std::reverse(rot[v].begin(), rot[v].end());
    try {
      PlaneGraph::from_rotation(g, rot);
      ++planar;
    } catch (const Error& e) {
      CHECK(e.code == Errc::non_planar);
      ++rejected;
    }
  }
  CHECK(planar + rejected == 16);
  CHECK(planar > 0);
  CHECK(rejected > 0);
}

TEST_CASE("facial cycle recognition is rotation- and reflection-invariant") {
  PlaneGraph p = PlaneGraph::embed(k4());
  CHECK(p.is_facial_cycle({0, 1, 2}));
  CHECK(p.is_facial_cycle({1, 2, 0}));
  CHECK(p.is_facial_cycle({2, 1, 0}));
  CHECK(!p.is_facial_cycle({0, 1}));      // not a cycle
  CHECK(!p.is_facial_cycle({0, 1, 5}));   // unknown vertex

  PlaneGraph poct = PlaneGraph::embed(octahedron());
  // 0-4-2-5 is a simple cycle of the octahedron but never a face (all faces
  // are triangles).
  CHECK(!poct.is_facial_cycle({0, 4, 2, 5}));
}

TEST_CASE("split_by_cycle separates the octahedron square") {
  PlaneGraph p = PlaneGraph::embed(octahedron());
  CycleSplit s = p.split_by_cycle({0, 1, 2, 3});
  CHECK(s.separating());
  std::set<int> far(s.interior.begin(), s.interior.end());
  far.insert(s.exterior.begin(), s.exterior.end());
  CHECK(far == std::set<int>{4, 5});
  CHECK(s.interior.size() == 1);
  CHECK(s.exterior.size() == 1);

  // Reversing the cycle swaps the sides.
  CycleSplit r = p.split_by_cycle({3, 2, 1, 0});
  CHECK(r.interior == s.exterior);
  CHECK(r.exterior == s.interior);

  try {
    p.split_by_cycle({0, 1, 2});  // 0-2 is not an edge
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_a_cycle);
  }
}

TEST_CASE("side_subgraph keeps the cycle plus one side") {
  PlaneGraph p = PlaneGraph::embed(octahedron());
  CycleSplit s = p.split_by_cycle({0, 1, 2, 3});
  for (CycleSide side : {CycleSide::interior, CycleSide::exterior}) {
    PlaneGraph sub = p.side_subgraph({0, 1, 2, 3}, side);
    // Wheel: square + one pole.
    CHECK(sub.graph().vertex_count() == 5);
    CHECK(sub.graph().edge_count() == 8);
    int pole = side == CycleSide::interior ? s.interior[0] : s.exterior[0];
    CHECK(sub.graph().has_vertex(pole));
    CHECK(sub.graph().degree(pole) == 4);
  }
}

TEST_CASE("non-separating cycles split with one empty side") {
  PlaneGraph p = PlaneGraph::embed(k4());
  CycleSplit s = p.split_by_cycle({0, 1, 2});
  CHECK(!s.separating());
  std::set<int> all(s.interior.begin(), s.interior.end());
  all.insert(s.exterior.begin(), s.exterior.end());
  CHECK(all == std::set<int>{3});
}

TEST_CASE("embedding determinism") {
  PlaneGraph a = PlaneGraph::embed(cube());
  PlaneGraph b = PlaneGraph::embed(cube());
  CHECK(a.rotation() == b.rotation());
}
