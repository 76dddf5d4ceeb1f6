#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "core/graph.hpp"
#include "doctest.h"

using namespace tricolor;

namespace {

Graph c5() { return Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Graph k4() { return Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("from_edges builds sorted labels and symmetric adjacency") {
  Graph g = Graph::from_edges({{3, 1}, {1, 0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.labels() == std::vector<int>{0, 1, 3});
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(3, 1));
  CHECK(!g.adjacent(0, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 3});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
}

TEST_CASE("extra labels add isolated vertices") {
  Graph g = Graph::from_edges({{0, 1}}, {5});
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_vertex(5));
  CHECK(g.degree(5) == 0);
  CHECK(!g.is_connected());
}

TEST_CASE("input validation") {
  CHECK_THROWS_WITH_AS(Graph::from_edges({{2, 2}}), doctest::Contains("self-loop"), Error);
  CHECK_THROWS_AS(Graph::from_edges({{0, 1}, {1, 0}}), Error);
  try {
    Graph::from_edges({{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_simple);
  }
  try {
    Graph::from_edges({{-1, 0}});
  } catch (const Error& e) {
    CHECK(e.code == Errc::unknown_vertex);
  }
  // 65 labels exceed the vertex cap
  std::vector<std::pair<int, int>> path;
  for (int i = 0; i < 64; ++i) path.emplace_back(i, i + 1);
  try {
    Graph::from_edges(path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::cap_exceeded);
  }
}

TEST_CASE("from_text parses one edge per line") {
  Graph g = Graph::from_text("0 1\n\n1 2\n2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  try {
    Graph::from_text("0 1 2\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("triangles are sorted triples in lexicographic order") {
  CHECK(k4().triangles() ==
        std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(k4().triangle_count() == 4);
  CHECK(c5().triangle_count() == 0);
  Graph diamond = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(diamond.triangles() == std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}});
}

TEST_CASE("connectivity") {
  CHECK(c5().is_connected());
  CHECK(Graph::from_edges({}, {7}).is_connected());  // single vertex
  CHECK(!Graph::from_edges({{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("index view round-trips labels") {
  Graph g = Graph::from_edges({{2, 9}, {9, 40}});
  CHECK(g.index_of(2) == 0);
  CHECK(g.index_of(9) == 1);
  CHECK(g.index_of(40) == 2);
  CHECK(g.label_at(2) == 40);
  CHECK((g.row(1) & 1) != 0);  // 9 ~ 2
  try {
    g.index_of(5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::unknown_vertex);
  }
}

TEST_CASE("max_degree and equality") {
  CHECK(k4().max_degree() == 3);
  CHECK(c5().max_degree() == 2);
  CHECK(c5() == c5());
  CHECK(!(c5() == k4()));
}

TEST_CASE("label_set_text formats sorted label sets") {
  CHECK(label_set_text({0, 2, 5}) == "{0, 2, 5}");
  CHECK(label_set_text({}) == "{}");
}
