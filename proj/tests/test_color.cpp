#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>

#include "core/catalog.hpp"
#include "core/color.hpp"
#include "doctest.h"

using namespace tricolor;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(e);
}
Graph k4() { return Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph wheel5() {  // hub 5 on rim C5: 4-chromatic and 4-critical
  auto e = cycle(5).edges();
  for (int i = 0; i < 5; ++i) e.emplace_back(i, 5);
  return Graph::from_edges(e);
}

// Reference satisfiability: try all 3^n assignments.
bool brute_sat(const Graph& g, const ConstraintSet& cs) {
  const auto& labels = g.labels();
  int n = g.vertex_count();
  std::vector<int> c(n, 1);
  for (;;) {
    Coloring col;
    for (int i = 0; i < n; ++i) col.map[labels[i]] = c[i];
    if (verify_coloring(g, cs, col)) return true;
    int i = 0;
    while (i < n && c[i] == 3) c[i++] = 1;
    if (i == n) return false;
    ++c[i];
  }
}

}  // namespace

TEST_CASE("constraint text") {
  ConstraintSet cs;
  CHECK(cs.to_text() == "-");
  cs.fix(2, 3).fix(0, 1).equal(5, 4).distinct(1, 2);
  CHECK(cs.to_text() == "fix:0=1;fix:2=3;eq:4,5;ne:1,2");
}

TEST_CASE("constraint validation") {
  Graph g = cycle(4);
  auto code_of = [&](const ConstraintSet& cs) {
    try {
      validate_constraints(g, cs);
      return Errc::ok;
    } catch (const Error& e) {
      return e.code;
    }
  };
  CHECK(code_of(ConstraintSet{}.fix(0, 1).equal(1, 3)) == Errc::ok);
  CHECK(code_of(ConstraintSet{}.fix(0, 4)) == Errc::invalid_constraints);
  CHECK(code_of(ConstraintSet{}.fix(9, 1)) == Errc::invalid_constraints);
  CHECK(code_of(ConstraintSet{}.equal(0, 9)) == Errc::invalid_constraints);
  CHECK(code_of(ConstraintSet{}.equal(1, 1)) == Errc::invalid_constraints);
  CHECK(code_of(ConstraintSet{}.equal(0, 2).distinct(2, 0)) == Errc::invalid_constraints);
  CHECK(code_of(ConstraintSet{}.equal(0, 2).fix(0, 1).fix(2, 2)) == Errc::invalid_constraints);
  CHECK(code_of(ConstraintSet{}.distinct(0, 2).fix(0, 1).fix(2, 1)) == Errc::invalid_constraints);
}

TEST_CASE("solver verdicts on named graphs") {
  CHECK(solve(cycle(5)).has_value());
  CHECK(solve(cycle(4)).has_value());
  CHECK(!solve(k4()).has_value());
  CHECK(!solve(wheel5()).has_value());

  auto col = solve(cycle(5));
  REQUIRE(col.has_value());
  CHECK(verify_coloring(cycle(5), {}, *col));
}

TEST_CASE("solver honors constraints") {
  Graph g = cycle(5);
  ConstraintSet cs;
  cs.fix(0, 1).fix(2, 2).distinct(1, 3);
  auto col = solve(g, cs);
  REQUIRE(col.has_value());
  CHECK(verify_coloring(g, cs, *col));
  CHECK(col->at(0) == 1);
  CHECK(col->at(2) == 2);
  CHECK(col->at(1) != col->at(3));

  // Equal colors across a triangle edge: unsatisfiable.
  Graph tri = cycle(3);
  CHECK(!solve(tri, ConstraintSet{}.equal(0, 1)).has_value());
  // Equal chain around an odd cycle is fine when not adjacent.
  CHECK(solve(g, ConstraintSet{}.equal(0, 2).equal(2, 4)).has_value() == false);
  // 0,2,4 pairwise... 4 and 0 are adjacent in C5, so the chain forces an
  // adjacent equal pair; double-check against brute force.
  CHECK(!brute_sat(g, ConstraintSet{}.equal(0, 2).equal(2, 4)));
}

TEST_CASE("invalid constraints throw instead of returning UNSAT") {
  try {
    solve(cycle(4), ConstraintSet{}.fix(0, 5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::invalid_constraints);
  }
}

TEST_CASE("verify_coloring rejects bad colorings") {
  Graph g = cycle(4);
  Coloring good;
  good.map = {{0, 1}, {1, 2}, {2, 1}, {3, 2}};
  CHECK(verify_coloring(g, {}, good));

  Coloring improper = good;
  improper.map[1] = 1;
  CHECK(!verify_coloring(g, {}, improper));

  Coloring partial = good;
  partial.map.erase(3);
  CHECK(!verify_coloring(g, {}, partial));

  Coloring wild = good;
  wild.map[0] = 4;
  CHECK(!verify_coloring(g, {}, wild));

  CHECK(!verify_coloring(g, ConstraintSet{}.fix(0, 2), good));
  CHECK(!verify_coloring(g, ConstraintSet{}.equal(0, 1), good));
  CHECK(!verify_coloring(g, ConstraintSet{}.distinct(0, 2), good));
  CHECK(verify_coloring(g, ConstraintSet{}.equal(0, 2).distinct(0, 1), good));
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(Graph::from_edges({}, {0})) == 1);
  CHECK(chromatic_number(Graph::from_edges({{0, 1}})) == 2);
  CHECK(chromatic_number(cycle(4)) == 2);
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(k4()) == 4);
  CHECK(chromatic_number(wheel5()) == 4);
}

TEST_CASE("criticality") {
  CHECK(is_k_critical(k4(), 4));
  CHECK(is_k_critical(wheel5(), 4));
  CHECK(is_k_critical(cycle(5), 3));
  CHECK(is_k_critical(cycle(3), 3));
  CHECK(!is_k_critical(cycle(6), 3));
  CHECK(!is_k_critical(cycle(5), 4));
  // K4 plus a pendant vertex is 4-chromatic but not critical.
  auto e = k4().edges();
  e.emplace_back(3, 4);
  CHECK(!is_k_critical(Graph::from_edges(e), 4));
}

TEST_CASE("solver agrees with brute force on every small connected graph") {
  ConstraintSet empty;
  ConstraintSet fixed = ConstraintSet{}.fix(0, 1);
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_level(n)) {
      CHECK(solve(g, empty).has_value() == brute_sat(g, empty));
      CHECK(solve(g, fixed).has_value() == brute_sat(g, fixed));
      ConstraintSet pair = ConstraintSet{}.equal(0, g.labels().back());
      if (g.labels().back() != 0 && !g.adjacent(0, g.labels().back()))
        CHECK(solve(g, pair).has_value() == brute_sat(g, pair));
    }
  }
}

TEST_CASE("solver is deterministic") {
  Graph g = cycle(7);
  auto a = solve(g, ConstraintSet{}.fix(0, 2));
  auto b = solve(g, ConstraintSet{}.fix(0, 2));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->map == b->map);
}
