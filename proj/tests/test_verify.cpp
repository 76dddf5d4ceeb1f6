#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdio>
#include <set>

#include "core/surgery.hpp"
#include "core/verify.hpp"
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
Graph diamond() {  // K4 minus an edge
  return Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}
Graph wheel(int rim) {  // rim cycle 0..rim-1, hub = rim
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return Graph::from_edges(e);
}
Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(e);
}

Report run(const Graph& g, TheoremId t) { return check_theorem_graph(g, t); }

}  // namespace

TEST_CASE("theorem names round-trip and reject unknowns") {
  REQUIRE(kAllTheorems.size() == 9);
  std::set<std::string> seen;
  for (TheoremId t : kAllTheorems) {
    std::string name = theorem_name(t);
    CHECK(theorem_from_name(name) == t);
    seen.insert(name);
  }
  CHECK(seen.size() == 9);
  CHECK(seen.count("T6_pair"));
  CHECK(seen.count("T8_add3vertex"));
  CHECK(seen.count("T9_small_face"));
  CHECK(seen.count("T11_mono_neighborhood"));
  CHECK(seen.count("T13_adynamic"));
  CHECK(seen.count("C1_three_common"));
  CHECK(seen.count("L10_witness"));
  CHECK(seen.count("KY_bound"));
  CHECK(seen.count("T15_pl44f"));
  try {
    theorem_from_name("T99_bogus");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::invalid_spec);
  }
}

TEST_CASE("graph_text formats") {
  CHECK(graph_text(Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) ==
        "n=4;e=0-1,0-2,0-3,1-2,1-3,2-3");
  CHECK(graph_text(Graph::from_edges({{1, 2}, {2, 5}})) == "n=3;v=1,2,5;e=1-2,2-5");
  CHECK(graph_text(Graph::from_edges({}, {3})) == "n=1;v=3;e=-");
  CHECK(graph_text(Graph::from_edges({}, {0, 1})) == "n=2;e=-");
}

TEST_CASE("report text is exact and excludes timing") {
  Report rep;
  rep.theorem = TheoremId::t6_pair;
  rep.instances = 3;
  rep.failures.push_back({"n=1;v=7;e=-", "-", "boom"});
  rep.seconds = 123.456;  // must not appear
  rep.manifest_hash = 0xdeadbeefull;
  CHECK(rep.to_text() ==
        "FAIL theorem=T6_pair graph=n=1;v=7;e=- constraint=- detail=boom\n"
        "theorem=T6_pair\n"
        "instances=3\n"
        "failures=1\n"
        "manifest=00000000deadbeef\n");
  CHECK(!rep.pass());
  Report clean;
  clean.theorem = TheoremId::ky_bound;
  CHECK(clean.pass());
  CHECK(clean.to_text() ==
        "theorem=KY_bound\ninstances=0\nfailures=0\nmanifest=0000000000000000\n");
}

TEST_CASE("frozen instance counts per checker") {
  Graph c5 = cycle(5);
  Graph q3 = cube();
  Graph k4p = make_k4prime();

  // T6: non-adjacent pairs x 9 colorings. C5 has 5 such pairs, K4' has 12.
  CHECK(run(c5, TheoremId::t6_pair).instances == 45);
  CHECK(run(k4p, TheoremId::t6_pair).instances == 108);

  // T8: every 1..3-subset, minus subsets hitting a triangle thrice.
  CHECK(run(c5, TheoremId::t8_add3vertex).instances == 25);
  CHECK(run(k4p, TheoremId::t8_add3vertex).instances == 62);  // 7+21+35-1

  // T9: proper assignments on simple faces of length <= 4.
  CHECK(run(q3, TheoremId::t9_small_face).instances == 108);  // 6 squares x 18
  CHECK(run(cycle(4), TheoremId::t9_small_face).instances == 36);
  CHECK(run(k4p, TheoremId::t9_small_face).instances == 6);  // one triangle face
  CHECK(run(diamond(), TheoremId::t9_small_face).instances == 0);  // census 2

  // T11: skipped entirely when the graph contains K4'.
  CHECK(run(k4p, TheoremId::t11_mono_neighborhood).instances == 0);
  CHECK(run(q3, TheoremId::t11_mono_neighborhood).instances == 24);  // 8 x 3

  // T13: one instance when an eligible vertex exists, none otherwise.
  CHECK(run(k4p, TheoremId::t13_adynamic).instances == 1);
  CHECK(run(diamond(), TheoremId::t13_adynamic).instances == 0);

  // C1: distinct triples with a common neighbor, triangle-free hosts only.
  CHECK(run(star(3), TheoremId::c1_three_common).instances == 1);
  CHECK(run(Graph::from_edges({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}),
            TheoremId::c1_three_common)
            .instances == 1);  // K2,3: both centers see the same triple
  CHECK(run(q3, TheoremId::c1_three_common).instances == 8);

  // All of the above must also pass.
  for (TheoremId t : {TheoremId::t6_pair, TheoremId::t8_add3vertex, TheoremId::t9_small_face,
                      TheoremId::t11_mono_neighborhood, TheoremId::t13_adynamic})
    CHECK(run(k4p, t).pass());
  CHECK(run(q3, TheoremId::t9_small_face).pass());
  CHECK(run(q3, TheoremId::t11_mono_neighborhood).pass());
  CHECK(run(q3, TheoremId::c1_three_common).pass());
  CHECK(run(c5, TheoremId::t6_pair).pass());
  CHECK(run(c5, TheoremId::t8_add3vertex).pass());
}

TEST_CASE("L10 checker covers every diagonal-free 4-face") {
  // Cube: all six faces qualify, every diagonal is safe.
  Report q3 = run(cube(), TheoremId::l10_witness);
  CHECK(q3.instances == 6);
  CHECK(q3.pass());

  // The blocking configuration: three diagonal-free 4-faces, one of which
  // (the square 1-2-3-4) has no safe diagonal and needs the witness.
  Graph g = Graph::from_edges({{1, 2},
                               {2, 3},
                               {3, 4},
                               {4, 1},
                               {5, 1},
                               {5, 2},
                               {6, 5},
                               {6, 4},
                               {7, 5},
                               {7, 3}});
  PlaneGraph pg = PlaneGraph::from_rotation(
      g, {{2, 4, 5}, {1, 5, 3}, {2, 7, 4}, {3, 6, 1}, {2, 1, 6, 7}, {5, 4}, {5, 3}});
  Report rep = check_theorem(pg, TheoremId::l10_witness);
  CHECK(rep.instances == 3);
  CHECK(rep.pass());
}

TEST_CASE("KY bound audit") {
  Graph k4 = make_k4();
  KyVerdict v = check_ky_bound(k4);
  CHECK(v.holds);
  CHECK(v.equality);  // 3*6 == 5*4 - 2

  for (const Graph& g : generate_4ore(1, 0)) {
    KyVerdict d1 = check_ky_bound(g);  // not_critical would throw
    CHECK(d1.holds);
    CHECK(d1.equality);  // 3*11 == 5*7 - 2
  }

  KyVerdict w5 = check_ky_bound(wheel(5));
  CHECK(w5.holds);
  CHECK(!w5.equality);  // 30 > 28

  try {
    check_ky_bound(cycle(5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_critical);
  }

  // Through the harness: non-critical graphs contribute zero instances.
  CHECK(run(cycle(5), TheoremId::ky_bound).instances == 0);
  Report k4rep = run(k4, TheoremId::ky_bound);
  CHECK(k4rep.instances == 1);
  CHECK(k4rep.pass());
}

TEST_CASE("four-triangle biconditional") {
  CHECK(check_pl44f(make_k4()));        // census 4, planar, no 4-face
  CHECK(check_pl44f(cycle(4)));         // census 0: vacuous
  CHECK(check_pl44f(cycle(5)));
  for (const Graph& g : generate_4ore(1, 0)) CHECK(check_pl44f(g));

  // W4 has exactly four triangles and a square outer face: violated.
  CHECK(!check_pl44f(wheel(4)));
  Report rep = run(wheel(4), TheoremId::t15_pl44f);
  CHECK(rep.instances == 1);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].detail == "four-triangle-biconditional-violated:census=4");
  CHECK(rep.to_text().rfind("FAIL theorem=T15_pl44f graph=n=5;e=", 0) == 0);
}

TEST_CASE("adynamic coloring") {
  // C4: vertex 0 qualifies and its neighbors land on one color.
  AdynamicResult c4 = adynamic_3color(PlaneGraph::embed(cycle(4)));
  REQUIRE(c4.coloring.has_value());
  CHECK(c4.witness == 0);
  CHECK(verify_coloring(cycle(4), {}, *c4.coloring));
  CHECK(c4.coloring->at(1) == c4.coloring->at(3));

  // K4': the apex (vertex 0) is eligible but unsatisfiable; the subdivision
  // vertex 1 succeeds via the 2-vertex split.
  AdynamicResult k4p = adynamic_3color(PlaneGraph::embed(make_k4prime()));
  REQUIRE(k4p.coloring.has_value());
  CHECK(k4p.witness == 1);
  CHECK(verify_coloring(make_k4prime(), {}, *k4p.coloring));
  CHECK(k4p.coloring->at(0) == k4p.coloring->at(4));

  // K4 minus an edge: no vertex has an independent 2+-neighborhood.
  AdynamicResult dia = adynamic_3color(PlaneGraph::embed(diamond()));
  CHECK(!dia.coloring.has_value());
  CHECK(dia.witness == -1);
}

TEST_CASE("corpus scans are worker-count independent") {
  CorpusFilter f;
  f.max_n = 5;
  f.max_triangles = 1;
  Report serial = scan_corpus(f, TheoremId::t6_pair, 1);
  Report parallel = scan_corpus(f, TheoremId::t6_pair, 4);
  CHECK(serial.pass());
  CHECK(serial.instances > 0);
  CHECK(serial.to_text() == parallel.to_text());
  CHECK(serial.manifest_hash == f.hash());

  Report l10s = scan_corpus(f, TheoremId::l10_witness, 1);
  CHECK(l10s.pass());
  CHECK(l10s.to_text() == scan_corpus(f, TheoremId::l10_witness, 3).to_text());
}

TEST_CASE("pair extension fails at n=7: the split-hub wheel") {
  // The universal claim behind T6_pair is false, and this is its minimal
  // counterexample: take the 5-wheel and split the hub into two non-adjacent
  // halves (2 and 3). One triangle survives ({0,2,4}); the graph is
  // 3-chromatic; yet no proper 3-coloring gives the two halves the same
  // color, because identifying them reassembles the 4-chromatic odd wheel.
  // Frozen here so the census of failures cannot drift silently.
  Graph g = Graph::from_edges({{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5},
                               {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
  CHECK(g.triangle_count() == 1);
  CHECK(!g.adjacent(2, 3));
  CHECK(solve(g, ConstraintSet{}));
  PlaneGraph pg = PlaneGraph::embed(g);
  for (int c = 1; c <= 3; ++c) {
    ConstraintSet same;
    same.fix(2, c).fix(3, c);
    CHECK(!solve(g, same));                      // exact oracle
    CHECK(!reduce_and_color(pg, same).coloring); // reduction engine agrees
  }
  for (int cu = 1; cu <= 3; ++cu)  // the distinct-color half still extends
    for (int cv = 1; cv <= 3; ++cv)
      if (cu != cv) {
        ConstraintSet cs;
        cs.fix(2, cu).fix(3, cv);
        CHECK(solve(g, cs));
      }
  Identification id{};
  Graph w = identify(g, 2, 3, &id);
  CHECK(w.vertex_count() == 6);
  CHECK(w.edge_count() == 10);
  CHECK(chromatic_number(w) == 4);

  // Corpus-level census: exactly these three instances (one per color) fail
  // at n <= 7 with at most one triangle, and none below n = 7.
  CorpusFilter f;
  f.max_n = 7;
  f.max_triangles = 1;
  Report rep = scan_corpus(f, TheoremId::t6_pair);
  CHECK(rep.instances == 17487);
  REQUIRE(rep.failures.size() == 3);
  for (const Failure& fl : rep.failures) {
    CHECK(fl.graph_text == graph_text(g));
    CHECK(fl.detail == "unexpected-unsat");
    CHECK(fl.constraint_text.find("fix:2=") != std::string::npos);
    CHECK(fl.constraint_text.find("fix:3=") != std::string::npos);
  }
  CorpusFilter f6 = f;
  f6.max_n = 6;
  CHECK(scan_corpus(f6, TheoremId::t6_pair).pass());
}

TEST_CASE("T15 scan covers the composition stream") {
  CorpusFilter f;
  f.max_n = 7;
  Report rep = scan_corpus(f, TheoremId::t15_pl44f, 2);
  CHECK(rep.pass());
  CHECK(rep.instances >= 2);  // K4 plus every depth-1 composition
}

TEST_CASE("tightness: pattern vocabulary") {
  CHECK(kTightnessPatterns.size() == 7);
  CHECK(std::find(kTightnessPatterns.begin(), kTightnessPatterns.end(),
                  "mono-4-neighborhood-K4'-free-one-triangle") != kTightnessPatterns.end());
  try {
    search_tightness("no-such-pattern", 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::invalid_spec);
  }
  try {
    search_tightness("pair-two-triangles", kEnumMaxN + 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::cap_exceeded);
  }
}

TEST_CASE("tightness: pair-on-two-triangles is witnessed by K4 minus an edge") {
  auto ws = search_tightness("pair-two-triangles", 4);
  REQUIRE(ws.size() == 6);  // the non-adjacent pair, distinctly colored: 3x2
  for (const TightnessWitness& w : ws) {
    CHECK(is_isomorphic(w.g, diamond()));
    CHECK(w.constraint.rfind("fix:", 0) == 0);
    ConstraintSet cs;
    // Replay "fix:u=c1;fix:v=c2" through the oracle: must be unsatisfiable.
    int u, c1, v, c2;
    REQUIRE(std::sscanf(w.constraint.c_str(), "fix:%d=%d;fix:%d=%d", &u, &c1, &v, &c2) == 4);
    cs.fix(u, c1).fix(v, c2);
    CHECK(c1 != c2);
    CHECK(!solve(w.g, cs).has_value());
  }
  CHECK(search_tightness("pair-two-triangles", 3).empty());
}

TEST_CASE("tightness: three precolored vertices already fail on the 3-star") {
  auto ws = search_tightness("three-precolored-vertices-one-triangle", 4);
  REQUIRE(ws.size() == 6);  // rainbow assignments of the three leaves
  for (const TightnessWitness& w : ws) CHECK(is_isomorphic(w.g, star(3)));
  CHECK(search_tightness("three-precolored-vertices-one-triangle", 3).empty());
}

TEST_CASE("rng: splitmix64 reference vectors and determinism") {
  Rng r0(0);
  CHECK(r0.next() == 0xE220A8397B1DCDAFull);
  CHECK(r0.next() == 0x6E789E6AA1B965F4ull);
  CHECK(r0.next() == 0x06C45D188009454Full);
  Rng r42(42);
  CHECK(r42.next() == 0xBDD732262FEB6E95ull);

  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  for (int i = 0; i < 100; ++i) {
    int x = a.below(13);
    CHECK(x >= 0);
    CHECK(x < 13);
  }
  CHECK(Rng(5).below(1) == 0);
}

TEST_CASE("random instances satisfy the advertised invariants") {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    RandomInstance inst = random_planar_instance(rng, 10);
    CHECK(inst.g.vertex_count() >= 4);
    CHECK(inst.g.vertex_count() <= 10);
    CHECK(inst.g.is_connected());
    CHECK(inst.g.triangle_count() <= 1);
    CHECK(PlaneGraph::is_planar(inst.g));
    validate_constraints(inst.g, inst.cs);  // must not throw
  }
  // Same seed, same instance.
  Rng x(99), y(99);
  RandomInstance a = random_planar_instance(x, 12);
  RandomInstance b = random_planar_instance(y, 12);
  CHECK(graph_text(a.g) == graph_text(b.g));
  CHECK(a.cs.to_text() == b.cs.to_text());

  try {
    Rng r(1);
    random_planar_instance(r, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::invalid_spec);
  }
}

TEST_CASE("metamorphic spot-checks: identify and add-edge mirror constraints") {
  int checked = 0;
  for (uint64_t seed = 500; seed < 550; ++seed) {
    Rng rng(seed);
    RandomInstance inst = random_planar_instance(rng, 9);
    const Graph& g = inst.g;
    std::optional<std::pair<int, int>> pair;
    for (int u = 0; u < g.vertex_count() && !pair; ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        if (!g.adjacent(u, v)) {
          pair = {u, v};
          break;
        }
    if (!pair) continue;
    auto [u, v] = *pair;
    ++checked;

    ConstraintSet eq;
    eq.equal(u, v);
    CHECK(solve(g, eq).has_value() == solve(identify(g, u, v)).has_value());

    ConstraintSet ne;
    ne.distinct(u, v);
    CHECK(solve(g, ne).has_value() == solve(add_edge(g, u, v)).has_value());
  }
  CHECK(checked >= 45);
}
