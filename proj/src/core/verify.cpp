#include "core/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <thread>

#include "core/surgery.hpp"

namespace tricolor {

const std::vector<TheoremId> kAllTheorems = {
    TheoremId::t6_pair,          TheoremId::t8_add3vertex,
    TheoremId::t9_small_face,    TheoremId::t11_mono_neighborhood,
    TheoremId::t13_adynamic,     TheoremId::c1_three_common,
    TheoremId::l10_witness,      TheoremId::ky_bound,
    TheoremId::t15_pl44f,
};

const char* theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::t6_pair: return "T6_pair";
    case TheoremId::t8_add3vertex: return "T8_add3vertex";
    case TheoremId::t9_small_face: return "T9_small_face";
    case TheoremId::t11_mono_neighborhood: return "T11_mono_neighborhood";
    case TheoremId::t13_adynamic: return "T13_adynamic";
    case TheoremId::c1_three_common: return "C1_three_common";
    case TheoremId::l10_witness: return "L10_witness";
    case TheoremId::ky_bound: return "KY_bound";
    case TheoremId::t15_pl44f: return "T15_pl44f";
  }
  return "unknown";
}

TheoremId theorem_from_name(const std::string& name) {
  for (TheoremId t : kAllTheorems)
    if (name == theorem_name(t)) return t;
  fail(Errc::invalid_spec, "unknown theorem id '" + name + "'");
}

std::string graph_text(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count());
  const std::vector<int>& labels = g.labels();
  bool contiguous = true;
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i)) contiguous = false;
  if (!contiguous) {
    s += ";v=";
    for (size_t i = 0; i < labels.size(); ++i)
      s += (i ? "," : "") + std::to_string(labels[i]);
  }
  s += ";e=";
  auto edges = g.edges();
  if (edges.empty()) s += "-";
  for (size_t i = 0; i < edges.size(); ++i)
    s += (i ? "," : "") + std::to_string(edges[i].first) + "-" +
         std::to_string(edges[i].second);
  return s;
}

std::string Report::to_text() const {
  std::string out;
  for (const Failure& f : failures)
    out += std::string("FAIL theorem=") + theorem_name(theorem) + " graph=" + f.graph_text +
           " constraint=" + f.constraint_text + " detail=" + f.detail + "\n";
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(manifest_hash));
  out += std::string("theorem=") + theorem_name(theorem) + "\n";
  out += "instances=" + std::to_string(instances) + "\n";
  out += "failures=" + std::to_string(failures.size()) + "\n";
  out += std::string("manifest=") + hex + "\n";
  return out;
}

namespace {

bool neighborhood_independent(const Graph& g, const std::vector<int>& nb) {
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (g.adjacent(nb[i], nb[j])) return false;
  return true;
}

void foreach_combo(const std::vector<int>& items, int k,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (size_t i = start; i + (k - cur.size()) <= items.size(); ++i) {
      cur.push_back(items[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// All assignments of colors 1..3 to `verts` that are proper on the induced
// subgraph (cycle edges and chords alike).
void foreach_proper_assignment(const Graph& g, const std::vector<int>& verts,
                               const std::function<void(const std::map<int, int>&)>& fn) {
  std::map<int, int> cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == verts.size()) {
      fn(cur);
      return;
    }
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j)
        if (g.adjacent(verts[j], verts[i]) && cur[verts[j]] == c) ok = false;
      if (!ok) continue;
      cur[verts[i]] = c;
      rec(i + 1);
      cur.erase(verts[i]);
    }
  };
  rec(0);
}

void add_failure(Report& rep, const Graph& g, const std::string& constraint,
                 const std::string& detail) {
  rep.failures.push_back({graph_text(g), constraint, detail});
}

// One engine-vs-oracle instance; `must_extend` when the theorem asserts
// satisfiability. Returns the oracle verdict.
bool run_instance(Report& rep, const PlaneGraph& pg, const ConstraintSet& cs,
                  bool must_extend) {
  const Graph& g = pg.graph();
  ++rep.instances;
  EngineResult er = reduce_and_color(pg, cs);
  std::optional<Coloring> oracle = solve(g, cs);
  const bool es = er.coloring.has_value(), os = oracle.has_value();
  if (es && !verify_coloring(g, cs, *er.coloring)) {
    add_failure(rep, g, cs.to_text(), "engine-coloring-invalid");
  } else if (es != os) {
    add_failure(rep, g, cs.to_text(),
                std::string("disagree:engine=") + (es ? "SAT" : "UNSAT") +
                    ",oracle=" + (os ? "SAT" : "UNSAT"));
  } else if (must_extend && !os) {
    add_failure(rep, g, cs.to_text(), "unexpected-unsat");
  }
  return os;
}

// ---- per-theorem instance enumeration -----------------------------------------

void check_t6(const PlaneGraph& pg, Report& rep) {
  const Graph& g = pg.graph();
  if (g.triangle_count() > 1) return;
  const auto& labels = g.labels();
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      if (g.adjacent(labels[i], labels[j])) continue;
      for (int c1 = 1; c1 <= 3; ++c1)
        for (int c2 = 1; c2 <= 3; ++c2) {
          ConstraintSet cs;
          cs.fix(labels[i], c1).fix(labels[j], c2);
          run_instance(rep, pg, cs, true);
        }
    }
}

void check_t8(const PlaneGraph& pg, Report& rep) {
  const Graph& g = pg.graph();
  auto tris = g.triangles();
  if (tris.size() > 1) return;
  const int x = g.labels().back() + 1;  // the added vertex
  if (x >= kMaxVertices) fail(Errc::cap_exceeded, "no label headroom for the added vertex");
  auto handle = [&](const std::vector<int>& s) {
    if (tris.size() == 1) {
      int hits = 0;
      for (int v : s)
        if (v == tris[0][0] || v == tris[0][1] || v == tris[0][2]) ++hits;
      if (hits > 2) return;
    }
    ++rep.instances;
    std::string note = "add-vertex:";
    for (size_t i = 0; i < s.size(); ++i) note += (i ? "," : "") + std::to_string(s[i]);

    auto edges = g.edges();
    for (int v : s) edges.emplace_back(v, x);
    Graph h = Graph::from_edges(edges);
    bool direct = solve(h).has_value();
    if (!direct) add_failure(rep, g, note, "h-unsat");

    // The proof's route: color a non-adjacent pair of the new vertex's
    // neighbors alike, freeing a color for it.
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (!g.adjacent(s[i], s[j])) {
          ConstraintSet cs;
          cs.equal(s[i], s[j]);
          EngineResult er = reduce_and_color(pg, cs);
          std::optional<Coloring> oracle = solve(g, cs);
          if (er.coloring.has_value() != oracle.has_value())
            add_failure(rep, g, note + ";" + cs.to_text(),
                        std::string("disagree:engine=") +
                            (er.coloring ? "SAT" : "UNSAT") +
                            ",oracle=" + (oracle ? "SAT" : "UNSAT"));
          else if (!oracle)
            add_failure(rep, g, note + ";" + cs.to_text(), "bridge-unsat");
          else if (!direct)
            add_failure(rep, g, note + ";" + cs.to_text(), "bridge-sat-but-h-unsat");
          return;
        }
  };
  for (int k = 1; k <= 3; ++k) foreach_combo(g.labels(), k, handle);
}

void check_t9(const PlaneGraph& pg, Report& rep) {
  const Graph& g = pg.graph();
  if (g.triangle_count() > 1) return;
  for (const Face& f : pg.faces()) {
    if (f.length() > 4 || !f.is_simple_cycle()) continue;
    foreach_proper_assignment(g, f.walk, [&](const std::map<int, int>& partial) {
      ConstraintSet cs;
      for (auto [v, c] : partial) cs.fix(v, c);
      bool oracle_sat = run_instance(rep, pg, cs, true);
      std::optional<Coloring> ext = extend_small_face(pg, f.walk, partial);
      if (ext.has_value() != oracle_sat)
        add_failure(rep, g, cs.to_text(),
                    std::string("extend-face-disagree:extend=") +
                        (ext ? "SAT" : "UNSAT") + ",oracle=" +
                        (oracle_sat ? "SAT" : "UNSAT"));
    });
  }
}

void check_t11(const PlaneGraph& pg, Report& rep) {
  const Graph& g = pg.graph();
  if (g.triangle_count() > 1) return;
  if (find_k4prime(g)) return;  // hypothesis computed, never assumed
  for (int u : g.labels()) {
    if (g.degree(u) != 3) continue;
    std::vector<int> nb = g.neighbors(u);
    if (!neighborhood_independent(g, nb)) continue;
    for (int c = 1; c <= 3; ++c) {
      ConstraintSet cs;
      for (int v : nb) cs.fix(v, c);
      run_instance(rep, pg, cs, true);
    }
  }
}

bool adynamic_eligible(const Graph& g, int u) {
  return g.degree(u) >= 2 && neighborhood_independent(g, g.neighbors(u));
}

void check_t13(const PlaneGraph& pg, Report& rep) {
  const Graph& g = pg.graph();
  if (g.triangle_count() > 1) return;
  bool any = false;
  for (int u : g.labels())
    if (adynamic_eligible(g, u)) any = true;
  if (!any) return;
  ++rep.instances;
  AdynamicResult res = adynamic_3color(pg);
  if (!res.coloring) {
    // Oracle sweep: is any monochromatic neighborhood actually achievable?
    for (int u : g.labels()) {
      if (!adynamic_eligible(g, u)) continue;
      std::vector<int> nb = g.neighbors(u);
      ConstraintSet cs;
      for (size_t i = 1; i < nb.size(); ++i) cs.equal(nb[0], nb[i]);
      if (solve(g, cs)) {
        add_failure(rep, g, cs.to_text(), "disagree:adynamic=UNSAT,oracle=SAT");
        return;
      }
    }
    add_failure(rep, g, "-", "unexpected-unsat");
    return;
  }
  const Coloring& col = *res.coloring;
  if (!verify_coloring(g, {}, col)) {
    add_failure(rep, g, "-", "adynamic-coloring-improper");
    return;
  }
  int w = res.witness;
  if (!g.has_vertex(w) || g.degree(w) < 2) {
    add_failure(rep, g, "-", "adynamic-witness-invalid");
    return;
  }
  std::vector<int> nb = g.neighbors(w);
  for (int v : nb)
    if (col.at(v) != col.at(nb[0])) {
      add_failure(rep, g, "-", "adynamic-witness-not-monochromatic");
      return;
    }
}

void check_c1(const PlaneGraph& pg, Report& rep) {
  const Graph& g = pg.graph();
  if (g.triangle_count() != 0) return;
  std::set<std::array<int, 3>> triples;
  std::map<std::array<int, 3>, int> common;  // smallest common neighbor
  for (int v : g.labels()) {
    std::vector<int> nb = g.neighbors(v);
    if (nb.size() < 3) continue;
    foreach_combo(nb, 3, [&](const std::vector<int>& t) {
      std::array<int, 3> key = {t[0], t[1], t[2]};
      if (triples.insert(key).second) common[key] = v;
    });
  }
  for (const auto& t : triples) {
    ConstraintSet cs;
    cs.equal(t[0], t[1]).equal(t[0], t[2]);
    bool oracle_sat = run_instance(rep, pg, cs, true);

    // The proof's route: a new vertex adjacent to the triple and their
    // common neighbor forces the triple onto one color in any 3-coloring.
    const int x = g.labels().back() + 1;
    if (x >= kMaxVertices) fail(Errc::cap_exceeded, "no label headroom for the added vertex");
    auto edges = g.edges();
    edges.emplace_back(common[t], x);
    for (int v : t) edges.emplace_back(v, x);
    Graph h = Graph::from_edges(edges);
    std::optional<Coloring> hcol = solve(h);
    if (!hcol) {
      add_failure(rep, g, cs.to_text(), "h-route-unsat");
    } else {
      bool mono = hcol->at(t[0]) == hcol->at(t[1]) && hcol->at(t[0]) == hcol->at(t[2]);
      if (!mono) add_failure(rep, g, cs.to_text(), "h-route-not-monochromatic");
      if (!oracle_sat) add_failure(rep, g, cs.to_text(), "h-route-sat-but-direct-unsat");
    }
  }
}

void check_l10(const PlaneGraph& pg, Report& rep) {
  const Graph& g = pg.graph();
  const int census = g.triangle_count();
  for (const Face& f : pg.faces()) {
    if (f.length() != 4 || !f.is_simple_cycle()) continue;
    const auto& w = f.walk;
    if (g.adjacent(w[0], w[2]) || g.adjacent(w[1], w[3])) continue;
    ++rep.instances;
    std::array<int, 4> face = {w[0], w[1], w[2], w[3]};
    std::string note = "face:" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                       std::to_string(w[2]) + "," + std::to_string(w[3]);
    Lemma10Outcome out = lemma10_analyze(pg, face);
    const int c1 = identify(g, w[0], w[2]).triangle_count();
    const int c2 = identify(g, w[1], w[3]).triangle_count();
    if (out.safe_index) {
      int after = *out.safe_index == 1 ? c1 : c2;
      if (after > census)
        add_failure(rep, g, note,
                    "safe-diagonal-raises-census:" + std::to_string(census) + "->" +
                        std::to_string(after));
    } else if (out.witness) {
      if (c1 <= census || c2 <= census) {
        add_failure(rep, g, note,
                    "witness-but-identification-safe:" + std::to_string(c1) + "," +
                        std::to_string(c2) + ",census=" + std::to_string(census));
        continue;
      }
      const Lemma10Witness& wit = *out.witness;
      int i = wit.i - 1;
      int vi = face[i], vi1 = face[(i + 1) % 4], vi2 = face[(i + 2) % 4],
          vi3 = face[(i + 3) % 4];
      bool edges_ok = g.adjacent(vi, vi1) && g.adjacent(wit.z, vi) &&
                      g.adjacent(wit.z, vi1) && g.adjacent(wit.x, wit.z) &&
                      g.adjacent(wit.x, vi3) && g.adjacent(wit.y, wit.z) &&
                      g.adjacent(wit.y, vi2);
      if (!edges_ok) add_failure(rep, g, note, "witness-edges-missing");
    } else {
      add_failure(rep, g, note, "no-outcome");
    }
  }
}

void check_ky(const Graph& g, Report& rep) {
  if (!is_k_critical(g, 4)) return;
  ++rep.instances;
  KyVerdict v = check_ky_bound(g);
  if (!v.holds)
    add_failure(rep, g, "-",
                "bound-violated:3m=" + std::to_string(3 * g.edge_count()) +
                    ",5n-2=" + std::to_string(5 * g.vertex_count() - 2));
}

void check_t15(const Graph& g, Report& rep) {
  ++rep.instances;
  if (!check_pl44f(g))
    add_failure(rep, g, "-",
                "four-triangle-biconditional-violated:census=" +
                    std::to_string(g.triangle_count()));
}

template <typename Fn>
Report timed_report(TheoremId t, Fn&& body) {
  Report rep;
  rep.theorem = t;
  auto start = std::chrono::steady_clock::now();
  body(rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

Report check_theorem(const PlaneGraph& g, TheoremId t) {
  return timed_report(t, [&](Report& rep) {
    switch (t) {
      case TheoremId::t6_pair: check_t6(g, rep); break;
      case TheoremId::t8_add3vertex: check_t8(g, rep); break;
      case TheoremId::t9_small_face: check_t9(g, rep); break;
      case TheoremId::t11_mono_neighborhood: check_t11(g, rep); break;
      case TheoremId::t13_adynamic: check_t13(g, rep); break;
      case TheoremId::c1_three_common: check_c1(g, rep); break;
      case TheoremId::l10_witness: check_l10(g, rep); break;
      case TheoremId::ky_bound: check_ky(g.graph(), rep); break;
      case TheoremId::t15_pl44f: check_t15(g.graph(), rep); break;
    }
  });
}

Report check_theorem_graph(const Graph& g, TheoremId t) {
  if (t == TheoremId::ky_bound)
    return timed_report(t, [&](Report& rep) { check_ky(g, rep); });
  if (t == TheoremId::t15_pl44f)
    return timed_report(t, [&](Report& rep) { check_t15(g, rep); });
  return check_theorem(PlaneGraph::embed(g), t);
}

namespace {

// Index-ordered parallel map: results land by input position, so the merged
// report does not depend on the worker count.
void parallel_over(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw ? static_cast<int>(hw) : 1;
  }
  jobs = static_cast<int>(std::min(static_cast<size_t>(jobs), count));
  if (jobs <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

Report scan_corpus(const CorpusFilter& filter, TheoremId t, int jobs) {
  return timed_report(t, [&](Report& rep) {
    rep.manifest_hash = filter.hash();
    std::vector<Report> parts;
    if (t == TheoremId::t15_pl44f || t == TheoremId::ky_bound) {
      // Graph-level audits; T15 additionally draws from the composition
      // stream (its subjects need not be planar).
      std::vector<Graph> graphs;
      if (t == TheoremId::t15_pl44f) {
        for (int d = 0; 4 + 3 * d <= filter.max_n; ++d)
          for (Graph& g : generate_4ore(d, 0, filter.max_n)) graphs.push_back(std::move(g));
      } else {
        CorpusFilter f = filter;
        enumerate_small_planar(f, [&](const Graph& g, const PlaneGraph&) {
          graphs.push_back(g);
          return true;
        });
      }
      parts.resize(graphs.size());
      parallel_over(graphs.size(), jobs,
                    [&](size_t i) { parts[i] = check_theorem_graph(graphs[i], t); });
    } else {
      std::vector<Graph> graphs;
      enumerate_small_planar(filter, [&](const Graph& g, const PlaneGraph&) {
        graphs.push_back(g);
        return true;
      });
      parts.resize(graphs.size());
      parallel_over(graphs.size(), jobs, [&](size_t i) {
        try {
          parts[i] = check_theorem(PlaneGraph::embed(graphs[i]), t);
        } catch (const Error& e) {
          parts[i].theorem = t;
          parts[i].failures.push_back(
              {graph_text(graphs[i]), "-", std::string("exception:") + e.what()});
        }
      });
    }
    for (const Report& p : parts) {
      rep.instances += p.instances;
      rep.failures.insert(rep.failures.end(), p.failures.begin(), p.failures.end());
    }
  });
}

// ---- tightness search -------------------------------------------------------

const std::vector<std::string> kTightnessPatterns = {
    "three-precolored-vertices-one-triangle",
    "pair-two-triangles",
    "added-4-vertex-one-triangle",
    "added-3-vertex-two-triangles",
    "fiveface-one-triangle",
    "mono-4-neighborhood-K4'-free-one-triangle",
    "mono-2-neighborhood-two-triangles",
};

namespace {

// Per-pattern instance generator: calls `probe` with a constraint whose
// unsatisfiability witnesses tightness (solve is the oracle).
void tightness_instances(const std::string& pattern, const Graph& g, const PlaneGraph& pg,
                         const std::function<void(const ConstraintSet&, const std::string&)>& probe,
                         const std::function<void(const Graph&, const std::string&)>& probe_h) {
  const int census = g.triangle_count();
  if (pattern == "three-precolored-vertices-one-triangle") {
    if (census > 1) return;
    foreach_combo(g.labels(), 3, [&](const std::vector<int>& t) {
      if (g.adjacent(t[0], t[1]) || g.adjacent(t[0], t[2]) || g.adjacent(t[1], t[2])) return;
      for (int c1 = 1; c1 <= 3; ++c1)
        for (int c2 = 1; c2 <= 3; ++c2)
          for (int c3 = 1; c3 <= 3; ++c3) {
            ConstraintSet cs;
            cs.fix(t[0], c1).fix(t[1], c2).fix(t[2], c3);
            probe(cs, cs.to_text());
          }
    });
  } else if (pattern == "pair-two-triangles") {
    if (census != 2) return;
    const auto& labels = g.labels();
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = i + 1; j < labels.size(); ++j) {
        if (g.adjacent(labels[i], labels[j])) continue;
        for (int c1 = 1; c1 <= 3; ++c1)
          for (int c2 = 1; c2 <= 3; ++c2) {
            ConstraintSet cs;
            cs.fix(labels[i], c1).fix(labels[j], c2);
            probe(cs, cs.to_text());
          }
      }
  } else if (pattern == "added-4-vertex-one-triangle" ||
             pattern == "added-3-vertex-two-triangles") {
    const int size = pattern == "added-4-vertex-one-triangle" ? 4 : 3;
    if (pattern == "added-4-vertex-one-triangle" ? census > 1 : census != 2) return;
    auto tris = g.triangles();
    const int x = g.labels().back() + 1;
    foreach_combo(g.labels(), size, [&](const std::vector<int>& s) {
      for (const auto& t : tris) {
        int hits = 0;
        for (int v : s)
          if (v == t[0] || v == t[1] || v == t[2]) ++hits;
        if (hits > 2) return;  // keep the met-hypothesis: <=2 per triangle
      }
      auto edges = g.edges();
      for (int v : s) edges.emplace_back(v, x);
      std::string note = "add-vertex:";
      for (size_t i = 0; i < s.size(); ++i) note += (i ? "," : "") + std::to_string(s[i]);
      probe_h(Graph::from_edges(edges), note);
    });
  } else if (pattern == "fiveface-one-triangle") {
    if (census > 1) return;
    for (const Face& f : pg.faces()) {
      if (f.length() != 5 || !f.is_simple_cycle()) continue;
      foreach_proper_assignment(g, f.walk, [&](const std::map<int, int>& partial) {
        ConstraintSet cs;
        for (auto [v, c] : partial) cs.fix(v, c);
        probe(cs, cs.to_text());
      });
    }
  } else if (pattern == "mono-4-neighborhood-K4'-free-one-triangle") {
    if (census > 1 || find_k4prime(g)) return;
    for (int u : g.labels()) {
      if (g.degree(u) != 4) continue;
      std::vector<int> nb = g.neighbors(u);
      if (!neighborhood_independent(g, nb)) continue;
      ConstraintSet cs;  // one color class suffices: colors are symmetric
      for (int v : nb) cs.fix(v, 1);
      probe(cs, cs.to_text());
    }
  } else if (pattern == "mono-2-neighborhood-two-triangles") {
    if (census != 2) return;
    for (int u : g.labels()) {
      if (g.degree(u) != 2) continue;
      std::vector<int> nb = g.neighbors(u);
      if (g.adjacent(nb[0], nb[1])) continue;
      ConstraintSet cs;
      cs.equal(nb[0], nb[1]);
      probe(cs, cs.to_text());
    }
  } else {
    fail(Errc::invalid_spec, "unknown tightness pattern '" + pattern + "'");
  }
}

int pattern_census_bound(const std::string& pattern) {
  if (pattern == "pair-two-triangles" || pattern == "added-3-vertex-two-triangles" ||
      pattern == "mono-2-neighborhood-two-triangles")
    return 2;
  return 1;
}

}  // namespace

std::vector<TightnessWitness> search_tightness(const std::string& pattern, int max_n) {
  if (std::find(kTightnessPatterns.begin(), kTightnessPatterns.end(), pattern) ==
      kTightnessPatterns.end())
    fail(Errc::invalid_spec, "unknown tightness pattern '" + pattern + "'");
  if (max_n < 1 || max_n > kEnumMaxN)
    fail(Errc::cap_exceeded, "max_n out of range 1.." + std::to_string(kEnumMaxN));
  const int bound = pattern_census_bound(pattern);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<TightnessWitness> found;
    for (const Graph& g : connected_planar_level(n, bound)) {
      PlaneGraph pg = PlaneGraph::embed(g);
      tightness_instances(
          pattern, g, pg,
          [&](const ConstraintSet& cs, const std::string& note) {
            if (!solve(g, cs)) found.push_back({g, note});
          },
          [&](const Graph& h, const std::string& note) {
            if (!solve(h)) found.push_back({g, note});
          });
    }
    if (!found.empty()) return found;  // all witnesses at the minimal order
  }
  return {};
}

// ---- bound audits -----------------------------------------------------------

KyVerdict check_ky_bound(const Graph& g) {
  if (!is_k_critical(g, 4)) fail(Errc::not_critical, "graph is not 4-critical");
  const long lhs = 3L * g.edge_count(), rhs = 5L * g.vertex_count() - 2;
  return {lhs >= rhs, lhs == rhs};
}

bool check_pl44f(const Graph& g) {
  if (g.triangle_count() != 4) return true;  // vacuous side of the biconditional
  if (!PlaneGraph::is_planar(g)) return false;
  PlaneGraph pg = PlaneGraph::embed(g);
  auto census = pg.face_length_census();
  auto it = census.find(4);
  return it == census.end() || it->second == 0;
}

// ---- adynamic coloring ------------------------------------------------------

AdynamicResult adynamic_3color(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  for (int u : g.labels()) {
    std::vector<int> nb = g.neighbors(u);
    if (nb.size() < 2 || !neighborhood_independent(g, nb)) continue;
    if (nb.size() == 2) {
      // Split into two adjacent copies over the same neighbors: any proper
      // coloring of the split graph forces both neighbors onto the third
      // color, and restricting it recovers one of g. Equisatisfiable.
      Graph split = split_vertex(g, u, nb, nb);
      if (std::optional<Coloring> col = solve(split)) {
        Coloring out;
        for (int v : g.labels()) out.map[v] = col->at(v);
        return {out, u};
      }
      continue;
    }
    if (nb.size() == 3) {
      ConstraintSet cs;  // fixing the shared color loses nothing: colors permute
      for (int v : nb) cs.fix(v, 1);
      EngineResult er = reduce_and_color(pg, cs);
      if (er.coloring) return {er.coloring, u};
      continue;
    }
    ConstraintSet cs;
    for (size_t i = 1; i < nb.size(); ++i) cs.equal(nb[0], nb[i]);
    if (std::optional<Coloring> col = solve(g, cs)) return {col, u};
  }
  return {std::nullopt, -1};
}

// ---- seeded instances -------------------------------------------------------

uint64_t Rng::next() {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int Rng::below(int k) { return k <= 1 ? 0 : static_cast<int>(next() % k); }

namespace {

bool addable(const std::vector<std::pair<int, int>>& edges, int n, int u, int v) {
  auto e = std::minmax(u, v);
  for (auto& ex : edges)
    if (ex.first == e.first && ex.second == e.second) return false;
  auto cand = edges;
  cand.emplace_back(u, v);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  Graph g = Graph::from_edges(cand, labels);
  return g.triangle_count() <= 1 && PlaneGraph::is_planar(g);
}

}  // namespace

RandomInstance random_planar_instance(Rng& rng, int max_n) {
  if (max_n < 4 || max_n > kMaxVertices)
    fail(Errc::invalid_spec, "max_n must be in 4.." + std::to_string(kMaxVertices));
  const int n = 4 + rng.below(max_n - 3);
  std::vector<std::pair<int, int>> edges = {{0, 1}};
  for (int v = 2; v < n; ++v) {
    edges.emplace_back(rng.below(v), v);  // connectivity
    int extra = rng.below(3);
    for (int k = 0; k < extra; ++k) {
      int u = rng.below(v);
      if (addable(edges, v + 1, u, v)) edges.emplace_back(std::minmax(u, v));
    }
  }
  // A few random chords across the finished vertex set.
  int chords = rng.below(n);
  for (int k = 0; k < chords; ++k) {
    int u = rng.below(n), v = rng.below(n);
    if (u != v && addable(edges, n, u, v)) edges.emplace_back(std::minmax(u, v));
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  Graph g = Graph::from_edges(edges, labels);

  ConstraintSet cs;
  auto nonadjacent_pair = [&]() -> std::optional<std::pair<int, int>> {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    if (pairs.empty()) return std::nullopt;
    return pairs[rng.below(static_cast<int>(pairs.size()))];
  };
  switch (rng.below(7)) {
    case 0: break;
    case 1: cs.fix(rng.below(n), 1 + rng.below(3)); break;
    case 2:
      if (auto p = nonadjacent_pair())
        cs.fix(p->first, 1 + rng.below(3)).fix(p->second, 1 + rng.below(3));
      break;
    case 3:
      if (auto p = nonadjacent_pair()) cs.equal(p->first, p->second);
      break;
    case 4:
      if (auto p = nonadjacent_pair()) cs.distinct(p->first, p->second);
      break;
    case 5: {
      PlaneGraph pg = PlaneGraph::embed(g);
      std::vector<Face> small;
      for (const Face& f : pg.faces())
        if (f.length() <= 4 && f.is_simple_cycle()) small.push_back(f);
      if (small.empty()) break;
      const Face& f = small[rng.below(static_cast<int>(small.size()))];
      std::vector<std::map<int, int>> proper;
      foreach_proper_assignment(g, f.walk,
                                [&](const std::map<int, int>& a) { proper.push_back(a); });
      if (proper.empty()) break;
      for (auto [v, c] : proper[rng.below(static_cast<int>(proper.size()))]) cs.fix(v, c);
      break;
    }
    case 6: {
      std::vector<int> eligible;
      for (int u = 0; u < n; ++u)
        if (g.degree(u) == 3 && neighborhood_independent(g, g.neighbors(u)))
          eligible.push_back(u);
      if (eligible.empty()) break;
      int u = eligible[rng.below(static_cast<int>(eligible.size()))];
      int c = 1 + rng.below(3);
      for (int v : g.neighbors(u)) cs.fix(v, c);
      break;
    }
  }
  return {g, cs};
}

}  // namespace tricolor
