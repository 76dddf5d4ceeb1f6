// C ABI over the core library: opaque handles, status codes, thread-local
// error text. Every entry point catches all exceptions at the boundary.

#include "tricolor/tricolor.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "core/catalog.hpp"
#include "core/color.hpp"
#include "core/plane.hpp"
#include "core/reduce.hpp"
#include "core/surgery.hpp"
#include "core/verify.hpp"

using namespace tricolor;

struct tc_graph {
  Graph g;
};
struct tc_plane {
  PlaneGraph pg;
};
struct tc_constraints {
  ConstraintSet cs;
};
struct tc_coloring {
  Coloring col;
};
struct tc_stream {
  std::vector<PlaneGraph> graphs;
  size_t cursor = 0;
};
struct tc_report {
  Report rep;
};
struct tc_witnesses {
  std::vector<TightnessWitness> list;
};
struct tc_text {
  std::string s;
};

namespace {

thread_local std::string g_last_error;

tc_status status_of(Errc c) {
  switch (c) {
    case Errc::non_planar: return TC_ERR_NOT_PLANAR;
    case Errc::cap_exceeded: return TC_ERR_CAP;
    case Errc::bad_header:
    case Errc::truncated:
    case Errc::parse_error:
    case Errc::io_error: return TC_ERR_IO;
    case Errc::internal: return TC_ERR;
    default: return TC_ERR_INVALID;
  }
}

template <typename Fn>
tc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = std::string(errc_name(e.code)) + ": " + e.what();
    return status_of(e.code);
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
    return TC_ERR;
  } catch (...) {
    g_last_error = "internal: unknown exception";
    return TC_ERR;
  }
}

tc_status require(bool ok, const char* what) {
  if (ok) return TC_OK;
  g_last_error = std::string("invalid_spec: ") + what;
  return TC_ERR_INVALID;
}

tc_text* make_text(std::string s) { return new tc_text{std::move(s)}; }

ConstraintSet cs_or_empty(const tc_constraints* cs) { return cs ? cs->cs : ConstraintSet{}; }

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::string s(csv);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(item);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_graph_free(tc_graph* g) { delete g; }
void tc_plane_free(tc_plane* p) { delete p; }
void tc_constraints_free(tc_constraints* c) { delete c; }
void tc_coloring_free(tc_coloring* c) { delete c; }
void tc_stream_free(tc_stream* s) { delete s; }
void tc_report_free(tc_report* r) { delete r; }
void tc_witnesses_free(tc_witnesses* w) { delete w; }
void tc_text_free(tc_text* t) { delete t; }

const char* tc_text_get(const tc_text* t) { return t ? t->s.c_str() : ""; }

/* ---- graphs ---------------------------------------------------------- */

tc_status tc_graph_from_edge_text(const char* text, tc_graph** out) {
  if (tc_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new tc_graph{Graph::from_text(text)};
    return TC_OK;
  });
}

tc_status tc_graph_vertex_count(const tc_graph* g, int* out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  *out = g->g.vertex_count();
  return TC_OK;
}

tc_status tc_graph_edge_count(const tc_graph* g, int* out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  *out = g->g.edge_count();
  return TC_OK;
}

tc_status tc_graph_triangle_count(const tc_graph* g, int* out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  *out = g->g.triangle_count();
  return TC_OK;
}

tc_status tc_graph_k4prime_apex_count(const tc_graph* g, int* out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = static_cast<int>(k4prime_apexes(g->g).size());
    return TC_OK;
  });
}

tc_status tc_graph_text(const tc_graph* g, tc_text** out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = make_text(graph_text(g->g));
    return TC_OK;
  });
}

/* ---- embeddings ------------------------------------------------------ */

tc_status tc_plane_embed(const tc_graph* g, tc_plane** out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = new tc_plane{PlaneGraph::embed(g->g)};
    return TC_OK;
  });
}

tc_status tc_is_planar(const tc_graph* g, int* flag) {
  if (tc_status s = require(g && flag, "null argument")) return s;
  return guarded([&] {
    *flag = PlaneGraph::is_planar(g->g) ? 1 : 0;
    return TC_OK;
  });
}

tc_status tc_plane_graph(const tc_plane* p, tc_graph** out) {
  if (tc_status s = require(p && out, "null argument")) return s;
  *out = new tc_graph{p->pg.graph()};
  return TC_OK;
}

tc_status tc_plane_face_count(const tc_plane* p, int* out) {
  if (tc_status s = require(p && out, "null argument")) return s;
  *out = p->pg.face_count();
  return TC_OK;
}

tc_status tc_plane_face_census(const tc_plane* p, tc_text** out) {
  if (tc_status s = require(p && out, "null argument")) return s;
  return guarded([&] {
    std::string t;
    for (auto [len, count] : p->pg.face_length_census())
      t += std::to_string(len) + ":" + std::to_string(count) + "\n";
    *out = make_text(std::move(t));
    return TC_OK;
  });
}

tc_status tc_plane_is_facial_cycle(const tc_plane* p, const int* verts, int len, int* flag) {
  if (tc_status s = require(p && verts && flag && len > 0, "null or empty argument")) return s;
  return guarded([&] {
    std::vector<int> cyc(verts, verts + len);
    *flag = p->pg.is_facial_cycle(cyc) ? 1 : 0;
    return TC_OK;
  });
}

tc_status tc_stats_text(const tc_plane* p, tc_text** out) {
  if (tc_status s = require(p && out, "null argument")) return s;
  return guarded([&] {
    const Graph& g = p->pg.graph();
    std::string t = "n=" + std::to_string(g.vertex_count()) +
                    " m=" + std::to_string(g.edge_count()) +
                    " triangles=" + std::to_string(g.triangle_count()) + "\n";
    t += "f=" + std::to_string(p->pg.face_count()) + "\n";
    std::string census;
    for (auto [len, count] : p->pg.face_length_census()) {
      if (!census.empty()) census += ",";
      census += std::to_string(len) + ":" + std::to_string(count);
    }
    t += "faces=" + (census.empty() ? "-" : census) + "\n";
    t += "k4prime_apexes=" + std::to_string(k4prime_apexes(g).size()) + "\n";
    *out = make_text(std::move(t));
    return TC_OK;
  });
}

/* ---- constraints and colorings --------------------------------------- */

tc_status tc_constraints_new(tc_constraints** out) {
  if (tc_status s = require(out != nullptr, "null argument")) return s;
  *out = new tc_constraints{};
  return TC_OK;
}

tc_status tc_constraints_fix(tc_constraints* c, int v, int color) {
  if (tc_status s = require(c != nullptr, "null argument")) return s;
  c->cs.fix(v, color);
  return TC_OK;
}

tc_status tc_constraints_equal(tc_constraints* c, int u, int v) {
  if (tc_status s = require(c != nullptr, "null argument")) return s;
  c->cs.equal(u, v);
  return TC_OK;
}

tc_status tc_constraints_distinct(tc_constraints* c, int u, int v) {
  if (tc_status s = require(c != nullptr, "null argument")) return s;
  c->cs.distinct(u, v);
  return TC_OK;
}

tc_status tc_coloring_color(const tc_coloring* c, int v, int* color) {
  if (tc_status s = require(c && color, "null argument")) return s;
  return guarded([&] {
    *color = c->col.at(v);
    return TC_OK;
  });
}

tc_status tc_coloring_text(const tc_coloring* c, tc_text** out) {
  if (tc_status s = require(c && out, "null argument")) return s;
  std::string t;
  for (auto [v, col] : c->col.map) t += std::to_string(v) + " " + std::to_string(col) + "\n";
  *out = make_text(std::move(t));
  return TC_OK;
}

/* ---- coloring engines ------------------------------------------------ */

tc_status tc_solve(const tc_graph* g, const tc_constraints* cs, tc_coloring** out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    ConstraintSet c = cs_or_empty(cs);
    validate_constraints(g->g, c);
    std::optional<Coloring> col = solve(g->g, c);
    if (!col) return TC_UNSAT;
    *out = new tc_coloring{*col};
    return TC_OK;
  });
}

tc_status tc_reduce_and_color(const tc_plane* p, const tc_constraints* cs, tc_coloring** out,
                              tc_text** trace_out) {
  if (tc_status s = require(p && out, "null argument")) return s;
  return guarded([&] {
    EngineResult res = reduce_and_color(p->pg, cs_or_empty(cs));
    if (trace_out) *trace_out = make_text(res.trace.to_text());
    if (!res.coloring) return TC_UNSAT;
    *out = new tc_coloring{*res.coloring};
    return TC_OK;
  });
}

/* ---- criticality ------------------------------------------------------ */

tc_status tc_chromatic_number(const tc_graph* g, int* out) {
  if (tc_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = chromatic_number(g->g);
    return TC_OK;
  });
}

tc_status tc_is_k_critical(const tc_graph* g, int k, int* flag) {
  if (tc_status s = require(g && flag, "null argument")) return s;
  return guarded([&] {
    *flag = is_k_critical(g->g, k) ? 1 : 0;
    return TC_OK;
  });
}

tc_status tc_ky_bound(const tc_graph* g, int* holds, int* equality) {
  if (tc_status s = require(g && holds && equality, "null argument")) return s;
  return guarded([&] {
    KyVerdict v = check_ky_bound(g->g);
    *holds = v.holds ? 1 : 0;
    *equality = v.equality ? 1 : 0;
    return TC_OK;
  });
}

/* ---- corpus streams --------------------------------------------------- */

tc_status tc_stream_new(tc_stream** out) {
  if (tc_status st = require(out != nullptr, "null argument")) return st;
  *out = new tc_stream{};
  return TC_OK;
}

tc_status tc_stream_push(tc_stream* s, const tc_plane* p) {
  if (tc_status st = require(s && p, "null argument")) return st;
  return guarded([&] {
    s->graphs.push_back(p->pg);
    return TC_OK;
  });
}

tc_status tc_stream_size(const tc_stream* s, int* out) {
  if (tc_status st = require(s && out, "null argument")) return st;
  *out = static_cast<int>(s->graphs.size());
  return TC_OK;
}

tc_status tc_stream_next(tc_stream* s, tc_plane** out) {
  if (tc_status st = require(s && out, "null argument")) return st;
  if (s->cursor >= s->graphs.size()) return TC_END;
  *out = new tc_plane{s->graphs[s->cursor++]};
  return TC_OK;
}

tc_status tc_stream_rewind(tc_stream* s) {
  if (tc_status st = require(s != nullptr, "null argument")) return st;
  s->cursor = 0;
  return TC_OK;
}

tc_status tc_stream_write_file(const tc_stream* s, const char* path) {
  if (tc_status st = require(s && path, "null argument")) return st;
  return guarded([&] {
    std::vector<const PlaneGraph*> ptrs;
    ptrs.reserve(s->graphs.size());
    for (const PlaneGraph& pg : s->graphs) ptrs.push_back(&pg);
    std::vector<uint8_t> bytes = write_planar_code(ptrs);
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::io_error, std::string("cannot open '") + path + "' for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) fail(Errc::io_error, std::string("short write to '") + path + "'");
    return TC_OK;
  });
}

tc_status tc_read_planar_code_file(const char* path, tc_stream** out) {
  if (tc_status st = require(path && out, "null argument")) return st;
  return guarded([&] {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::io_error, std::string("cannot open '") + path + "'");
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());
    *out = new tc_stream{read_planar_code(bytes), 0};
    return TC_OK;
  });
}

tc_status tc_read_planar_code_bytes(const uint8_t* bytes, size_t len, tc_stream** out) {
  if (tc_status st = require(bytes && out, "null argument")) return st;
  return guarded([&] {
    std::vector<uint8_t> buf(bytes, bytes + len);
    *out = new tc_stream{read_planar_code(buf), 0};
    return TC_OK;
  });
}

tc_status tc_generate_enum(int max_n, int max_triangles, const char* tags_csv,
                           tc_stream** out) {
  if (tc_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    CorpusFilter f;
    f.max_n = max_n;
    if (max_triangles >= 0) f.max_triangles = max_triangles;
    f.tags = split_csv(tags_csv);
    auto s = new tc_stream{};
    enumerate_small_planar(f, [&](const Graph&, const PlaneGraph& pg) {
      s->graphs.push_back(pg);
      return true;
    });
    *out = s;
    return TC_OK;
  });
}

tc_status tc_generate_4ore(int max_n, uint64_t seed, tc_stream** out) {
  if (tc_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    auto s = new tc_stream{};
    for (int d = 0; 4 + 3 * d <= max_n; ++d)
      for (const Graph& g : generate_4ore(d, seed, max_n)) {
        if (!PlaneGraph::is_planar(g)) continue;  // stream carries embeddings
        s->graphs.push_back(PlaneGraph::embed(g));
      }
    *out = s;
    return TC_OK;
  });
}

tc_status tc_generate_k4prime(tc_stream** out) {
  if (tc_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    auto s = new tc_stream{};
    s->graphs.push_back(PlaneGraph::embed(make_k4prime()));
    *out = s;
    return TC_OK;
  });
}

/* ---- theorem harness --------------------------------------------------- */

tc_status tc_check_theorem(const tc_plane* p, const char* theorem, tc_report** out) {
  if (tc_status st = require(p && theorem && out, "null argument")) return st;
  return guarded([&] {
    *out = new tc_report{check_theorem(p->pg, theorem_from_name(theorem))};
    return TC_OK;
  });
}

tc_status tc_scan_corpus(int max_n, int max_triangles, const char* tags_csv,
                         const char* theorem, int jobs, tc_report** out) {
  if (tc_status st = require(theorem && out, "null argument")) return st;
  return guarded([&] {
    CorpusFilter f;
    f.max_n = max_n;
    if (max_triangles >= 0) f.max_triangles = max_triangles;
    f.tags = split_csv(tags_csv);
    *out = new tc_report{scan_corpus(f, theorem_from_name(theorem), jobs)};
    return TC_OK;
  });
}

tc_status tc_report_instances(const tc_report* r, long* out) {
  if (tc_status st = require(r && out, "null argument")) return st;
  *out = r->rep.instances;
  return TC_OK;
}

tc_status tc_report_failure_count(const tc_report* r, long* out) {
  if (tc_status st = require(r && out, "null argument")) return st;
  *out = static_cast<long>(r->rep.failures.size());
  return TC_OK;
}

tc_status tc_report_seconds(const tc_report* r, double* out) {
  if (tc_status st = require(r && out, "null argument")) return st;
  *out = r->rep.seconds;
  return TC_OK;
}

tc_status tc_report_text(const tc_report* r, tc_text** out) {
  if (tc_status st = require(r && out, "null argument")) return st;
  *out = make_text(r->rep.to_text());
  return TC_OK;
}

tc_status tc_search_tightness(const char* pattern, int max_n, tc_witnesses** out) {
  if (tc_status st = require(pattern && out, "null argument")) return st;
  return guarded([&] {
    *out = new tc_witnesses{search_tightness(pattern, max_n)};
    return TC_OK;
  });
}

tc_status tc_witnesses_count(const tc_witnesses* w, int* out) {
  if (tc_status st = require(w && out, "null argument")) return st;
  *out = static_cast<int>(w->list.size());
  return TC_OK;
}

tc_status tc_witnesses_graph(const tc_witnesses* w, int i, tc_plane** out) {
  if (tc_status st = require(w && out, "null argument")) return st;
  if (tc_status st = require(i >= 0 && i < static_cast<int>(w->list.size()), "index out of range"))
    return st;
  return guarded([&] {
    *out = new tc_plane{PlaneGraph::embed(w->list[static_cast<size_t>(i)].g)};
    return TC_OK;
  });
}

tc_status tc_witnesses_constraint(const tc_witnesses* w, int i, tc_text** out) {
  if (tc_status st = require(w && out, "null argument")) return st;
  if (tc_status st = require(i >= 0 && i < static_cast<int>(w->list.size()), "index out of range"))
    return st;
  *out = make_text(w->list[static_cast<size_t>(i)].constraint);
  return TC_OK;
}

tc_status tc_plane_code_hex(const tc_plane* p, tc_text** out) {
  if (tc_status st = require(p && out, "null argument")) return st;
  return guarded([&] {
    std::vector<uint8_t> bytes = write_planar_code(p->pg);
    std::string hex;
    hex.reserve(bytes.size() * 2);
    char buf[3];
    for (uint8_t b : bytes) {
      std::snprintf(buf, sizeof buf, "%02x", b);
      hex += buf;
    }
    *out = make_text(std::move(hex));
    return TC_OK;
  });
}

} /* extern "C" */
