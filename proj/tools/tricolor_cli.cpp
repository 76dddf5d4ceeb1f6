// tricolor-cli: command-line front end for the tricolor shared library.
//
// Subcommands: color, verify, generate, search-tight, criticality, stats.
// Exit codes: 0 success / colorable / zero failures; 1 usage or data error
// (message on stderr); 2 UNSAT (color) or failures found (verify); 3 no
// tightness witness under the cap (search-tight).
//
// All results go to stdout and are byte-deterministic for a given input;
// timings and progress notes go to stderr. Graph inputs are either
// planar_code files (">>planar_code<<" header) or edge-list text
// ("u v" per line); the format is sniffed from the leading bytes.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tricolor/tricolor.h"

namespace {

struct Fatal {
  std::string msg;
};

// Owning handle over a C API object; frees on scope exit.
template <class T, void (*Free)(T*)>
struct Owned {
  T* p = nullptr;
  Owned() = default;
  explicit Owned(T* q) : p(q) {}
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() {
    if (p) Free(p);
  }
  T** slot() {
    if (p) {
      Free(p);
      p = nullptr;
    }
    return &p;
  }
  operator T*() const { return p; }
};

using GraphPtr = Owned<tc_graph, tc_graph_free>;
using PlanePtr = Owned<tc_plane, tc_plane_free>;
using ConstraintsPtr = Owned<tc_constraints, tc_constraints_free>;
using ColoringPtr = Owned<tc_coloring, tc_coloring_free>;
using StreamPtr = Owned<tc_stream, tc_stream_free>;
using ReportPtr = Owned<tc_report, tc_report_free>;
using WitnessesPtr = Owned<tc_witnesses, tc_witnesses_free>;
using TextPtr = Owned<tc_text, tc_text_free>;

tc_status ok(tc_status s) {
  if (s < 0) throw Fatal{tc_last_error()};
  return s;
}

std::string text(const tc_text* t) { return t ? tc_text_get(t) : ""; }

std::vector<unsigned char> slurp(const std::string& path, bool use_stdin) {
  if (use_stdin)
    return std::vector<unsigned char>((std::istreambuf_iterator<char>(std::cin)),
                                      std::istreambuf_iterator<char>());
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Fatal{"cannot open '" + path + "'"};
  return std::vector<unsigned char>((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
}

void require_one_source(const std::string& in, bool use_stdin) {
  if (use_stdin && !in.empty()) throw Fatal{"--in and --stdin are mutually exclusive"};
  if (!use_stdin && in.empty()) throw Fatal{"one of --in or --stdin is required"};
}

// planar_code file -> its graphs with their stored embeddings;
// edge-list text -> a single freshly embedded graph.
tc_stream* load_stream(const std::string& in, bool use_stdin) {
  std::vector<unsigned char> bytes = slurp(in, use_stdin);
  static const std::string kHeader = ">>planar_code<<";
  if (bytes.size() >= kHeader.size() &&
      std::equal(kHeader.begin(), kHeader.end(), bytes.begin())) {
    tc_stream* s = nullptr;
    ok(tc_read_planar_code_bytes(bytes.data(), bytes.size(), &s));
    return s;
  }
  std::string edge_text(bytes.begin(), bytes.end());
  GraphPtr g;
  ok(tc_graph_from_edge_text(edge_text.c_str(), g.slot()));
  PlanePtr p;
  ok(tc_plane_embed(g, p.slot()));
  tc_stream* s = nullptr;
  ok(tc_stream_new(&s));
  ok(tc_stream_push(s, p));
  return s;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Fatal{"cannot parse " + what + " '" + s + "' as an integer"};
  }
}

std::vector<int> parse_csv_ints(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
  return out;
}

std::pair<int, int> parse_pair(const std::string& s, char sep, const std::string& flag) {
  size_t at = s.find(sep);
  if (at == std::string::npos || s.find(sep, at + 1) != std::string::npos)
    throw Fatal{flag + " expects '<int>" + sep + "<int>', got '" + s + "'"};
  return {parse_int(s.substr(0, at), flag), parse_int(s.substr(at + 1), flag)};
}

// --face f1,...,fk=c1,...,ck: precolor a facial cycle (k = 3..5).
void apply_face(const tc_plane* p, tc_constraints* cs, const std::string& spec) {
  size_t at = spec.find('=');
  if (at == std::string::npos)
    throw Fatal{"--face expects 'v1,..,vk=c1,..,ck', got '" + spec + "'"};
  std::vector<int> verts = parse_csv_ints(spec.substr(0, at), "--face vertex");
  std::vector<int> colors = parse_csv_ints(spec.substr(at + 1), "--face color");
  if (verts.size() != colors.size() || verts.size() < 3 || verts.size() > 5)
    throw Fatal{"--face needs matching vertex and color lists of length 3..5"};
  int facial = 0;
  ok(tc_plane_is_facial_cycle(p, verts.data(), static_cast<int>(verts.size()), &facial));
  if (!facial) throw Fatal{"--face vertices do not trace a facial cycle of the embedding"};
  for (size_t i = 0; i < verts.size(); ++i) ok(tc_constraints_fix(cs, verts[i], colors[i]));
}

// ---- color -------------------------------------------------------------

struct ColorArgs {
  std::string in;
  bool use_stdin = false;
  std::vector<std::string> fixes, equals, distincts, faces;
  bool trace = false;
};

int cmd_color(const ColorArgs& a) {
  require_one_source(a.in, a.use_stdin);
  StreamPtr s{load_stream(a.in, a.use_stdin)};
  int count = 0;
  ok(tc_stream_size(s, &count));
  if (count != 1)
    throw Fatal{"color expects exactly one graph; input holds " + std::to_string(count)};
  PlanePtr p;
  ok(tc_stream_next(s, p.slot()));
  ConstraintsPtr cs;
  ok(tc_constraints_new(cs.slot()));
  for (const std::string& f : a.fixes) {
    auto [v, c] = parse_pair(f, '=', "--fix");
    ok(tc_constraints_fix(cs, v, c));
  }
  for (const std::string& e : a.equals) {
    auto [u, v] = parse_pair(e, ',', "--equal");
    ok(tc_constraints_equal(cs, u, v));
  }
  for (const std::string& d : a.distincts) {
    auto [u, v] = parse_pair(d, ',', "--distinct");
    ok(tc_constraints_distinct(cs, u, v));
  }
  for (const std::string& f : a.faces) apply_face(p, cs, f);

  ColoringPtr col;
  TextPtr tr;
  tc_status verdict = ok(tc_reduce_and_color(p, cs, col.slot(), a.trace ? tr.slot() : nullptr));
  if (a.trace) std::cout << text(tr);
  if (verdict == TC_UNSAT) {
    std::cout << "UNSAT\n";
    return 2;
  }
  TextPtr ct;
  ok(tc_coloring_text(col, ct.slot()));
  std::cout << text(ct);
  return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  int max_n = 0;
  int max_triangles = -1;
  std::string tags;
  std::string corpus;
  int jobs = 0;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.corpus.empty()) {
    ReportPtr r;
    ok(tc_scan_corpus(a.max_n, a.max_triangles, a.tags.c_str(), a.theorem.c_str(), a.jobs,
                      r.slot()));
    TextPtr t;
    ok(tc_report_text(r, t.slot()));
    std::cout << text(t);
    double secs = 0;
    ok(tc_report_seconds(r, &secs));
    std::fprintf(stderr, "seconds=%.3f\n", secs);
    long failures = 0;
    ok(tc_report_failure_count(r, &failures));
    return failures == 0 ? 0 : 2;
  }

  // External corpus: check every stored graph with n <= max-n, one report.
  StreamPtr s;
  ok(tc_read_planar_code_file(a.corpus.c_str(), s.slot()));
  long instances = 0, failures = 0;
  double secs = 0;
  std::string fail_lines;
  for (;;) {
    PlanePtr p;
    if (ok(tc_stream_next(s, p.slot())) == TC_END) break;
    GraphPtr g;
    ok(tc_plane_graph(p, g.slot()));
    int n = 0;
    ok(tc_graph_vertex_count(g, &n));
    if (a.max_n > 0 && n > a.max_n) continue;
    ReportPtr r;
    ok(tc_check_theorem(p, a.theorem.c_str(), r.slot()));
    long i = 0, f = 0;
    double sec = 0;
    ok(tc_report_instances(r, &i));
    ok(tc_report_failure_count(r, &f));
    ok(tc_report_seconds(r, &sec));
    instances += i;
    failures += f;
    secs += sec;
    if (f > 0) {
      TextPtr t;
      ok(tc_report_text(r, t.slot()));
      std::istringstream lines(text(t));
      std::string line;
      while (std::getline(lines, line))
        if (line.rfind("FAIL ", 0) == 0) fail_lines += line + "\n";
    }
  }
  std::cout << fail_lines;
  std::cout << "theorem=" << a.theorem << "\n";
  std::cout << "instances=" << instances << "\n";
  std::cout << "failures=" << failures << "\n";
  std::fprintf(stderr, "seconds=%.3f\n", secs);
  return failures == 0 ? 0 : 2;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  int max_n = 0;
  int max_triangles = -1;
  std::string tags;
  uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  StreamPtr s;
  if (a.family == "enum") {
    ok(tc_generate_enum(a.max_n, a.max_triangles, a.tags.c_str(), s.slot()));
  } else if (a.family == "4ore") {
    ok(tc_generate_4ore(a.max_n, a.seed, s.slot()));
  } else if (a.family == "k4prime") {
    if (a.max_n < 7) throw Fatal{"family k4prime emits a 7-vertex graph; --max-n must be >= 7"};
    ok(tc_generate_k4prime(s.slot()));
  } else {
    throw Fatal{"unknown family '" + a.family + "' (expected enum, 4ore or k4prime)"};
  }
  ok(tc_stream_write_file(s, a.out.c_str()));
  int count = 0;
  ok(tc_stream_size(s, &count));
  std::fprintf(stderr, "graphs=%d\n", count);
  return 0;
}

// ---- search-tight ----------------------------------------------------------

struct SearchArgs {
  std::string pattern;
  int max_n = 0;
  std::string out;
};

int cmd_search_tight(const SearchArgs& a) {
  WitnessesPtr w;
  ok(tc_search_tightness(a.pattern.c_str(), a.max_n, w.slot()));
  int count = 0;
  ok(tc_witnesses_count(w, &count));
  if (count == 0) {
    std::fprintf(stderr, "no witness found under cap n<=%d\n", a.max_n);
    return 3;
  }
  StreamPtr outs;
  if (!a.out.empty()) ok(tc_stream_new(outs.slot()));
  for (int i = 0; i < count; ++i) {
    PlanePtr p;
    ok(tc_witnesses_graph(w, i, p.slot()));
    TextPtr hex, constraint;
    ok(tc_plane_code_hex(p, hex.slot()));
    ok(tc_witnesses_constraint(w, i, constraint.slot()));
    std::cout << "code=" << text(hex) << "\n";
    std::cout << "constraint=" << text(constraint) << "\n";
    if (outs) ok(tc_stream_push(outs, p));
  }
  if (outs) ok(tc_stream_write_file(outs, a.out.c_str()));
  return 0;
}

// ---- criticality ------------------------------------------------------------

struct CriticalityArgs {
  std::string in;
  bool use_stdin = false;
  int k = 4;
};

int cmd_criticality(const CriticalityArgs& a) {
  require_one_source(a.in, a.use_stdin);
  StreamPtr s{load_stream(a.in, a.use_stdin)};
  int count = 0;
  ok(tc_stream_size(s, &count));
  for (int i = 1;; ++i) {
    PlanePtr p;
    if (ok(tc_stream_next(s, p.slot())) == TC_END) break;
    GraphPtr g;
    ok(tc_plane_graph(p, g.slot()));
    if (count > 1) std::cout << "graph=" << i << "\n";
    int critical = 0;
    ok(tc_is_k_critical(g, a.k, &critical));
    std::cout << a.k << "-critical: " << (critical ? "yes" : "no") << "\n";
    if (critical && a.k == 4) {
      int n = 0, m = 0;
      ok(tc_graph_vertex_count(g, &n));
      ok(tc_graph_edge_count(g, &m));
      std::cout << "3m=" << 3L * m << " 5n-2=" << 5L * n - 2 << "\n";
    }
  }
  return 0;
}

// ---- stats ---------------------------------------------------------------

struct StatsArgs {
  std::string in;
  bool use_stdin = false;
};

int cmd_stats(const StatsArgs& a) {
  require_one_source(a.in, a.use_stdin);
  StreamPtr s{load_stream(a.in, a.use_stdin)};
  int count = 0;
  ok(tc_stream_size(s, &count));
  for (int i = 1;; ++i) {
    PlanePtr p;
    if (ok(tc_stream_next(s, p.slot())) == TC_END) break;
    if (count > 1) std::cout << "graph=" << i << "\n";
    TextPtr t;
    ok(tc_stats_text(p, t.slot()));
    std::cout << text(t);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tricolor: plane-graph 3-coloring toolkit"};
  app.require_subcommand(1);

  ColorArgs color;
  CLI::App* c = app.add_subcommand("color", "3-color one graph under precoloring constraints");
  c->add_option("--in", color.in, "input file (planar_code or edge-list text)");
  c->add_flag("--stdin", color.use_stdin, "read the input from stdin instead");
  c->add_option("--fix", color.fixes, "v=c: fix vertex v to color c (repeatable)");
  c->add_option("--equal", color.equals, "u,v: require equal colors (repeatable)");
  c->add_option("--distinct", color.distincts, "u,v: require distinct colors (repeatable)");
  c->add_option("--face", color.faces, "v1,..,vk=c1,..,ck: precolor a facial cycle, k=3..5");
  c->add_flag("--trace", color.trace, "print the reduction step log before the verdict");

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "check a theorem over a corpus");
  v->add_option("--theorem", verify.theorem,
                "theorem id (T6_pair, T8_add3vertex, T9_small_face, T11_mono_neighborhood, "
                "T13_adynamic, C1_three_common, L10_witness, KY_bound, T15_pl44f)")
      ->required();
  v->add_option("--max-n", verify.max_n, "largest vertex count to scan")->required();
  v->add_option("--max-triangles", verify.max_triangles,
                "triangle-census cap for the enumerated corpus (-1 = unbounded)");
  v->add_option("--tags", verify.tags,
                "comma-separated corpus tags (has-4-face, k4prime-free, "
                "has-independent-2plus-vertex)");
  v->add_option("--corpus", verify.corpus, "planar_code file to scan instead of enumerating");
  v->add_option("--jobs", verify.jobs, "worker threads (0 = auto); never changes results");

  GenerateArgs generate;
  CLI::App* g = app.add_subcommand("generate", "write a graph family as planar_code");
  g->add_option("--family", generate.family, "one of enum, 4ore, k4prime")->required();
  g->add_option("--max-n", generate.max_n, "largest vertex count")->required();
  g->add_option("--max-triangles", generate.max_triangles,
                "triangle-census cap for family enum (-1 = unbounded)");
  g->add_option("--tags", generate.tags, "comma-separated corpus tags for family enum");
  g->add_option("--seed", generate.seed, "provenance seed recorded for family 4ore");
  g->add_option("--out", generate.out, "output planar_code file")->required();

  SearchArgs search;
  CLI::App* t = app.add_subcommand("search-tight", "search for tightness witnesses");
  t->add_option("--pattern", search.pattern,
                "pattern id (three-precolored-vertices-one-triangle, pair-two-triangles, "
                "added-4-vertex-one-triangle, added-3-vertex-two-triangles, "
                "fiveface-one-triangle, mono-4-neighborhood-K4'-free-one-triangle, "
                "mono-2-neighborhood-two-triangles)")
      ->required();
  t->add_option("--max-n", search.max_n, "largest vertex count to search")->required();
  t->add_option("--out", search.out, "also write the witness graphs as planar_code");

  CriticalityArgs criticality;
  CLI::App* k = app.add_subcommand("criticality", "k-criticality verdict and edge bound");
  k->add_option("--in", criticality.in, "input file (planar_code or edge-list text)");
  k->add_flag("--stdin", criticality.use_stdin, "read the input from stdin instead");
  k->add_option("--k", criticality.k, "chromatic criticality level (default 4)");

  StatsArgs stats;
  CLI::App* st = app.add_subcommand("stats", "vertex/edge/triangle/face statistics");
  st->add_option("--in", stats.in, "input file (planar_code or edge-list text)");
  st->add_flag("--stdin", stats.use_stdin, "read the input from stdin instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c->parsed()) return cmd_color(color);
    if (v->parsed()) return cmd_verify(verify);
    if (g->parsed()) return cmd_generate(generate);
    if (t->parsed()) return cmd_search_tight(search);
    if (k->parsed()) return cmd_criticality(criticality);
    if (st->parsed()) return cmd_stats(stats);
  } catch (const Fatal& f) {
    std::fprintf(stderr, "error: %s\n", f.msg.c_str());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
