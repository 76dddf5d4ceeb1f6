#include "core/catalog.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <sstream>

#include "core/surgery.hpp"

namespace tricolor {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// ---- canonical labeling ------------------------------------------------------
//
// Equitable-refinement + individualization search directly on bitset rows.
// The canonical key is the lexicographically smallest row encoding over all
// labelings reachable from the refined partition — small graphs only, which
// is all this toolkit needs (n <= 16 in practice, hard cap 64).

struct Canon {
  int n;
  const std::vector<uint64_t>& adj;  // index rows
  std::vector<uint64_t> best;
  bool have_best = false;

  explicit Canon(const Graph& g, const std::vector<uint64_t>& rows) : n(g.vertex_count()), adj(rows) {}

  // cells: ordered partition of 0..n-1. Refine until equitable: every vertex
  // in a cell has the same neighbor count into every cell.
  static std::vector<std::vector<int>> refine(const std::vector<std::vector<int>>& cells,
                                              const std::vector<uint64_t>& adj) {
    std::vector<std::vector<int>> cur = cells;
    for (;;) {
      // Signature per vertex: (cell index, counts into each cell).
      std::vector<uint64_t> cell_mask(cur.size(), 0);
      for (size_t ci = 0; ci < cur.size(); ++ci)
        for (int v : cur[ci]) cell_mask[ci] |= 1ull << v;
      bool changed = false;
      std::vector<std::vector<int>> next;
      for (const auto& cell : cur) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(cur.size());
          for (size_t ci = 0; ci < cur.size(); ++ci)
            sig.push_back(std::popcount(adj[v] & cell_mask[ci]));
          groups[sig].push_back(v);
        }
        if (groups.size() > 1) changed = true;
        for (auto& [sig, verts] : groups) next.push_back(verts);
      }
      cur = std::move(next);
      if (!changed) return cur;
    }
  }

  void search(std::vector<std::vector<int>> cells) {
    cells = refine(cells, adj);
    int split = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        split = static_cast<int>(i);
        break;
      }
    if (split < 0) {
      // Discrete: cells order IS the labeling old->new.
      std::vector<int> newpos(n);
      for (int i = 0; i < n; ++i) newpos[cells[i][0]] = i;
      std::vector<uint64_t> enc(n, 0);
      for (int v = 0; v < n; ++v) {
        uint64_t r = adj[v];
        while (r) {
          int w = std::countr_zero(r);
          r &= r - 1;
          enc[newpos[v]] |= 1ull << newpos[w];
        }
      }
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    for (int v : cells[split]) {
      std::vector<std::vector<int>> child;
      for (int i = 0; i < split; ++i) child.push_back(cells[i]);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[split])
        if (w != v) rest.push_back(w);
      child.push_back(rest);
      for (size_t i = split + 1; i < cells.size(); ++i) child.push_back(cells[i]);
      search(std::move(child));
    }
  }
};

}  // namespace

std::vector<uint64_t> canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = g.row(i);
  Canon c(g, rows);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  c.search({all});
  return c.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

std::string key_string(const std::vector<uint64_t>& key) {
  std::string s;
  s.reserve(key.size() * 8);
  for (uint64_t w : key)
    for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>(w >> (8 * b) & 0xff));
  return s;
}

// Children of a parent graph: add vertex n adjacent to each non-empty subset.
// Keeps a level deterministic: parents in order, subsets in mask order.
template <typename Keep>
std::vector<Graph> grow_level(const std::vector<Graph>& parents, int child_n, Keep keep) {
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> out;
  for (const Graph& p : parents) {
    const int pn = p.vertex_count();
    for (uint64_t mask = 1; mask < (1ull << pn); ++mask) {
      std::vector<std::pair<int, int>> edges = p.edges();
      for (int i = 0; i < pn; ++i)
        if (mask >> i & 1) edges.emplace_back(i, child_n - 1);
      Graph child = Graph::from_edges(edges);
      if (!keep(child)) continue;
      std::string key = key_string(canonical_form(child));
      if (seen.insert(key).second) out.emplace_back(std::move(key), std::move(child));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> level;
  level.reserve(out.size());
  for (auto& [k, g] : out) level.push_back(std::move(g));
  return level;
}

std::mutex level_mutex;
// Key: (n, census bound), bound -1 = unbounded.
std::map<std::pair<int, int>, std::vector<Graph>> planar_levels;
std::map<int, std::vector<Graph>> general_levels;

const std::vector<Graph>& planar_level_locked(int n, int max_tri) {
  for (int k = 1; k <= n; ++k) {
    auto key = std::make_pair(k, max_tri);
    if (planar_levels.count(key)) continue;
    if (k == 1) {
      planar_levels[key] = {Graph::from_edges({}, {0})};
      continue;
    }
    planar_levels[key] =
        grow_level(planar_levels[{k - 1, max_tri}], k, [&](const Graph& g) {
          if (max_tri >= 0 && g.triangle_count() > max_tri) return false;
          const int cn = g.vertex_count(), cm = g.edge_count();
          if (cn >= 3 && cm > 3 * cn - 6) return false;
          return PlaneGraph::is_planar(g);
        });
  }
  return planar_levels[{n, max_tri}];
}

}  // namespace

const std::vector<Graph>& connected_planar_level(int n) {
  if (n < 1 || n > kEnumMaxN)
    fail(Errc::cap_exceeded, "enumeration level out of range 1.." + std::to_string(kEnumMaxN));
  std::lock_guard<std::mutex> lock(level_mutex);
  return planar_level_locked(n, -1);
}

const std::vector<Graph>& connected_planar_level(int n, int max_triangles) {
  if (n < 1 || n > kEnumMaxN)
    fail(Errc::cap_exceeded, "enumeration level out of range 1.." + std::to_string(kEnumMaxN));
  if (max_triangles < 0) fail(Errc::invalid_spec, "census bound must be non-negative");
  std::lock_guard<std::mutex> lock(level_mutex);
  return planar_level_locked(n, max_triangles);
}

const std::vector<Graph>& connected_level(int n) {
  if (n < 1 || n > 8) fail(Errc::cap_exceeded, "general enumeration capped at 8");
  std::lock_guard<std::mutex> lock(level_mutex);
  if (auto it = general_levels.find(n); it != general_levels.end()) return it->second;
  for (int k = 1; k <= n; ++k) {
    if (general_levels.count(k)) continue;
    if (k == 1) {
      general_levels[1] = {Graph::from_edges({}, {0})};
      continue;
    }
    general_levels[k] = grow_level(general_levels[k - 1], k, [](const Graph&) { return true; });
  }
  return general_levels[n];
}

const std::vector<std::string> kFilterTags = {
    "has-4-face", "k4prime-free", "has-independent-2plus-vertex"};

std::string CorpusFilter::slice_line() const {
  std::string s = "max_n=" + std::to_string(max_n);
  s += " max_triangles=" + (max_triangles ? std::to_string(*max_triangles) : std::string("inf"));
  std::vector<std::string> t = tags;
  std::sort(t.begin(), t.end());
  s += " tags=";
  if (t.empty()) s += "-";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i];
  return s;
}

uint64_t CorpusFilter::hash() const { return fnv1a(slice_line()); }

bool filter_admits(const CorpusFilter& f, const Graph& g, const PlaneGraph& pg) {
  if (f.max_triangles && g.triangle_count() > *f.max_triangles) return false;
  for (const std::string& tag : f.tags) {
    if (tag == "has-4-face") {
      if (pg.simple_faces_of_length(4).empty()) return false;
    } else if (tag == "k4prime-free") {
      if (find_k4prime(g)) return false;
    } else if (tag == "has-independent-2plus-vertex") {
      bool found = false;
      for (int v : g.labels()) {
        if (g.degree(v) < 2) continue;
        std::vector<int> nb = g.neighbors(v);
        bool indep = true;
        for (size_t i = 0; i < nb.size() && indep; ++i)
          for (size_t j = i + 1; j < nb.size() && indep; ++j)
            if (g.adjacent(nb[i], nb[j])) indep = false;
        if (indep) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    } else {
      fail(Errc::invalid_spec, "unknown corpus tag '" + tag + "'");
    }
  }
  return true;
}

void enumerate_small_planar(const CorpusFilter& f,
                            const std::function<bool(const Graph&, const PlaneGraph&)>& visit) {
  if (f.max_n < 1 || f.max_n > kEnumMaxN)
    fail(Errc::cap_exceeded, "max_n out of range 1.." + std::to_string(kEnumMaxN));
  for (const std::string& tag : f.tags)
    if (std::find(kFilterTags.begin(), kFilterTags.end(), tag) == kFilterTags.end())
      fail(Errc::invalid_spec, "unknown corpus tag '" + tag + "'");
  for (int n = 1; n <= f.max_n; ++n) {
    const std::vector<Graph>& level =
        f.max_triangles ? connected_planar_level(n, *f.max_triangles)
                        : connected_planar_level(n);
    for (const Graph& g : level) {
      PlaneGraph pg = PlaneGraph::embed(g);
      if (!filter_admits(f, g, pg)) continue;
      if (!visit(g, pg)) return;
    }
  }
}

std::string Manifest::to_text() const {
  std::string out;
  for (const auto& [name, f] : slices) out += "slice " + name + " " + f.slice_line() + "\n";
  return out;
}

Manifest Manifest::parse(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word, name, kn, kt, ktags;
    if (!(ls >> word >> name >> kn >> kt >> ktags) || word != "slice")
      fail(Errc::parse_error, "manifest line " + std::to_string(lineno) + ": bad syntax");
    auto value = [&](const std::string& kv, const std::string& key) {
      if (kv.rfind(key + "=", 0) != 0)
        fail(Errc::parse_error, "manifest line " + std::to_string(lineno) + ": expected " + key);
      return kv.substr(key.size() + 1);
    };
    auto to_int = [&](const std::string& s) -> int {
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty())
        fail(Errc::parse_error, "manifest line " + std::to_string(lineno) + ": bad number '" + s + "'");
      return v;
    };
    CorpusFilter f;
    f.max_n = to_int(value(kn, "max_n"));
    std::string mt = value(kt, "max_triangles");
    if (mt != "inf") f.max_triangles = to_int(mt);
    std::string tags = value(ktags, "tags");
    if (tags != "-") {
      std::istringstream ts(tags);
      std::string tag;
      while (std::getline(ts, tag, ',')) f.tags.push_back(tag);
    }
    m.slices.emplace_back(name, f);
  }
  return m;
}

const CorpusFilter* Manifest::find(const std::string& name) const {
  for (const auto& [n, f] : slices)
    if (n == name) return &f;
  return nullptr;
}

// ---- planar_code ------------------------------------------------------------

namespace {
const std::string kHeader = ">>planar_code<<";
}

std::vector<uint8_t> write_planar_code(const std::vector<const PlaneGraph*>& graphs) {
  std::vector<uint8_t> out(kHeader.begin(), kHeader.end());
  for (const PlaneGraph* pg : graphs) {
    const Graph& g = pg->graph();
    const int n = g.vertex_count();
    if (n > 255) fail(Errc::cap_exceeded, "planar_code byte format caps at 255 vertices");
    out.push_back(static_cast<uint8_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int w : pg->rotation()[i]) out.push_back(static_cast<uint8_t>(g.index_of(w) + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::vector<uint8_t> write_planar_code(const PlaneGraph& g) {
  return write_planar_code(std::vector<const PlaneGraph*>{&g});
}

std::vector<PlaneGraph> read_planar_code(const std::vector<uint8_t>& bytes) {
  auto at_offset = [](size_t off) { return " at offset " + std::to_string(off); };
  if (bytes.size() < kHeader.size() ||
      !std::equal(kHeader.begin(), kHeader.end(), bytes.begin()))
    fail(Errc::bad_header, "planar_code header missing" + at_offset(0));
  size_t pos = kHeader.size();
  std::vector<PlaneGraph> out;
  while (pos < bytes.size()) {
    size_t graph_start = pos;
    int n = bytes[pos++];
    if (n == 0) fail(Errc::parse_error, "vertex count 0" + at_offset(graph_start));
    if (n > kMaxVertices)
      fail(Errc::cap_exceeded, "vertex count " + std::to_string(n) + " exceeds cap" +
                                   at_offset(graph_start));
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        if (pos >= bytes.size())
          fail(Errc::truncated, "stream ends inside adjacency list" + at_offset(pos));
        int b = bytes[pos++];
        if (b == 0) break;
        if (b > n)
          fail(Errc::parse_error, "neighbor byte " + std::to_string(b) + " out of range" +
                                      at_offset(pos - 1));
        if (b - 1 == v)
          fail(Errc::not_simple, "self-loop" + at_offset(pos - 1));
        if (std::find(rot[v].begin(), rot[v].end(), b - 1) != rot[v].end())
          fail(Errc::not_simple, "repeated neighbor" + at_offset(pos - 1));
        rot[v].push_back(b - 1);
      }
    }
    // Symmetry: u lists v iff v lists u.
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      for (int w : rot[v]) {
        bool back = std::find(rot[w].begin(), rot[w].end(), v) != rot[w].end();
        if (!back)
          fail(Errc::parse_error, "asymmetric adjacency " + std::to_string(v + 1) + "->" +
                                      std::to_string(w + 1) + at_offset(graph_start));
        if (v < w) edges.emplace_back(v, w);
      }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    Graph g = Graph::from_edges(edges, labels);
    if (!g.is_connected())
      fail(Errc::disconnected, "planar_code graph is disconnected" + at_offset(graph_start));
    out.push_back(PlaneGraph::from_rotation(g, rot));  // Euler-checks
  }
  return out;
}

// ---- named families ---------------------------------------------------------

Graph make_k4() {
  return Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph make_k4prime() {
  return Graph::from_edges(
      {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

std::vector<Graph> generate_4ore(int depth, uint64_t seed, int max_n) {
  (void)seed;  // recorded upstream for provenance; the stream is exhaustive
  if (depth < 0) fail(Errc::invalid_spec, "negative composition depth");
  if (4 + 3 * depth > max_n)
    fail(Errc::cap_exceeded, "depth " + std::to_string(depth) + " exceeds n cap " +
                                 std::to_string(max_n));
  // levels[d] = compositions using exactly d DHGO steps.
  std::vector<std::vector<Graph>> levels(depth + 1);
  levels[0] = {make_k4()};
  for (int d = 1; d <= depth; ++d) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> found;
    for (int a = 0; a < d; ++a) {
      int b = d - 1 - a;
      for (const Graph& g1 : levels[a])
        for (const Graph& g2 : levels[b])
          for (auto [x, y] : g1.edges()) {
            for (int z : g2.labels()) {
              std::vector<int> nz = g2.neighbors(z);
              const int dz = static_cast<int>(nz.size());
              // All ordered (part1, part2) splits: proper non-empty subsets.
              for (uint64_t mask = 1; mask + 1 < (1ull << dz); ++mask) {
                std::vector<int> part1;
                for (int i = 0; i < dz; ++i)
                  if (mask >> i & 1) part1.push_back(nz[i]);
                Graph comp = dhgo_compose(g1, g2, DhgoSpec{x, y, z, part1});
                std::string key = key_string(canonical_form(comp));
                if (seen.insert(key).second) found.emplace_back(std::move(key), std::move(comp));
              }
            }
          }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    for (auto& [k, g] : found) levels[d].push_back(std::move(g));
  }
  return levels[depth];
}

}  // namespace tricolor
