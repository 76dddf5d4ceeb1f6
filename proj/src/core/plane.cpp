#include "core/plane.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>

namespace tricolor {

bool Face::is_simple_cycle() const {
  if (walk.size() < 3) return false;
  std::vector<int> s = walk;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool Face::contains(int label) const {
  return std::find(walk.begin(), walk.end(), label) != walk.end();
}

namespace {

// ---- Path-addition embedding on one biconnected block -----------------------
//
// Works on local indices 0..n-1 with bitset adjacency rows. Faces are vertex
// cycles (distinct vertices: every partially embedded subgraph here is
// 2-connected). Returns rotations as successor lists, or nullopt if some
// fragment has no admissible face (the graph is non-planar).

struct BlockEmbedder {
  int n;
  std::vector<uint64_t> adj;                 // block adjacency
  std::vector<uint64_t> emb_adj;             // embedded edges so far
  uint64_t emb_verts = 0;
  std::vector<std::vector<int>> faces;       // vertex cycles
  int emb_edge_count = 0;
  int total_edges = 0;

  explicit BlockEmbedder(std::vector<uint64_t> a) : n(static_cast<int>(a.size())), adj(std::move(a)) {
    emb_adj.assign(n, 0);
    for (uint64_t r : adj) total_edges += std::popcount(r);
    total_edges /= 2;
  }

  void add_edge(int u, int v) {
    if (emb_adj[u] >> v & 1) return;
    emb_adj[u] |= 1ull << v;
    emb_adj[v] |= 1ull << u;
    ++emb_edge_count;
  }

  // First cycle: walk from vertex 0 always taking the smallest unvisited
  // neighbor; the first repeated vertex closes a cycle.
  std::vector<int> initial_cycle() const {
    std::vector<int> path{0};
    std::vector<int> pos(n, -1);
    pos[0] = 0;
    int cur = 0, prev = -1;
    for (;;) {
      uint64_t r = adj[cur];
      int next = -1;
      while (r) {
        int w = std::countr_zero(r);
        r &= r - 1;
        if (w != prev) { next = w; break; }
      }
      assert(next != -1);  // min degree >= 2 in a biconnected block
      if (pos[next] >= 0)
        return std::vector<int>(path.begin() + pos[next], path.end());
      pos[next] = static_cast<int>(path.size());
      path.push_back(next);
      prev = cur;
      cur = next;
    }
  }

  struct Fragment {
    std::vector<int> attachments;  // sorted embedded vertices
    bool chord;
    int cu = -1, cv = -1;          // chord endpoints
    uint64_t comp = 0;             // component vertices (non-chord)
    std::vector<int> admissible;   // face indices that contain all attachments
  };

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    // Chord fragments: unembedded edges between embedded vertices.
    for (int u = 0; u < n; ++u) {
      if (!(emb_verts >> u & 1)) continue;
      uint64_t r = adj[u] & ~emb_adj[u] & emb_verts;
      while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        if (v <= u) continue;
        Fragment f;
        f.chord = true;
        f.cu = u;
        f.cv = v;
        f.attachments = {u, v};
        out.push_back(std::move(f));
      }
    }
    // Component fragments: connected components of (block - embedded verts).
    uint64_t rest = ~emb_verts & ((n == 64) ? ~0ull : (1ull << n) - 1);
    uint64_t todo = rest;
    while (todo) {
      int s = std::countr_zero(todo);
      uint64_t comp = 1ull << s, frontier = comp;
      while (frontier) {
        uint64_t nxt = 0;
        while (frontier) {
          int x = std::countr_zero(frontier);
          frontier &= frontier - 1;
          nxt |= adj[x] & rest & ~comp;
        }
        comp |= nxt;
        frontier = nxt;
      }
      todo &= ~comp;
      Fragment f;
      f.chord = false;
      f.comp = comp;
      uint64_t att = 0, c = comp;
      while (c) {
        int x = std::countr_zero(c);
        c &= c - 1;
        att |= adj[x] & emb_verts;
      }
      while (att) {
        int a = std::countr_zero(att);
        att &= att - 1;
        f.attachments.push_back(a);
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  // Path between two attachments through the fragment (chord: the edge
  // itself). BFS with ascending scans keeps it deterministic.
  std::vector<int> fragment_path(const Fragment& f) const {
    if (f.chord) return {f.cu, f.cv};
    int a = f.attachments[0];
    // BFS over component vertices from a's component neighbors to any vertex
    // adjacent to a second attachment b (pick b = smallest reachable).
    std::vector<int> parent(n, -1);
    std::vector<int> queue;
    uint64_t start = adj[a] & f.comp;
    uint64_t seen = start;
    for (uint64_t s = start; s;) {
      int x = std::countr_zero(s);
      s &= s - 1;
      parent[x] = a;
      queue.push_back(x);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      uint64_t hits = adj[x] & emb_verts & ~(1ull << a);
      if (hits) {
        int b = std::countr_zero(hits);
        std::vector<int> rev{b, x};
        for (int p = parent[x]; p != a; p = parent[p]) rev.push_back(p);
        rev.push_back(a);
        std::reverse(rev.begin(), rev.end());
        return rev;
      }
      uint64_t nxt = adj[x] & f.comp & ~seen;
      seen |= nxt;
      while (nxt) {
        int y = std::countr_zero(nxt);
        nxt &= nxt - 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    assert(false && "fragment has a single attachment in a biconnected block");
    return {};
  }

  // Replace face fi by the two faces obtained by routing `path` (whose ends
  // lie on the face) across it: one face keeps index fi, the other is
  // appended, which keeps face order deterministic.
  void split_face(int fi, const std::vector<int>& path) {
    std::vector<int> f = faces[fi];
    int a = path.front(), b = path.back();
    int pa = -1, pb = -1;
    for (int i = 0; i < static_cast<int>(f.size()); ++i) {
      if (f[i] == a) pa = i;
      if (f[i] == b) pb = i;
    }
    assert(pa >= 0 && pb >= 0 && pa != pb);
    const int l = static_cast<int>(f.size());
    // fa = a, path interior, b, then f from b around to a (exclusive).
    std::vector<int> fa(path.begin(), path.end() - 1);
    for (int i = pb; i != pa; i = (i + 1) % l) fa.push_back(f[i]);
    // fb = b, reversed path interior, a, then f from a around to b (exclusive).
    std::vector<int> fb(path.rbegin(), path.rend() - 1);
    for (int i = pa; i != pb; i = (i + 1) % l) fb.push_back(f[i]);
    faces[fi] = std::move(fa);
    faces.push_back(std::move(fb));
    for (size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);
    for (int x : path) emb_verts |= 1ull << x;
  }

  // nullopt = non-planar. Otherwise rotations (successor cycles per vertex).
  std::optional<std::vector<std::vector<int>>> run() {
    std::vector<int> cyc = initial_cycle();
    faces.push_back(cyc);
    faces.emplace_back(cyc.rbegin(), cyc.rend());
    for (int x : cyc) emb_verts |= 1ull << x;
    for (size_t i = 0; i < cyc.size(); ++i) add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);

    while (emb_edge_count < total_edges) {
      std::vector<Fragment> frs = fragments();
      assert(!frs.empty());
      // Admissible faces per fragment.
      for (Fragment& f : frs) {
        for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
          bool ok = true;
          for (int a : f.attachments) {
            if (std::find(faces[fi].begin(), faces[fi].end(), a) == faces[fi].end()) {
              ok = false;
              break;
            }
          }
          if (ok) f.admissible.push_back(fi);
        }
        if (f.admissible.empty()) return std::nullopt;
      }
      // Prefer a forced fragment (exactly one admissible face); ties by
      // smallest attachment list for a stable choice.
      int pick = 0;
      for (int i = 1; i < static_cast<int>(frs.size()); ++i) {
        auto key = [&](int k) {
          return std::make_tuple(frs[k].admissible.size() == 1 ? 0 : 1, frs[k].attachments,
                                 frs[k].chord ? std::make_pair(frs[k].cu, frs[k].cv)
                                              : std::make_pair(-1, -1));
        };
        if (key(i) < key(pick)) pick = i;
      }
      split_face(frs[pick].admissible.front(), fragment_path(frs[pick]));
    }
    return rotations();
  }

  // rotation(v): the permutation u -> w collected from face triples
  // (u, v, w) must be a single cycle over N(v) in a planar disc embedding.
  std::optional<std::vector<std::vector<int>>> rotations() const {
    std::vector<std::vector<int>> succ(n, std::vector<int>(n, -1));
    for (const auto& f : faces) {
      const int l = static_cast<int>(f.size());
      for (int i = 0; i < l; ++i) {
        int u = f[i], v = f[(i + 1) % l], w = f[(i + 2) % l];
        succ[v][u] = w;
      }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      uint64_t r = adj[v];
      if (!r) continue;
      int deg = std::popcount(r);
      int start = std::countr_zero(r);
      int cur = start;
      for (int step = 0; step < deg; ++step) {
        rot[v].push_back(cur);
        cur = succ[v][cur];
        if (cur < 0) return std::nullopt;
      }
      if (cur != start || static_cast<int>(rot[v].size()) != deg) return std::nullopt;
    }
    return rot;
  }
};

// Biconnected components (edge partition) via lowpoint DFS, neighbors
// ascending. Returns blocks as edge lists; bridges are 1-edge blocks.
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;

  // Iterative DFS to sidestep recursion limits; explicit neighbor cursors.
  struct Frame { int v, parent, cursor; };
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    num[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      uint64_t r = fr.cursor >= kMaxVertices ? 0 : g.row(fr.v) >> fr.cursor << fr.cursor;
      if (r) {
        int w = std::countr_zero(r);
        fr.cursor = w + 1;
        if (w == fr.parent) continue;
        if (num[w] < 0) {
          estack.emplace_back(fr.v, w);
          num[w] = low[w] = timer++;
          stack.push_back({w, fr.v, 0});
        } else if (num[w] < num[fr.v]) {
          estack.emplace_back(fr.v, w);
          low[fr.v] = std::min(low[fr.v], num[w]);
        }
      } else {
        int v = fr.v, p = fr.parent;
        stack.pop_back();
        if (p < 0) continue;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= num[p]) {
          // p is a cut vertex (or root): pop the block containing edge (p,v).
          std::vector<std::pair<int, int>> blk;
          for (;;) {
            auto e = estack.back();
            estack.pop_back();
            blk.push_back(e);
            if (e == std::make_pair(p, v)) break;
          }
          blocks.push_back(std::move(blk));
        }
      }
    }
  }
  // Deterministic block order: by smallest (min label index, ...) of edges.
  for (auto& b : blocks)
    for (auto& [u, v] : b)
      if (u > v) std::swap(u, v);
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rot)
    : g_(std::move(g)), rot_(std::move(rot)) {
  build_faces();
}

void PlaneGraph::build_faces() {
  faces_.clear();
  const int n = g_.vertex_count();
  if (n == 1) {
    faces_.push_back(Face{});  // single vertex: one face, empty boundary walk
    return;
  }
  // next(u->v) = (v, successor of u in rotation(v)).
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(rot_[v].size(), 0);

  auto pos_in_rot = [&](int v_idx, int u_label) -> int {
    const auto& r = rot_[v_idx];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      if (r[i] == u_label) return i;
    fail(Errc::internal, "rotation missing neighbor");
  };

  long total_len = 0;
  for (int u = 0; u < n; ++u) {
    for (int s = 0; s < static_cast<int>(rot_[u].size()); ++s) {
      if (used[u][s]) continue;
      Face face;
      int cu = u, cs = s;
      do {
        used[cu][cs] = 1;
        int u_label = g_.label_at(cu);
        int v_label = rot_[cu][cs];
        face.walk.push_back(u_label);
        int v_idx = g_.index_of(v_label);
        int p = pos_in_rot(v_idx, u_label);
        cu = v_idx;
        cs = (p + 1) % static_cast<int>(rot_[v_idx].size());
      } while (!(cu == u && cs == s));
      total_len += face.length();
      faces_.push_back(std::move(face));
    }
  }
  const int m = g_.edge_count();
  if (total_len != 2l * m) fail(Errc::internal, "face walks do not cover directed edges");
  if (n - m + static_cast<int>(faces_.size()) != 2)
    fail(Errc::non_planar, "rotation system violates Euler's formula");
}

PlaneGraph PlaneGraph::embed(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) fail(Errc::unknown_vertex, "empty graph has no embedding");
  if (!g.is_connected()) fail(Errc::disconnected, "embedding requires a connected graph");
  const int m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) fail(Errc::non_planar, "too many edges for a planar graph");

  // Per-vertex rotation assembled from per-block rotations; blocks meet only
  // at cut vertices, where concatenation in block order is a valid rotation.
  std::vector<std::vector<int>> rot(n);
  for (const auto& blk : biconnected_blocks(g)) {
    if (blk.size() == 1) {
      auto [u, v] = blk[0];
      rot[u].push_back(g.label_at(v));
      rot[v].push_back(g.label_at(u));
      continue;
    }
    // Local index map for the block.
    std::vector<int> verts;
    for (auto [u, v] : blk) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int bn = static_cast<int>(verts.size());
    auto local = [&](int global) {
      return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), global) - verts.begin());
    };
    std::vector<uint64_t> badj(bn, 0);
    for (auto [u, v] : blk) {
      badj[local(u)] |= 1ull << local(v);
      badj[local(v)] |= 1ull << local(u);
    }
    BlockEmbedder be(std::move(badj));
    auto brot = be.run();
    if (!brot) fail(Errc::non_planar, "graph contains a non-planar block");
    // Anchor each block's cyclic list at its smallest neighbor, then append.
    for (int lv = 0; lv < bn; ++lv) {
      auto& cyc = (*brot)[lv];
      if (cyc.empty()) continue;
      auto mn = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), mn, cyc.end());
      for (int lw : cyc) rot[verts[lv]].push_back(g.label_at(verts[lw]));
    }
  }
  return PlaneGraph(g, std::move(rot));
}

bool PlaneGraph::is_planar(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  if (!g.is_connected()) {
    // Planarity is per-component; test each component separately.
    std::vector<char> seen(g.vertex_count(), 0);
    for (int i = 0; i < g.vertex_count(); ++i) {
      if (seen[i]) continue;
      std::vector<int> comp{i};
      seen[i] = 1;
      for (size_t qi = 0; qi < comp.size(); ++qi) {
        uint64_t r = g.row(comp[qi]);
        while (r) {
          int j = std::countr_zero(r);
          r &= r - 1;
          if (!seen[j]) {
            seen[j] = 1;
            comp.push_back(j);
          }
        }
      }
      std::vector<std::pair<int, int>> edges;
      std::vector<int> labels;
      for (int v : comp) labels.push_back(g.label_at(v));
      for (int v : comp) {
        uint64_t r = g.row(v);
        while (r) {
          int j = std::countr_zero(r);
          r &= r - 1;
          if (j > v) edges.emplace_back(g.label_at(v), g.label_at(j));
        }
      }
      if (!is_planar(Graph::from_edges(edges, labels))) return false;
    }
    return true;
  }
  try {
    embed(g);
    return true;
  } catch (const Error& e) {
    if (e.code == Errc::non_planar) return false;
    throw;
  }
}

PlaneGraph PlaneGraph::from_rotation(const Graph& g, const std::vector<std::vector<int>>& rotation) {
  const int n = g.vertex_count();
  if (static_cast<int>(rotation.size()) != n)
    fail(Errc::invalid_spec, "rotation size differs from vertex count");
  for (int i = 0; i < n; ++i) {
    std::vector<int> want = g.neighbors(g.label_at(i));
    std::vector<int> got = rotation[i];
    std::sort(got.begin(), got.end());
    if (got != want) fail(Errc::invalid_spec, "rotation at vertex " +
                          std::to_string(g.label_at(i)) + " does not list its neighbors");
  }
  return PlaneGraph(g, rotation);
}

std::map<int, int> PlaneGraph::face_length_census() const {
  std::map<int, int> census;
  for (const Face& f : faces_) ++census[f.length()];
  return census;
}

std::vector<const Face*> PlaneGraph::simple_faces_of_length(int len) const {
  std::vector<const Face*> out;
  for (const Face& f : faces_)
    if (f.length() == len && f.is_simple_cycle()) out.push_back(&f);
  return out;
}

namespace {
// Cycles are equal up to rotation and reflection.
bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const int l = static_cast<int>(a.size());
  for (int dir : {1, -1}) {
    for (int off = 0; off < l; ++off) {
      bool ok = true;
      for (int i = 0; i < l && ok; ++i)
        ok = a[i] == b[((off + dir * i) % l + l) % l];
      if (ok) return true;
    }
  }
  return false;
}
}  // namespace

bool PlaneGraph::is_facial_cycle(const std::vector<int>& cycle) const {
  for (const Face& f : faces_)
    if (f.is_simple_cycle() && same_cycle(f.walk, cycle)) return true;
  return false;
}

CycleSplit PlaneGraph::split_by_cycle(const std::vector<int>& cycle) const {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) fail(Errc::not_a_cycle, "cycle needs at least 3 vertices");
  {
    std::vector<int> s = cycle;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Errc::not_a_cycle, "repeated vertex in cycle");
  }
  for (int i = 0; i < k; ++i) {
    if (!g_.has_vertex(cycle[i])) fail(Errc::unknown_vertex, "cycle vertex not in graph");
    if (!g_.adjacent(cycle[i], cycle[(i + 1) % k]))
      fail(Errc::not_a_cycle, "consecutive cycle vertices not adjacent");
  }

  // Side of each edge slot at a cycle vertex: slots strictly between next and
  // prev (in rotation order) are on side A; between prev and next on side B.
  // Side A is "interior" by convention; reversing the cycle swaps sides.
  const int n = g_.vertex_count();
  std::vector<int> on_cycle(n, 0);
  for (int c : cycle) on_cycle[g_.index_of(c)] = 1;

  // side_of[v][w]: +1 (A) / -1 (B) for edges from cycle vertex v to off-cycle w.
  std::vector<std::map<int, int>> slot_side(n);
  for (int i = 0; i < k; ++i) {
    int v = cycle[i], prev = cycle[(i - 1 + k) % k], next = cycle[(i + 1) % k];
    const auto& r = rot_[g_.index_of(v)];
    const int d = static_cast<int>(r.size());
    int pn = -1, pp = -1;
    for (int j = 0; j < d; ++j) {
      if (r[j] == next) pn = j;
      if (r[j] == prev) pp = j;
    }
    assert(pn >= 0 && pp >= 0);
    int side = +1;  // scanning from next: A until we hit prev, then B
    for (int step = 1; step < d; ++step) {
      int j = (pn + step) % d;
      if (j == pp) { side = -1; continue; }
      slot_side[g_.index_of(v)][r[j]] = side;
    }
  }

  // Off-cycle vertices: flood components of G - V(cycle); each component's
  // side comes from any attachment slot (they must all agree).
  std::vector<int> vert_side(n, 0);
  std::vector<int> order;  // deterministic component scan
  for (int i = 0; i < n; ++i)
    if (!on_cycle[i]) order.push_back(i);
  std::vector<char> seen(n, 0);
  for (int s : order) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t qi = 0; qi < comp.size(); ++qi) {
      uint64_t r = g_.row(comp[qi]);
      while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        if (!on_cycle[j] && !seen[j]) {
          seen[j] = 1;
          comp.push_back(j);
        }
      }
    }
    int side = 0;
    for (int v : comp) {
      uint64_t r = g_.row(v);
      while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        if (!on_cycle[j]) continue;
        auto it = slot_side[j].find(g_.label_at(v));
        assert(it != slot_side[j].end());
        if (side == 0) side = it->second;
        else if (side != it->second)
          fail(Errc::internal, "component attaches on both sides of a cycle");
      }
    }
    if (side == 0) fail(Errc::internal, "component with no attachment (graph disconnected?)");
    for (int v : comp) vert_side[v] = side;
  }

  CycleSplit out;
  out.cycle = cycle;
  for (int i = 0; i < n; ++i) {
    if (on_cycle[i]) continue;
    (vert_side[i] > 0 ? out.interior : out.exterior).push_back(g_.label_at(i));
  }
  return out;
}

PlaneGraph PlaneGraph::side_subgraph(const std::vector<int>& cycle, CycleSide side) const {
  CycleSplit sp = split_by_cycle(cycle);
  const std::vector<int>& keep_side = side == CycleSide::interior ? sp.interior : sp.exterior;
  const int want = side == CycleSide::interior ? +1 : -1;
  std::set<int> kept(cycle.begin(), cycle.end());
  kept.insert(keep_side.begin(), keep_side.end());
  std::set<int> on_cycle(cycle.begin(), cycle.end());

  // Chords of the cycle belong to the side their slots lie on; recompute the
  // slot classification (same scan as split_by_cycle).
  const int k = static_cast<int>(cycle.size());
  std::map<std::pair<int, int>, int> chord_side;
  for (int i = 0; i < k; ++i) {
    int v = cycle[i], prev = cycle[(i - 1 + k) % k], next = cycle[(i + 1) % k];
    const auto& r = rot_[g_.index_of(v)];
    const int d = static_cast<int>(r.size());
    int pn = -1, pp = -1;
    for (int j = 0; j < d; ++j) {
      if (r[j] == next) pn = j;
      if (r[j] == prev) pp = j;
    }
    int s = +1;
    for (int step = 1; step < d; ++step) {
      int j = (pn + step) % d;
      if (j == pp) { s = -1; continue; }
      if (on_cycle.count(r[j])) {
        auto key = std::minmax(v, r[j]);
        auto [it, fresh] = chord_side.insert({{key.first, key.second}, s});
        if (!fresh && it->second != s)
          fail(Errc::internal, "chord classified on both sides");
      }
    }
  }

  // Keep edges inside the kept set, filtering chords on the far side; the
  // inherited rotation restricted to kept neighbors stays a valid embedding.
  auto edge_kept = [&](int u, int v) {
    if (!kept.count(u) || !kept.count(v)) return false;
    bool uc = on_cycle.count(u) > 0, vc = on_cycle.count(v) > 0;
    if (uc && vc) {
      // Cycle edge or chord?
      bool consecutive = false;
      for (int i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        if ((a == u && b == v) || (a == v && b == u)) consecutive = true;
      }
      if (consecutive) return true;
      auto key = std::minmax(u, v);
      return chord_side.at({key.first, key.second}) == want;
    }
    return true;
  };

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g_.edges())
    if (edge_kept(u, v)) edges.emplace_back(u, v);
  Graph sub = Graph::from_edges(edges, std::vector<int>(kept.begin(), kept.end()));
  std::vector<std::vector<int>> rot(sub.vertex_count());
  for (int i = 0; i < sub.vertex_count(); ++i) {
    int label = sub.label_at(i);
    for (int w : rot_[g_.index_of(label)])
      if (edge_kept(label, w)) rot[i].push_back(w);
  }
  return PlaneGraph(sub, std::move(rot));
}

}  // namespace tricolor
