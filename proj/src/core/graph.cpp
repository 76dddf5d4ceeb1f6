#include "core/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tricolor {

namespace {
// Bits strictly above position i; shift-safe for i = 63.
uint64_t bits_above(uint64_t r, int i) { return i >= 63 ? 0 : r >> (i + 1) << (i + 1); }
}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::not_simple: return "not_simple";
    case Errc::disconnected: return "disconnected";
    case Errc::non_planar: return "non_planar";
    case Errc::unknown_vertex: return "unknown_vertex";
    case Errc::unknown_edge: return "unknown_edge";
    case Errc::edge_exists: return "edge_exists";
    case Errc::adjacent_pair: return "adjacent_pair";
    case Errc::not_a_cycle: return "not_a_cycle";
    case Errc::wrong_degree: return "wrong_degree";
    case Errc::neighborhood_not_independent: return "neighborhood_not_independent";
    case Errc::invalid_split: return "invalid_split";
    case Errc::invalid_spec: return "invalid_spec";
    case Errc::result_not_simple: return "result_not_simple";
    case Errc::diagonal_present: return "diagonal_present";
    case Errc::too_many_triangles: return "too_many_triangles";
    case Errc::invalid_constraints: return "invalid_constraints";
    case Errc::improper_partial: return "improper_partial";
    case Errc::not_critical: return "not_critical";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::bad_header: return "bad_header";
    case Errc::truncated: return "truncated";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

Graph Graph::from_edges(const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& extra_labels) {
  Graph g;
  std::vector<int> labels;
  for (auto [u, v] : edges) {
    labels.push_back(u);
    labels.push_back(v);
  }
  labels.insert(labels.end(), extra_labels.begin(), extra_labels.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int l : labels)
    if (l < 0 || l >= (1 << 30)) fail(Errc::unknown_vertex, "label out of range: " + std::to_string(l));
  if (static_cast<int>(labels.size()) > kMaxVertices)
    fail(Errc::cap_exceeded, "graph exceeds " + std::to_string(kMaxVertices) + " vertices");
  g.labels_ = std::move(labels);
  g.adj_.assign(g.labels_.size(), 0);
  for (auto [u, v] : edges) {
    if (u == v) fail(Errc::not_simple, "self-loop at " + std::to_string(u));
    int i = g.index_of(u), j = g.index_of(v);
    if (g.adj_[i] >> j & 1)
      fail(Errc::not_simple, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.adj_[i] |= 1ull << j;
    g.adj_[j] |= 1ull << i;
  }
  return g;
}

Graph Graph::from_text(const std::string& edge_list) {
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(edge_list);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    std::istringstream head(first);
    long u, v;
    std::string rest;
    if (!(head >> u) || (head >> rest) || !(ls >> v) || (ls >> rest))
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected 'u v'");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return from_edges(edges);
}

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t r : adj_) total += std::popcount(r);
  return total / 2;
}

int Graph::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    fail(Errc::unknown_vertex, "vertex " + std::to_string(label) + " not in graph");
  return static_cast<int>(it - labels_.begin());
}

bool Graph::has_vertex(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Graph::adjacent(int u, int v) const { return adj_[index_of(u)] >> index_of(v) & 1; }

int Graph::degree(int u) const { return std::popcount(adj_[index_of(u)]); }

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  uint64_t r = adj_[index_of(u)];
  while (r) {
    int j = std::countr_zero(r);
    out.push_back(labels_[j]);
    r &= r - 1;
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  const int n = vertex_count();
  for (int i = 0; i < n; ++i) {
    uint64_t r = bits_above(adj_[i], i);  // j > i only
    while (r) {
      int j = std::countr_zero(r);
      out.emplace_back(labels_[i], labels_[j]);
      r &= r - 1;
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      int i = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj_[i] & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return std::popcount(seen) == n;
}

std::vector<std::array<int, 3>> Graph::triangles() const {
  std::vector<std::array<int, 3>> out;
  const int n = vertex_count();
  for (int i = 0; i < n; ++i) {
    uint64_t r = bits_above(adj_[i], i);
    while (r) {
      int j = std::countr_zero(r);
      r &= r - 1;
      uint64_t common = adj_[i] & bits_above(adj_[j], j);
      while (common) {
        int k = std::countr_zero(common);
        common &= common - 1;
        out.push_back({labels_[i], labels_[j], labels_[k]});
      }
    }
  }
  return out;
}

int Graph::triangle_count() const { return static_cast<int>(triangles().size()); }

int Graph::max_degree() const {
  int best = 0;
  for (uint64_t r : adj_) best = std::max(best, std::popcount(r));
  return best;
}

std::string label_set_text(const std::vector<int>& labels) {
  std::string s = "{";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(labels[i]);
  }
  return s + "}";
}

}  // namespace tricolor
