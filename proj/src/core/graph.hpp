#pragma once
// Simple undirected graphs on stable integer labels, capped at 64 vertices so
// adjacency rows fit in one machine word. Values are immutable by convention:
// surgery operations build and return new graphs.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace tricolor {

inline constexpr int kMaxVertices = 64;

class Graph {
 public:
  Graph() = default;

  // Vertex set = union of endpoints plus extra_labels. Rejects self-loops and
  // duplicate edges (not_simple), labels outside [0, 2^30) (unknown_vertex).
  static Graph from_edges(const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& extra_labels = {});
  // Parses "u v" pairs, one per line; blank lines ignored.
  static Graph from_text(const std::string& edge_list);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const;
  const std::vector<int>& labels() const { return labels_; }  // sorted ascending
  bool has_vertex(int label) const;
  bool adjacent(int u, int v) const;
  int degree(int u) const;
  std::vector<int> neighbors(int u) const;                   // sorted labels
  std::vector<std::pair<int, int>> edges() const;            // u < v, lexicographic

  bool is_connected() const;
  // All triangles as sorted label triples, lexicographic.
  std::vector<std::array<int, 3>> triangles() const;
  int triangle_count() const;
  int max_degree() const;

  // Index view for algorithms: vertices 0..n-1 in label order.
  int index_of(int label) const;  // unknown_vertex if absent
  int label_at(int idx) const { return labels_[idx]; }
  uint64_t row(int idx) const { return adj_[idx]; }

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<int> labels_;     // sorted
  std::vector<uint64_t> adj_;   // adj_[i] bit j <=> labels_[i] ~ labels_[j]
};

// Canonical label-set text like "{0, 2, 5}" used in error messages and traces.
std::string label_set_text(const std::vector<int>& labels);

}  // namespace tricolor
