#pragma once
// Combinatorial embeddings. A PlaneGraph is a Graph plus a rotation system
// (cyclic neighbor order per vertex); faces are the orbits of the trace rule
//   next(u -> v) = (v -> w), w = successor of u in rotation(v),
// and Euler's formula n - m + f = 2 is asserted on every construction, which
// makes the rotation system a certificate of planarity.

#include <map>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace tricolor {

// Closed boundary walk: vertices v0 v1 ... v_{l-1}, directed edges vi->vi+1
// cyclically. Walks may repeat vertices when the graph has cut vertices.
struct Face {
  std::vector<int> walk;  // vertex labels
  int length() const { return static_cast<int>(walk.size()); }
  bool is_simple_cycle() const;
  bool contains(int label) const;
};

enum class CycleSide { interior, exterior };

// Partition induced by a (simple) cycle: vertices strictly inside / outside.
struct CycleSplit {
  std::vector<int> cycle;
  std::vector<int> interior;  // sorted labels
  std::vector<int> exterior;  // sorted labels
  bool separating() const { return !interior.empty() && !exterior.empty(); }
};

class PlaneGraph {
 public:
  // Planarity test + embedding via path addition (Demoucron-Malgrange-
  // Pertuiset): embed a cycle, then repeatedly route one fragment path
  // through an admissible face. Deterministic for a given input graph.
  // Errors: non_planar, disconnected (n >= 1 required: unknown_vertex).
  static PlaneGraph embed(const Graph& g);

  // Adopts a caller-supplied rotation system (labels, cyclic neighbor lists).
  // Rejects rotations whose face orbits violate Euler's formula (non_planar).
  static PlaneGraph from_rotation(const Graph& g, const std::vector<std::vector<int>>& rotation);

  // No-throw planarity check (same algorithm as embed).
  static bool is_planar(const Graph& g);

  const Graph& graph() const { return g_; }
  // rotation()[i] lists neighbor labels of labels()[i] in cyclic order.
  const std::vector<std::vector<int>>& rotation() const { return rot_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  std::map<int, int> face_length_census() const;  // length -> count

  // Faces of a given length whose walk is a simple cycle, in faces() order.
  std::vector<const Face*> simple_faces_of_length(int len) const;
  // True iff `cycle` (any rotation/reflection) bounds a face.
  bool is_facial_cycle(const std::vector<int>& cycle) const;

  // Splits by a simple cycle of g (not_a_cycle if the labels do not form
  // one). Deterministic side naming: interior = side seen counterclockwise
  // from the first cycle edge; reversing the cycle swaps the two sides.
  CycleSplit split_by_cycle(const std::vector<int>& cycle) const;

  // Plane subgraph induced by the cycle plus one side (cycle edges, side
  // vertices/edges, attachments, and the chords embedded on that side).
  PlaneGraph side_subgraph(const std::vector<int>& cycle, CycleSide side) const;

 private:
  PlaneGraph(Graph g, std::vector<std::vector<int>> rot);
  void build_faces();  // also Euler-checks

  Graph g_;
  std::vector<std::vector<int>> rot_;  // neighbor labels, cyclic, per label index
  std::vector<Face> faces_;
};

}  // namespace tricolor
