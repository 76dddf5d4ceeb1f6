#pragma once
// Corpus machinery: canonical labeling (isomorphism-class keys), exhaustive
// isomorph-free enumeration of small connected planar graphs, planar_code
// serialization, and the named families (K4', iterated DHGO compositions).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/plane.hpp"

namespace tricolor {

// Canonical key: adjacency rows of the canonically relabeled graph (labels
// play no role). Equal keys <=> isomorphic graphs.
std::vector<uint64_t> canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Hard cap on the exhaustive-enumeration order (level sizes explode beyond).
inline constexpr int kEnumMaxN = 10;

// All connected planar graphs on exactly n vertices, one per isomorphism
// class, labels 0..n-1, ordered by canonical key. Cached per level.
const std::vector<Graph>& connected_planar_level(int n);
// Same, restricted to triangle census <= max_triangles. Pruning the growth
// tree by census is complete: deleting a vertex never adds a triangle, and
// every connected graph has a non-cut vertex, so every bounded-census graph
// has a bounded-census connected parent.
const std::vector<Graph>& connected_planar_level(int n, int max_triangles);
// Same, without the planarity restriction (oracle cross-checks).
const std::vector<Graph>& connected_level(int n);

struct CorpusFilter {
  int max_n = 7;
  std::optional<int> max_triangles;   // triangle-census bound
  std::vector<std::string> tags;      // see kFilterTags
  std::string slice_line() const;     // canonical manifest line
  uint64_t hash() const;              // FNV-1a of slice_line()
};

// Recognized tags: "has-4-face" (canonical embedding has a simple 4-face),
// "k4prime-free", "has-independent-2plus-vertex" (some vertex of degree >= 2
// with independent neighborhood).
extern const std::vector<std::string> kFilterTags;

// Applies the non-size filter parts to one graph.
bool filter_admits(const CorpusFilter& f, const Graph& g, const PlaneGraph& pg);

// Streams every admitted (graph, embedding) pair for n = 1..max_n in
// deterministic order. Errors: cap_exceeded (max_n > kEnumMaxN), invalid_spec
// (unknown tag). Return false from the visitor to stop early.
void enumerate_small_planar(const CorpusFilter& f,
                            const std::function<bool(const Graph&, const PlaneGraph&)>& visit);

// Manifest: named corpus slices, text format "slice NAME max_n=N
// max_triangles=T|inf tags=a,b|-" one per line.
struct Manifest {
  std::vector<std::pair<std::string, CorpusFilter>> slices;
  std::string to_text() const;
  static Manifest parse(const std::string& text);  // parse_error on bad lines
  const CorpusFilter* find(const std::string& name) const;
};

// ---- planar_code -----------------------------------------------------------
// Binary stream: ASCII header ">>planar_code<<", then per graph: byte n,
// then for each vertex 1..n its neighbors (1-based bytes) in rotation order,
// 0-terminated. Vertex labels map to bytes as sorted-label-order + 1.

std::vector<uint8_t> write_planar_code(const std::vector<const PlaneGraph*>& graphs);
std::vector<uint8_t> write_planar_code(const PlaneGraph& g);
// Errors carry the byte offset: bad_header, truncated, not_simple,
// parse_error (neighbor byte out of range), non_planar (Euler fails).
std::vector<PlaneGraph> read_planar_code(const std::vector<uint8_t>& bytes);

// ---- named families --------------------------------------------------------

// K4 with labels 0..3.
Graph make_k4();
// K4' on labels 0..6: apex 0, subdivision vertices 1 2 3, triangle 4 5 6.
Graph make_k4prime();

// Every graph obtainable by `depth` nested DHGO compositions starting from
// K4 (depth 0 = {K4}), one per isomorphism class, canonical-key order.
// n grows by 3 per composition; cap_exceeded if 4 + 3*depth > max_n.
// The seed is recorded in reports for provenance but cannot perturb the
// stream: enumeration is exhaustive and canonically ordered.
std::vector<Graph> generate_4ore(int depth, uint64_t seed, int max_n = 16);

uint64_t fnv1a(const std::string& s);

}  // namespace tricolor
